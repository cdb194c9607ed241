#include "ctconfig/scalar.hpp"

namespace ctconfig {

Field Field::prime(long p)
{
    if (p < 2)
        throw FieldError("field characteristic must be a prime, got " + std::to_string(p));
    mpz_class z(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
        throw FieldError("field characteristic must be a prime, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const
{
    return p_ == 0 ? "q" : "fp:" + std::to_string(p_);
}

Scalar Scalar::integer(long v, const Field& f)
{
    Scalar s;
    s.value_ = v;
    s.p_ = f.characteristic();
    s.reduce();
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& v, const Field& f)
{
    Scalar s;
    s.value_ = v;
    s.value_.canonicalize();
    s.p_ = f.characteristic();
    s.reduce();
    return s;
}

Scalar Scalar::from_string(const std::string& str, const Field& f)
{
    mpq_class v;
    if (v.set_str(str, 10) != 0)
        throw FieldError("cannot parse coefficient '" + str + "'");
    if (v.get_den() == 0)
        throw FieldError("zero denominator in coefficient '" + str + "'");
    v.canonicalize();
    return from_mpq(v, f);
}

Field Scalar::field() const
{
    return p_ == 0 ? Field::rationals() : Field::prime(p_);
}

/* Prime-field elements are stored as an integer residue in [0,p) with
 * denominator 1. Rational input p/q is mapped to p * q^{-1} mod p. */
void Scalar::reduce()
{
    if (p_ == 0)
        return;
    mpz_class p(p_);
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    if (den != 1) {
        mpz_class den_inv;
        if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw FieldError("division by the characteristic " + std::to_string(p_));
        num *= den_inv;
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    value_ = mpq_class(r);
}

void Scalar::check_compatible(const Scalar& o) const
{
    if (p_ != o.p_)
        throw FieldError("mixing elements of different fields");
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.value_ = -r.value_;
    r.reduce();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_compatible(o);
    Scalar r = *this;
    r.value_ += o.value_;
    r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    check_compatible(o);
    Scalar r = *this;
    r.value_ -= o.value_;
    r.reduce();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_compatible(o);
    Scalar r = *this;
    r.value_ *= o.value_;
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    check_compatible(o);
    return *this * o.inverse();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw FieldError("division by zero");
    Scalar r = *this;
    if (p_ == 0) {
        r.value_ = 1 / value_;
        return r;
    }
    mpz_class p(p_), inv;
    mpz_class num = value_.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw FieldError("element not invertible mod " + std::to_string(p_));
    r.value_ = mpq_class(inv);
    r.reduce();
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    return p_ == o.p_ && value_ == o.value_;
}

mpz_class factorial(long n)
{
    mpz_class r = 1;
    for (long k = 2; k <= n; ++k)
        r *= k;
    return r;
}

}  // namespace ctconfig
