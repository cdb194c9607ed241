#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ctconfig {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Coefficient field: the rationals (characteristic 0) or F_p with p prime. */
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(long p);

    bool is_rational() const { return p_ == 0; }
    long characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    long p_;
};

/* An exact field element. Rationals are kept in lowest terms with positive
 * denominator (mpq canonical form); prime-field residues are kept in [0,p). */
class Scalar {
public:
    Scalar() : p_(0) {}

    static Scalar zero(const Field& f) { return integer(0, f); }
    static Scalar one(const Field& f) { return integer(1, f); }
    static Scalar integer(long v, const Field& f);
    static Scalar from_mpq(const mpq_class& v, const Field& f);
    /* Parses "p", "-p" or "p/q"; normalizes (e.g. "2/4" -> 1/2). */
    static Scalar from_string(const std::string& s, const Field& f);

    Field field() const;
    bool is_zero() const { return value_ == 0; }
    const mpq_class& value() const { return value_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const { return value_.get_str(); }

private:
    void reduce();
    void check_compatible(const Scalar& o) const;

    mpq_class value_;
    long p_;  // 0 = rational
};

mpz_class factorial(long n);

}  // namespace ctconfig
