#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctconfig/cohomology.hpp"

using namespace ctconfig;

namespace {
const Field Q = Field::rationals();

Scalar q(long num, long den = 1)
{
    return Scalar::from_mpq(mpq_class(num, den), Q);
}
}  // namespace

TEST_CASE("betti numbers of small configuration spaces")
{
    SUBCASE("two points on the two-sphere")
    {
        PDAlgebra h = builtin_ring("sphere:2", Q);
        auto wc = build_wedge_complex(h, 2);
        CHECK(wc.complex.square_violations().empty());
        CHECK(betti(wc.complex) == std::map<int, long>{{0, 1}});
    }
    SUBCASE("projective plane, two points")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        auto wc = build_wedge_complex(h, 2);
        CHECK(betti(wc.complex) == std::map<int, long>{{0, 1}, {2, 1}, {4, 1}});
    }
    SUBCASE("projective plane, four points")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        auto wc = build_wedge_complex(h, 4);
        CHECK(betti(wc.complex) ==
              std::map<int, long>{{0, 1}, {2, 1}, {4, 1}, {7, 1}, {9, 1}, {11, 1}});
    }
}

TEST_CASE("euler characteristic is chain-level exact")
{
    for (const char* name : {"sphere:2", "cp:2", "surface:1"}) {
        PDAlgebra h = builtin_ring(name, Q);
        for (int n = 1; n <= 3; ++n) {
            auto wc = build_wedge_complex(h, n);
            long chain = 0, coh = 0;
            for (const auto& [deg, labels] : wc.complex.basis_labels)
                chain += (deg % 2 == 0 ? 1 : -1) * (long)labels.size();
            for (const auto& [deg, b] : betti(wc.complex))
                coh += (deg % 2 == 0 ? 1 : -1) * b;
            CHECK_MESSAGE(chain == coh, name << " n=" << n);
        }
    }
}

TEST_CASE("class coordinates")
{
    PDAlgebra h = builtin_ring("cp:2", Q);
    auto wc = build_wedge_complex(h, 3);
    auto coh = cohomology(wc.complex);
    CHECK(coh.betti() == betti(wc.complex));

    for (const auto& [deg, dc] : coh.by_degree) {
        for (size_t i = 0; i < dc.reps.size(); ++i) {
            Vec c = coh.class_coordinates(deg, dc.reps[i]);
            for (size_t j = 0; j < dc.reps.size(); ++j)
                CHECK(c[j] == (i == j ? Scalar::one(Q) : Scalar::zero(Q)));
        }
    }

    // coboundaries reduce to zero
    const SparseMatrix* d2 = wc.complex.differential(2);
    REQUIRE(d2 != nullptr);
    Vec x = zero_vec(d2->cols(), Q);
    x[0] = q(1);
    Vec db = d2->apply(x);
    if (!is_zero_vec(db))
        CHECK(is_zero_vec(coh.class_coordinates(3, db)));
}

TEST_CASE("the product satisfies the Leibniz rule")
{
    for (const char* name : {"cp:2", "surface:1"}) {
        PDAlgebra h = builtin_ring(name, Q);
        const int n = 3;
        std::vector<WedgeMonomial> flat;
        for (const auto& [k, monos] : wedge_basis(h, n))
            flat.insert(flat.end(), monos.begin(), monos.end());
        for (size_t i = 0; i < flat.size(); i += 3)
            for (size_t j = 0; j < flat.size(); j += 4) {
                WedgeElement a, b;
                a.n = b.n = n;
                add_term(a, flat[i], q(1));
                add_term(b, flat[j], q(1));
                WedgeElement lhs = wedge_differential(h, wedge_multiply(h, a, b));
                WedgeElement rhs = wedge_multiply(h, wedge_differential(h, a), b);
                WedgeElement second = wedge_multiply(h, a, wedge_differential(h, b));
                if (wedge_total_degree(h, flat[i]) & 1)
                    second = wedge_scale(second, q(-1));
                rhs = wedge_add(rhs, second);
                CHECK_MESSAGE(wedge_equal(lhs, rhs), name << " pair " << i << "," << j);
            }
    }
}

TEST_CASE("structure constants are representative independent")
{
    PDAlgebra h = builtin_ring("cp:2", Q);
    const int n = 3;
    auto wc = build_wedge_complex(h, n);
    auto coh = cohomology(wc.complex);
    RingTable table = ring_table(wc, coh);

    std::mt19937 rng(777);
    for (const auto& [key, coords] : table.products) {
        const auto& ca = table.classes[key.first];
        const auto& cb = table.classes[key.second];
        // perturb the left representative by a random coboundary
        Vec rep = coh.by_degree.at(ca.degree).reps[ca.index];
        const SparseMatrix* din = wc.complex.differential(ca.degree - 1);
        if (!din || din->cols() == 0)
            continue;
        Vec noise = zero_vec(din->cols(), Q);
        std::uniform_int_distribution<long> val(-3, 3);
        for (auto& s : noise)
            s = q(val(rng));
        Vec shifted = rep;
        Vec delta = din->apply(noise);
        for (size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += delta[i];

        WedgeElement ea = wc.from_coords(ca.degree, shifted);
        WedgeElement eb =
            wc.from_coords(cb.degree, coh.by_degree.at(cb.degree).reps[cb.index]);
        WedgeElement prod = wedge_multiply(h, ea, eb);
        int pdeg = ca.degree + cb.degree;
        Vec again;
        if (coh.dim(pdeg) > 0)
            again = coh.class_coordinates(pdeg, wc.to_coords(prod, pdeg));
        CHECK(again == coords);
    }
}

TEST_CASE("induced product is associative on classes")
{
    PDAlgebra h = builtin_ring("cp:2", Q);
    for (int n : {2, 3}) {
        auto wc = build_wedge_complex(h, n);
        auto coh = cohomology(wc.complex);
        std::vector<std::pair<int, long>> classes;
        for (const auto& [deg, dc] : coh.by_degree)
            for (size_t i = 0; i < dc.reps.size(); ++i)
                classes.push_back({deg, (long)i});
        auto rep_of = [&](std::pair<int, long> c) {
            return wc.from_coords(c.first, coh.by_degree.at(c.first).reps[c.second]);
        };
        for (const auto& a : classes)
            for (const auto& b : classes)
                for (const auto& c : classes) {
                    int deg = a.first + b.first + c.first;
                    WedgeElement lhs = wedge_multiply(
                        h, wedge_multiply(h, rep_of(a), rep_of(b)), rep_of(c));
                    WedgeElement rhs = wedge_multiply(
                        h, rep_of(a), wedge_multiply(h, rep_of(b), rep_of(c)));
                    Vec cl, cr;
                    if (coh.dim(deg) > 0) {
                        cl = coh.class_coordinates(deg, wc.to_coords(lhs, deg));
                        cr = coh.class_coordinates(deg, wc.to_coords(rhs, deg));
                    }
                    CHECK(cl == cr);
                }
    }
}

TEST_CASE("odd-dimensional ring table")
{
    PDAlgebra s3 = builtin_ring("sphere:3", Q);
    RingTable table = odd_ring_table(s3, 2);
    REQUIRE(table.classes.size() == 2);
    CHECK(table.classes[0].degree == 0);
    CHECK(table.classes[1].degree == 3);

    // 1^1 * 1^1 = 2 (1^1), 1^1 * 1^vol = 2 (1^vol), (1^vol)^2 = 0
    CHECK(table.products.at({0, 0}) == Vec{q(2)});
    CHECK(table.products.at({0, 1}) == Vec{q(2)});
    CHECK(is_zero_vec(table.products.at({1, 1})));
}

TEST_CASE("the symmetrized diagonal has a first-page preimage")
{
    // in the two-point model of the two-sphere, the class 1(x)vol + vol(x)1
    // is hit by the differential
    PDAlgebra h = builtin_ring("sphere:2", Q);
    auto ec = build_e1_complex(h, 2);
    const SparseMatrix* d1 = ec.complex.differential(1);
    REQUIRE(d1 != nullptr);

    E1Element target;
    target.n = 2;
    int vol = h.label_index("vol");
    add_term(target, E1Monomial{EdgeMonomial{}, {h.unit, vol}}, q(1));
    add_term(target, E1Monomial{EdgeMonomial{}, {vol, h.unit}}, q(1));
    Vec b = ec.to_coords(target, 2);
    auto x = solve(*d1, b);
    REQUIRE(x.has_value());
    CHECK(d1->apply(*x) == b);
}

TEST_CASE("invariant subcomplex equals the wedge model rationally")
{
    PDAlgebra h = builtin_ring("sphere:2", Q);
    for (int n : {2, 3}) {
        auto wc = build_wedge_complex(h, n);
        auto inv = build_e1_invariant_complex(h, n);
        CHECK(betti(wc.complex) == betti(inv.complex));
        CHECK(inv.complex.square_violations().empty());
    }

    // a ring with two-dimensional middle cohomology exercises the
    // permutation-type dual basis
    PDAlgebra p = product_ring(builtin_ring("sphere:2", Q), builtin_ring("sphere:2", Q));
    for (int n : {2, 3}) {
        auto wc = build_wedge_complex(p, n);
        auto inv = build_e1_invariant_complex(p, n);
        CHECK(betti(wc.complex) == betti(inv.complex));
    }
}
