#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctconfig/e1_page.hpp"

using namespace ctconfig;

namespace {
const Field Q = Field::rationals();

Scalar q(long num, long den = 1)
{
    return Scalar::from_mpq(mpq_class(num, den), Q);
}

E1Element mono(const PDAlgebra& h, int n, std::vector<std::pair<int, int>> edges,
               std::map<int, std::string> labels, Scalar c)
{
    std::vector<int> lab(n, h.unit);
    for (const auto& [v, name] : labels)
        lab[v - 1] = h.label_index(name);
    E1Element e;
    e.n = n;
    add_term(e, E1Monomial{EdgeMonomial{std::move(edges)}, std::move(lab)}, c);
    return e;
}

long total_dim(const std::map<Bidegree, std::vector<E1Monomial>>& basis)
{
    long d = 0;
    for (const auto& [b, m] : basis)
        d += (long)m.size();
    return d;
}
}  // namespace

TEST_CASE("basis dimensions")
{
    PDAlgebra cp2 = builtin_ring("cp:2", Q);
    CHECK(total_dim(e1_basis(cp2, 1)) == 3);
    CHECK(total_dim(e1_basis(cp2, 2)) == 12);  // 9 labels-only + 3 on the edge
    CHECK(total_dim(e1_basis(cp2, 3)) == 60);  // 27 + 3*9 + 2*3

    PDAlgebra t2 = builtin_ring("surface:1", Q);
    CHECK(total_dim(e1_basis(t2, 2)) == 20);  // 16 + 4
    CHECK(total_dim(e1_basis(t2, 4)) == 840);

    CHECK_THROWS_AS(e1_basis(cp2, 9), GuardError);
}

TEST_CASE("multiplication")
{
    PDAlgebra h = builtin_ring("cp:2", Q);

    SUBCASE("disjoint labels")
    {
        E1Element a = mono(h, 2, {}, {{1, "x"}}, q(1));
        E1Element b = mono(h, 2, {}, {{2, "x"}}, q(1));
        E1Element expect = mono(h, 2, {}, {{1, "x"}, {2, "x"}}, q(1));
        CHECK(e1_equal(e1_multiply(h, a, b), expect));
    }
    SUBCASE("label transported to the root")
    {
        E1Element a = mono(h, 2, {}, {{2, "x"}}, q(1));
        E1Element b = mono(h, 2, {{1, 2}}, {}, q(1));
        E1Element expect = mono(h, 2, {{1, 2}}, {{1, "x"}}, q(1));
        CHECK(e1_equal(e1_multiply(h, a, b), expect));
    }
    SUBCASE("edges straighten")
    {
        E1Element a = mono(h, 3, {{1, 3}}, {}, q(1));
        E1Element b = mono(h, 3, {{2, 3}}, {}, q(1));
        E1Element expect = e1_add(mono(h, 3, {{1, 2}, {2, 3}}, {}, q(1)),
                                  mono(h, 3, {{1, 2}, {1, 3}}, {}, q(-1)));
        CHECK(e1_equal(e1_multiply(h, a, b), expect));
    }
    SUBCASE("graded commutativity with odd labels")
    {
        PDAlgebra t2 = builtin_ring("surface:1", Q);
        E1Element a = mono(t2, 2, {}, {{1, "a1"}}, q(1));
        E1Element b = mono(t2, 2, {}, {{2, "b1"}}, q(1));
        E1Element ab = e1_multiply(t2, a, b);
        E1Element ba = e1_multiply(t2, b, a);
        CHECK(e1_equal(ab, e1_scale(ba, q(-1))));
    }
    SUBCASE("associativity sample")
    {
        PDAlgebra t2 = builtin_ring("surface:1", Q);
        auto basis = e1_basis(t2, 3);
        std::vector<E1Monomial> flat;
        for (const auto& [bd, monos] : basis)
            flat.insert(flat.end(), monos.begin(), monos.end());
        size_t step = flat.size() / 7 + 1;
        for (size_t i = 0; i < flat.size(); i += step)
            for (size_t j = 1; j < flat.size(); j += step)
                for (size_t k = 2; k < flat.size(); k += step) {
                    E1Element a, b, c;
                    a.n = b.n = c.n = 3;
                    add_term(a, flat[i], q(1));
                    add_term(b, flat[j], q(1));
                    add_term(c, flat[k], q(1));
                    CHECK(e1_equal(e1_multiply(t2, e1_multiply(t2, a, b), c),
                                   e1_multiply(t2, a, e1_multiply(t2, b, c))));
                }
    }
}

TEST_CASE("first differential")
{
    SUBCASE("two-sphere edge")
    {
        PDAlgebra s2 = builtin_ring("sphere:2", Q);
        E1Element e12 = mono(s2, 2, {{1, 2}}, {}, q(1));
        E1Element expect = e1_add(mono(s2, 2, {}, {{2, "vol"}}, q(1)),
                                  mono(s2, 2, {}, {{1, "vol"}}, q(1)));
        CHECK(e1_equal(e1_d1(s2, e12), expect));
    }
    SUBCASE("labels are closed")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        E1Element a = mono(h, 3, {}, {{1, "x"}, {2, "x2"}}, q(1));
        CHECK(e1_d1(h, a).is_zero());
    }
    SUBCASE("labelled edge over the projective plane")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        E1Element a = mono(h, 2, {{1, 2}}, {{1, "x"}}, q(1));
        E1Element expect = e1_add(mono(h, 2, {}, {{1, "x"}, {2, "x2"}}, q(1)),
                                  mono(h, 2, {}, {{1, "x2"}, {2, "x"}}, q(1)));
        CHECK(e1_equal(e1_d1(h, a), expect));
    }
}

TEST_CASE("permutation action")
{
    SUBCASE("edge flip sign by parity")
    {
        PDAlgebra s2 = builtin_ring("sphere:2", Q);
        PDAlgebra s3 = builtin_ring("sphere:3", Q);
        E1Element e_even = mono(s2, 2, {{1, 2}}, {}, q(1));
        E1Element e_odd = mono(s3, 2, {{1, 2}}, {}, q(1));
        std::vector<int> swap12 = {2, 1};
        CHECK(e1_equal(sigma_act(s2, swap12, e_even), e_even));
        CHECK(e1_equal(sigma_act(s3, swap12, e_odd), e1_scale(e_odd, q(-1))));
    }
    SUBCASE("identity")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        std::vector<int> id = {1, 2, 3};
        for (const auto& [bd, monos] : e1_basis(h, 3))
            for (const auto& m : monos) {
                E1Element e;
                e.n = 3;
                add_term(e, m, q(1));
                CHECK(e1_equal(sigma_act(h, id, e), e));
            }
    }
    SUBCASE("group law with odd labels")
    {
        PDAlgebra t2 = builtin_ring("surface:1", Q);
        auto perms = permutations(3);
        auto basis = e1_basis(t2, 3);
        std::vector<E1Monomial> flat;
        for (const auto& [bd, monos] : basis)
            flat.insert(flat.end(), monos.begin(), monos.end());
        for (const auto& p1 : perms)
            for (const auto& p2 : perms) {
                std::vector<int> composed(3);
                for (int v = 1; v <= 3; ++v)
                    composed[v - 1] = p1[p2[v - 1] - 1];
                for (size_t i = 0; i < flat.size(); i += 17) {
                    E1Element e;
                    e.n = 3;
                    add_term(e, flat[i], q(1));
                    CHECK(e1_equal(sigma_act(t2, p1, sigma_act(t2, p2, e)),
                                   sigma_act(t2, composed, e)));
                }
            }
    }
}

TEST_CASE("transpositions commute with the product and the projector")
{
    PDAlgebra h = builtin_ring("surface:1", Q);
    const int n = 3;
    auto basis = e1_basis(h, n);
    std::vector<E1Monomial> flat;
    for (const auto& [bd, monos] : basis)
        flat.insert(flat.end(), monos.begin(), monos.end());

    std::vector<std::vector<int>> taus;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            std::vector<int> tau(n);
            for (int v = 1; v <= n; ++v)
                tau[v - 1] = v;
            std::swap(tau[a - 1], tau[b - 1]);
            taus.push_back(tau);
        }

    for (const auto& tau : taus) {
        for (size_t i = 0; i < flat.size(); i += 23)
            for (size_t j = 3; j < flat.size(); j += 29) {
                E1Element a, b;
                a.n = b.n = n;
                add_term(a, flat[i], q(1));
                add_term(b, flat[j], q(1));
                E1Element lhs = sigma_act(h, tau, e1_multiply(h, a, b));
                E1Element rhs = e1_multiply(h, sigma_act(h, tau, a), sigma_act(h, tau, b));
                CHECK(e1_equal(lhs, rhs));
            }
        // the projector is equivariant: A(sigma a) = A(a)
        for (size_t i = 0; i < flat.size(); i += 37) {
            E1Element a;
            a.n = n;
            add_term(a, flat[i], q(1));
            CHECK(e1_equal(average_project(h, sigma_act(h, tau, a)), average_project(h, a)));
        }
    }
}

TEST_CASE("averaging")
{
    SUBCASE("orbit of one edge")
    {
        PDAlgebra s2 = builtin_ring("sphere:2", Q);
        E1Element e12 = mono(s2, 3, {{1, 2}}, {}, q(1));
        E1Element expect = e1_add(
            e1_add(mono(s2, 3, {{1, 2}}, {}, q(1, 3)), mono(s2, 3, {{1, 3}}, {}, q(1, 3))),
            mono(s2, 3, {{2, 3}}, {}, q(1, 3)));
        CHECK(e1_equal(average_project(s2, e12), expect));
    }
    SUBCASE("star tree dies")
    {
        PDAlgebra s2 = builtin_ring("sphere:2", Q);
        E1Element star = mono(s2, 3, {{1, 2}, {1, 3}}, {}, q(1));
        CHECK(average_project(s2, star).is_zero());
    }
    SUBCASE("projector fixes invariants")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        E1Element sym =
            e1_add(mono(h, 2, {}, {{1, "x"}}, q(1)), mono(h, 2, {}, {{2, "x"}}, q(1)));
        CHECK(e1_equal(average_project(h, sym), sym));
    }
    SUBCASE("characteristic guard")
    {
        PDAlgebra h = builtin_ring("cp:2", Field::prime(3));
        E1Element e = mono(h, 3, {}, {{1, "x"}}, Scalar::one(Field::prime(3)));
        CHECK_THROWS_AS(average_project(h, e), FieldError);
    }
}

TEST_CASE("invariant dimensions")
{
    PDAlgebra cp2 = builtin_ring("cp:2", Q);
    CHECK(invariants_basis(cp2, 1).total_dim() == 3);
    CHECK(invariants_basis(cp2, 2).total_dim() == 9);  // Sym^2 H + H on the edge

    PDAlgebra s2 = builtin_ring("sphere:2", Q);
    CHECK(invariants_basis(s2, 2).total_dim() == 5);  // 3 + 2
}

TEST_CASE("odd-dimensional route")
{
    PDAlgebra s3 = builtin_ring("sphere:3", Q);
    for (int n : {2, 3}) {
        OddCheck oc = odd_invariants_check(s3, n);
        CHECK(oc.passes);
        CHECK(oc.betti == std::map<int, long>{{0, 1}, {3, 1}});
    }

    PDAlgebra s1xs2 = product_ring(builtin_ring("torus:1", Q), builtin_ring("sphere:2", Q));
    OddCheck oc = odd_invariants_check(s1xs2, 2);
    CHECK(oc.passes);
    CHECK(oc.betti ==
          std::map<int, long>{{0, 1}, {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 1}});

    PDAlgebra s2 = builtin_ring("sphere:2", Q);
    CHECK_THROWS_AS(odd_invariants_check(s2, 2), std::invalid_argument);
}
