#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "ctconfig/pd_algebra.hpp"

using namespace ctconfig;

namespace {
const Field Q = Field::rationals();

Scalar q(long num, long den = 1)
{
    return Scalar::from_mpq(mpq_class(num, den), Q);
}

HElem elem(const PDAlgebra& h, const std::string& label)
{
    return h.basis_elem(h.label_index(label));
}
}  // namespace

TEST_CASE("builtins validate")
{
    for (const char* name : {"sphere:2", "sphere:3", "cp:1", "cp:2", "cp:3", "surface:0",
                             "surface:1", "surface:2", "torus:1", "torus:2", "torus:3"}) {
        PDAlgebra h = builtin_ring(name, Q);
        CHECK_MESSAGE(validate(h).empty(), name);
    }
    CHECK_THROWS_AS(builtin_ring("klein", Q), RingError);
    CHECK_THROWS_AS(builtin_ring("sphere:0", Q), RingError);
}

TEST_CASE("cp2 structure")
{
    PDAlgebra h = builtin_ring("cp:2", Q);
    CHECK(h.top_degree == 4);
    CHECK(h.dim() == 3);
    CHECK(h.multiply(elem(h, "x"), elem(h, "x")) == elem(h, "x2"));
    CHECK(is_zero_vec(h.multiply(elem(h, "x"), elem(h, "x2"))));

    auto duals = dual_basis(h);
    CHECK(duals[h.label_index("1")] == elem(h, "x2"));
    CHECK(duals[h.label_index("x")] == elem(h, "x"));
    CHECK(duals[h.label_index("x2")] == elem(h, "1"));
}

TEST_CASE("sphere duals and diagonal")
{
    PDAlgebra s2 = builtin_ring("sphere:2", Q);
    auto duals = dual_basis(s2);
    CHECK(duals[0] == elem(s2, "vol"));
    CHECK(duals[1] == elem(s2, "1"));

    DiagonalClass d2 = diagonal_class(s2);
    // 1 (x) vol + vol (x) 1
    REQUIRE(d2.terms.size() == 2);
    std::map<std::pair<int, int>, Scalar> terms;
    for (const auto& [a, b, c] : d2.terms)
        terms[{a, b}] = c;
    CHECK(terms.at({0, 1}) == q(1));
    CHECK(terms.at({1, 0}) == q(1));

    // odd sphere: the two terms carry opposite signs
    PDAlgebra s3 = builtin_ring("sphere:3", Q);
    DiagonalClass d3 = diagonal_class(s3);
    std::map<std::pair<int, int>, Scalar> t3;
    for (const auto& [a, b, c] : d3.terms)
        t3[{a, b}] = c;
    CHECK(t3.at({0, 1}) == -t3.at({1, 0}));
}

TEST_CASE("cp2 diagonal")
{
    PDAlgebra h = builtin_ring("cp:2", Q);
    DiagonalClass d = diagonal_class(h);
    std::map<std::pair<int, int>, Scalar> terms;
    for (const auto& [a, b, c] : d.terms)
        terms[{a, b}] = c;
    int i1 = h.label_index("1"), ix = h.label_index("x"), ix2 = h.label_index("x2");
    CHECK(terms.size() == 3);
    CHECK(terms.at({i1, ix2}) == q(1));
    CHECK(terms.at({ix, ix}) == q(1));
    CHECK(terms.at({ix2, i1}) == q(1));
}

TEST_CASE("diagonal is intertwined by every ring element")
{
    for (const char* name : {"sphere:2", "sphere:3", "cp:2", "surface:1", "torus:2"}) {
        PDAlgebra h = builtin_ring(name, Q);
        DiagonalClass d = diagonal_class(h);
        for (int i = 0; i < h.dim(); ++i) {
            std::map<std::pair<int, int>, Scalar> left, right;
            for (const auto& [a, b, c] : d.terms) {
                for (const auto& [k, v] : h.multiply_basis(i, a)) {
                    left[{k, b}] += c * v;
                    if (left[{k, b}].is_zero())
                        left.erase({k, b});
                }
                Scalar sign = ((h.degrees[i] & 1) && (h.degrees[a] & 1)) ? q(-1) : q(1);
                for (const auto& [k, v] : h.multiply_basis(i, b)) {
                    right[{a, k}] += sign * c * v;
                    if (right[{a, k}].is_zero())
                        right.erase({a, k});
                }
            }
            CHECK_MESSAGE(left == right, name << " element " << h.labels[i]);
        }
    }
}

TEST_CASE("diagonal Koszul symmetry for even rings")
{
    for (const char* name : {"sphere:2", "cp:2", "surface:1", "torus:2"}) {
        PDAlgebra h = builtin_ring(name, Q);
        std::map<std::pair<int, int>, Scalar> orig, swapped;
        for (const auto& [a, b, c] : diagonal_class(h).terms) {
            orig[{a, b}] += c;
            Scalar sign = ((h.degrees[a] & 1) && (h.degrees[b] & 1)) ? q(-1) : q(1);
            swapped[{b, a}] += sign * c;
        }
        CHECK_MESSAGE(orig == swapped, name);
    }
}

TEST_CASE("double dual recovers the basis up to sign")
{
    // the dual of b_i' (characterized by b_j' * x = delta_ij vol) is
    // (-1)^{|b_i||b_i'|} b_i
    for (const char* name : {"sphere:2", "sphere:3", "cp:2", "surface:2", "torus:3"}) {
        PDAlgebra h = builtin_ring(name, Q);
        auto duals = dual_basis(h);
        for (int i = 0; i < h.dim(); ++i) {
            int dual_deg = h.top_degree - h.degrees[i];
            Scalar sign = ((h.degrees[i] & 1) && (dual_deg & 1)) ? q(-1) : q(1);
            HElem candidate = h.zero_elem();
            candidate[i] = sign;
            for (int j = 0; j < h.dim(); ++j) {
                HElem prod = h.multiply(duals[j], candidate);
                Scalar expect = (i == j) ? q(1) : q(0);
                CHECK_MESSAGE(prod[h.fundamental] == expect,
                              name << " " << h.labels[i] << "," << h.labels[j]);
            }
        }
    }
}

TEST_CASE("validation catches broken rings")
{
    SUBCASE("pd failure")
    {
        PDAlgebra h = builtin_ring("cp:2", Q);
        int ix = h.label_index("x");
        h.mult[ix][ix].clear();  // x*x = 0 kills the pairing
        auto bad = validate(h);
        bool found = false;
        for (const auto& v : bad)
            if (v.find("pd-nondegeneracy") != std::string::npos)
                found = true;
        CHECK(found);
    }
    SUBCASE("commutativity failure")
    {
        PDAlgebra h = builtin_ring("surface:1", Q);
        int a = h.label_index("a1"), b = h.label_index("b1");
        h.mult[b][a].clear();
        h.mult[b][a].push_back({h.fundamental, q(1)});  // should be -vol
        auto bad = validate(h);
        bool found = false;
        for (const auto& v : bad)
            if (v.find("graded-commutativity") != std::string::npos)
                found = true;
        CHECK(found);
    }
    SUBCASE("unit failure")
    {
        PDAlgebra h = builtin_ring("sphere:2", Q);
        h.mult[0][1].clear();
        auto bad = validate(h);
        bool found = false;
        for (const auto& v : bad)
            if (v.find("unit") != std::string::npos)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("product rings")
{
    PDAlgebra s2 = builtin_ring("sphere:2", Q);
    PDAlgebra s3 = builtin_ring("sphere:3", Q);

    PDAlgebra p = product_ring(s2, s2);
    CHECK(p.top_degree == 4);
    std::multiset<int> degs(p.degrees.begin(), p.degrees.end());
    CHECK(degs == std::multiset<int>{0, 2, 2, 4});
    CHECK(validate(p).empty());

    PDAlgebra odd = product_ring(s2, s3);
    CHECK(odd.top_degree == 5);
    CHECK(validate(odd).empty());

    // labels stay unique even when the pretty form would collide
    {
        std::set<std::string> seen(p.labels.begin(), p.labels.end());
        CHECK(seen.size() == p.labels.size());
    }

    // product with the one-point ring is the identity
    PDAlgebra pt;
    pt.name = "point";
    pt.top_degree = 0;
    pt.field = Q;
    pt.labels = {"1"};
    pt.degrees = {0};
    pt.unit = 0;
    pt.fundamental = 0;
    pt.mult = {{{{0, q(1)}}}};
    CHECK(validate(pt).empty());
    PDAlgebra same = product_ring(s2, pt);
    CHECK(rings_equal(same, s2));
}

TEST_CASE("genus-one surface is the two-torus")
{
    // same degrees and structure constants index-for-index; only labels differ
    PDAlgebra s = builtin_ring("surface:1", Q);
    PDAlgebra t = builtin_ring("torus:2", Q);
    REQUIRE(s.dim() == t.dim());
    CHECK(s.degrees == t.degrees);
    CHECK(s.unit == t.unit);
    CHECK(s.fundamental == t.fundamental);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            CHECK(s.multiply(s.basis_elem(i), s.basis_elem(j)) ==
                  t.multiply(t.basis_elem(i), t.basis_elem(j)));
}

TEST_CASE("surface duals pair symplectically")
{
    PDAlgebra h = builtin_ring("surface:2", Q);
    auto duals = dual_basis(h);
    for (int g = 1; g <= 2; ++g) {
        int a = h.label_index("a" + std::to_string(g));
        int b = h.label_index("b" + std::to_string(g));
        CHECK(duals[a] == h.basis_elem(b));
        HElem minus_a = h.zero_elem();
        minus_a[a] = q(-1);
        CHECK(duals[b] == minus_a);
    }
}

TEST_CASE("ring file round trip")
{
    PDAlgebra file_ring = parse_ring_file(std::string(CTCONFIG_RING_DIR) + "/cp2.json", Q);
    CHECK(validate(file_ring).empty());
    CHECK(rings_equal(file_ring, builtin_ring("cp:2", Q)));
    CHECK(rings_equal(file_ring, builtin_ring("cp2", Q)));
}

TEST_CASE("ring file errors and normalization")
{
    SUBCASE("missing fundamental")
    {
        CHECK_THROWS_AS(parse_ring_json(R"({"name":"bad","dimension":2,
            "basis":[{"label":"1","degree":0}],"unit":"1"})",
                                        Q),
                        RingError);
    }
    SUBCASE("unknown key")
    {
        CHECK_THROWS_AS(parse_ring_json(R"({"name":"bad","dimension":0,
            "basis":[{"label":"1","degree":0}],"unit":"1","fundamental":"1",
            "extra":true})",
                                        Q),
                        RingError);
    }
    SUBCASE("malformed json")
    {
        CHECK_THROWS_AS(parse_ring_json("{", Q), RingError);
    }
    SUBCASE("wrongly typed field")
    {
        CHECK_THROWS_AS(parse_ring_json(R"({"name":"x","dimension":"four",
            "basis":[{"label":"1","degree":0}],"unit":"1","fundamental":"1"})",
                                        Q),
                        RingError);
    }
    SUBCASE("unreduced coefficient is normalized")
    {
        PDAlgebra h = parse_ring_json(R"({"name":"scaled","dimension":2,
            "basis":[{"label":"1","degree":0},{"label":"u","degree":1},
                     {"label":"v","degree":1},{"label":"w","degree":2}],
            "unit":"1","fundamental":"w",
            "products":[
              {"left":"u","right":"v","value":[{"basis":"w","coeff":"2/4"}]},
              {"left":"v","right":"u","value":[{"basis":"w","coeff":"-2/4"}]}]})",
                                      Q);
        HElem uv = h.multiply(h.basis_elem(1), h.basis_elem(2));
        CHECK(uv[3] == q(1, 2));
        CHECK(validate(h).empty());
    }
}
