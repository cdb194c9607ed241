#pragma once

#include <map>
#include <string>
#include <vector>

#include "ctconfig/arnold.hpp"
#include "ctconfig/pd_algebra.hpp"

namespace ctconfig {

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Combinatorial guard on the number of points; CTCONFIG_MAX_N may lower it. */
int max_point_count();
void check_point_guard(int n);
/* Averaging and the invariant theory need char 0 or p > n. */
void check_char_guard(const Field& f, int n);

/* Basis monomial of the first page for n points: a canonical forest and one
 * ring label per vertex. Labels away from component roots are the unit; a
 * label at the target of an edge can always be transported to the root. */
struct E1Monomial {
    EdgeMonomial forest;
    std::vector<int> labels;

    auto operator<=>(const E1Monomial&) const = default;
    std::string str(const PDAlgebra& h) const;
};

/* (label degree, edge degree) */
struct Bidegree {
    int t = 0;
    int s = 0;
    auto operator<=>(const Bidegree&) const = default;
};

struct E1Element {
    int n = 0;
    std::map<E1Monomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
};

void add_term(E1Element& e, const E1Monomial& m, const Scalar& c);
E1Element e1_add(const E1Element& a, const E1Element& b);
E1Element e1_scale(const E1Element& a, const Scalar& c);
bool e1_equal(const E1Element& a, const E1Element& b);

Bidegree bidegree_of(const PDAlgebra& h, const E1Monomial& m);
int total_degree_of(const PDAlgebra& h, const E1Monomial& m);

/* Full monomial basis, grouped by bidegree. */
std::map<Bidegree, std::vector<E1Monomial>> e1_basis(const PDAlgebra& h, int n);

E1Element e1_multiply(const PDAlgebra& h, const E1Element& a, const E1Element& b);

/* First differential: each edge factor is replaced by the diagonal class
 * distributed onto its endpoints, with Leibniz signs. */
E1Element e1_d1(const PDAlgebra& h, const E1Element& a);

/* Vertex permutation action (perm[v-1] = sigma(v), 1-based). */
E1Element sigma_act(const PDAlgebra& h, const std::vector<int>& perm, const E1Element& a);

/* Reynolds projector (1/n!) sum over all permutations. */
E1Element average_project(const PDAlgebra& h, const E1Element& a);

/* Basis of the fixed subspace, per bidegree, as coordinates in the monomial
 * basis of that bidegree. */
struct InvariantBlock {
    Bidegree bidegree;
    std::vector<E1Monomial> monomials;
    std::vector<Vec> invariants;
};
struct InvariantBasis {
    int n = 0;
    std::vector<InvariantBlock> blocks;
    long total_dim() const;
};
InvariantBasis invariants_basis(const PDAlgebra& h, int n);

/* Odd-dimensional route: every invariant supported on monomials with at
 * least one edge must vanish, and the cohomology is the degree histogram of
 * the n-th graded-exterior power of H. */
struct OddCheck {
    bool passes = false;
    std::vector<std::string> failures;
    std::vector<std::pair<std::vector<int>, int>> wedge_basis;  // (word, degree)
    std::map<int, long> betti;
};
OddCheck odd_invariants_check(const PDAlgebra& h, int n);

}  // namespace ctconfig
