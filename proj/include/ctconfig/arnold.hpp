#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctconfig/linalg.hpp"
#include "ctconfig/scalar.hpp"

namespace ctconfig {

/* A monomial in the edge generators e_{ij} of the configuration algebra of
 * n points in R^N. Canonical form: every edge (i,j) has i < j and the
 * targets j are strictly increasing, so each vertex is the target of at
 * most one edge and the underlying graph is a forest. */
struct EdgeMonomial {
    std::vector<std::pair<int, int>> edges;

    auto operator<=>(const EdgeMonomial&) const = default;

    int edge_count() const { return (int)edges.size(); }
    bool is_canonical() const;
    std::string str() const;  // e.g. "e12.e13"
};

using EdgeCombo = std::map<EdgeMonomial, Scalar>;

void add_term(EdgeCombo& combo, const EdgeMonomial& m, const Scalar& c);

/* Rewrites an arbitrary product of edge generators (any orientation, any
 * order, repeats allowed) into the canonical basis. Relations used:
 *   e_ji = (-1)^N e_ij,   e_ij^2 = 0,   three-term relation on shared targets.
 * For N even the generators have odd degree and anticommute; for N odd they
 * commute. The rewrite repeatedly resolves the largest target with two
 * incoming edges; the sorted target multiset strictly decreases, so it
 * terminates. */
EdgeCombo straighten(int n, bool ambient_even, std::vector<std::pair<int, int>> raw,
                     Scalar coeff);

/* Relabel vertices by the permutation (1-based: perm[v-1] = sigma(v)) and
 * straighten. */
EdgeCombo act(int n, bool ambient_even, const std::vector<int>& perm, const EdgeMonomial& m,
              const Scalar& coeff);

/* All canonical monomials with r edges on n vertices, in lexicographic
 * order. For r = n-1 these are exactly the spanning trees. */
std::vector<EdgeMonomial> edge_basis(int n, int r);

/* Integer polynomial in t, kept as degree -> coefficient. */
struct IntPolynomial {
    std::map<int, mpz_class> coeffs;

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
    IntPolynomial operator*(const IntPolynomial& o) const;
    mpz_class eval_at_one() const;
    std::string str() const;
};

/* Poincare polynomial of the configuration space of n points in R^N,
 * computed by counting canonical basis monomials per edge count. */
IntPolynomial poincare_polynomial(int n, int N);

enum class Subgroup { full, stabilizer_of_1 };

struct TreeInvariants {
    long dimension = 0;
    std::vector<EdgeCombo> basis;  // fixed-subspace basis, combinations of trees
};

/* Fixed subspace of the top component (spanning trees) under the vertex
 * permutation action of the full symmetric group or the stabilizer of
 * vertex 1, computed with the averaging projector over Q. */
TreeInvariants tree_invariants(int n, bool ambient_even, Subgroup g);

/* All permutations of 1..n (or those fixing 1), in lexicographic order. */
std::vector<std::vector<int>> permutations(int n, bool fix_first = false);

}  // namespace ctconfig
