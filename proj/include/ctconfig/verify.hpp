#pragma once

#include <string>
#include <vector>

#include "ctconfig/cohomology.hpp"

namespace ctconfig {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    void merge(const SuiteResult& o);
};

/* Betti numbers of unordered configurations of the complex projective plane,
 * n = 1..n_max, against the known class list. */
SuiteResult verify_cp2_betti(const Field& f, int n_max = 6);

/* Structure constants of the same rings. */
SuiteResult verify_cp2_ring(const Field& f, int n_max = 6);

/* Wedge-model Betti numbers equal the averaged fixed-subcomplex Betti
 * numbers, for the standard even-dimensional test rings. */
SuiteResult verify_oracle_equivalence(const Field& f, int n_max = 4);

/* The embedding: injectivity, image = fixed subspace, chain map, algebra
 * map (exhaustive through n = 3, sampled at n = 4). */
SuiteResult verify_phi_suite(const Field& f, int n_max = 4);

/* Same checks for a single ring and point count. */
SuiteResult verify_phi_for(const PDAlgebra& h, int n);

/* Free-configuration counts: spanning-tree dimension and the factored
 * Poincare polynomial against direct enumeration. */
SuiteResult verify_free_counts(int n_max = 6);

/* Fixed subspaces of the spanning-tree component. */
SuiteResult verify_tree_invariants(int n_max = 5);

/* Disjoint-pair-set counts against the closed formula. */
SuiteResult verify_pair_counts(int n_max = 8);

/* Odd-dimensional route on sphere:3 and torus:1 x sphere:2. */
SuiteResult verify_odd_dimension(const Field& f, int n_max = 4);

/* Differential squares, equivariance, averaging, the four symmetrization
 * squares, and the invariants-commute-with-cohomology dimension check. */
SuiteResult verify_property_suites(const Field& f, int n_max = 4);

/* Builtin rings validate; product rings validate; Euler characteristics. */
SuiteResult verify_ring_axioms(const Field& f);

}  // namespace ctconfig
