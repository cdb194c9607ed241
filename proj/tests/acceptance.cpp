/* Acceptance suite: one pass/fail line per criterion. All checks are exact;
 * no tolerances. Returns nonzero when any criterion fails. */

#include <iostream>

#include "ctconfig/cli.hpp"
#include "ctconfig/verify.hpp"

using namespace ctconfig;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, const SuiteResult& res)
{
    bool pass = res.all_pass();
    std::cout << "criterion " << criterion << " (" << what << "): "
              << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) {
        ++failures;
        for (const auto& c : res.checks)
            if (!c.pass)
                std::cout << "    failed: " << c.name
                          << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    }
}

void report_flat(int criterion, const std::string& what, bool pass,
                 const std::string& detail = "")
{
    std::cout << "criterion " << criterion << " (" << what << "): "
              << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) {
        ++failures;
        if (!detail.empty())
            std::cout << "    " << detail << "\n";
    }
}

}  // namespace

int main()
{
    const Field Q = Field::rationals();
    const Field F101 = Field::prime(101);

    // 1. Betti numbers of configurations of the projective plane, n = 1..6
    report(1, "cp2 betti numbers, n=1..6", verify_cp2_betti(Q, 6));

    // 2. structure constants of the same rings
    report(2, "cp2 structure constants", verify_cp2_ring(Q, 6));

    // 3. wedge model vs averaged fixed subcomplex
    report(3, "oracle equivalence, n<=4", verify_oracle_equivalence(Q, 4));

    // 4. the embedding is an isomorphism onto the invariants
    report(4, "embedding suite, n<=4", verify_phi_suite(Q, 4));

    // 5. free configuration counts
    report(5, "free configuration counts, n<=6", verify_free_counts(6));

    // 6. spanning-tree invariants
    report(6, "tree invariants, n=3..5", verify_tree_invariants(5));

    // 7. disjoint-pair-set counts
    report(7, "pair-set counts, n<=8", verify_pair_counts(8));

    // 8. odd-dimensional manifolds
    report(8, "odd dimension, n<=4", verify_odd_dimension(Q, 4));

    // 9. property suites
    {
        SuiteResult res = verify_property_suites(Q, 4);
        res.merge(verify_ring_axioms(Q));
        report(9, "property suites, n<=4", res);
    }

    // 10. field robustness: criteria 1-3 over F_101, and rejection of p <= n
    {
        SuiteResult res;
        res.merge(verify_cp2_betti(F101, 6));
        res.merge(verify_cp2_ring(F101, 6));
        res.merge(verify_oracle_equivalence(F101, 4));
        bool rejected =
            cli::run({"betti", "--ring", "builtin:cp2", "--n", "3", "--field", "fp:3"}) == 2;
        res.add("fp:3 with n=3 exits 2", rejected);
        report(10, "field robustness over fp:101", res);
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return 1;
}
