#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctconfig/e1_page.hpp"

namespace ctconfig {

/* Basis monomial of the invariant wedge complex for n points: a word of
 * n-2r ring letters and a word of r suspended ring letters (each suspended
 * letter carries the degree shift N-1). Words are kept sorted by
 * (degree, index); letters of odd (shifted) degree never repeat. */
struct WedgeMonomial {
    std::vector<int> xword;
    std::vector<int> yword;

    auto operator<=>(const WedgeMonomial&) const = default;
    int pair_count() const { return (int)yword.size(); }
    std::string str(const PDAlgebra& h) const;
};

struct WedgeElement {
    int n = 0;
    std::map<WedgeMonomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
};

void add_term(WedgeElement& e, const WedgeMonomial& m, const Scalar& c);
WedgeElement wedge_add(const WedgeElement& a, const WedgeElement& b);
WedgeElement wedge_scale(const WedgeElement& a, const Scalar& c);
bool wedge_equal(const WedgeElement& a, const WedgeElement& b);

std::vector<int> shifted_degrees(const PDAlgebra& h);
int wedge_total_degree(const PDAlgebra& h, const WedgeMonomial& m);

/* Builds coeff * (wedge of xletters) (x) (wedge of suspended yletters),
 * canonically sorted; zero when an odd letter repeats. */
WedgeElement wedge_term(const PDAlgebra& h, int n, std::vector<int> xletters,
                        std::vector<int> yletters, const Scalar& coeff);

/* Unit: (n-th power of the ring unit) / n!. */
WedgeElement wedge_unit(const PDAlgebra& h, int n);

/* Monomial basis grouped by (total degree, pair count). Even N only. */
std::map<std::pair<int, int>, std::vector<WedgeMonomial>> wedge_basis(const PDAlgebra& h,
                                                                      int n);

/* The product transported from the invariant subalgebra of the first page:
 * split off pairs of letters, contract them into the suspended letters of
 * the other factor, and multiply the remaining letters componentwise. */
WedgeElement wedge_multiply(const PDAlgebra& h, const WedgeElement& a, const WedgeElement& b);

/* Differential: (degree, r) -> (degree+1, r-1). Acts as a derivation with
 * d(x) = 0 and d(sa) = (1/2) sum_k (-1)^{|dual_k|} (a b_k) ^ dual_k. */
WedgeElement wedge_differential(const PDAlgebra& h, const WedgeElement& a);

/* Embedding of the wedge complex onto the fixed subspace of the first page:
 * a sum over sets of disjoint vertex pairs and assignment bijections. */
E1Element invariant_embedding(const PDAlgebra& h, const WedgeElement& a);

/* Sets of r disjoint ordered pairs {(i_1,j_1),...}, i_k < j_k,
 * i_1 < ... < i_r, on vertices 1..n. */
std::vector<std::vector<std::pair<int, int>>> pair_partitions(int n, int r);
mpz_class pair_partition_count(int n, int r);

/* ---- structure maps on words (used by the product and by the
 *      commuting-square checks) ---- */

/* A combination of words (canonically sorted for wedge words, position-exact
 * for tensor words). */
using WordCombo = std::map<std::vector<int>, Scalar>;

void add_word(WordCombo& combo, const std::vector<int>& w, const Scalar& c);

/* Symmetrization of a wedge word into tensors; `shifted` selects the
 * suspended degree table. rho is normalized by 1/m! (the projector form),
 * rho_raw is the plain signed sum over all arrangements. */
WordCombo rho(const PDAlgebra& h, const std::vector<int>& word, bool shifted);
WordCombo rho_raw(const PDAlgebra& h, const std::vector<int>& word, bool shifted);

/* Pair contraction (1/r!) sum_sigma (x_{s(1)} x_{s(2)}) ^ ... of a wedge
 * word of even length. */
WordCombo red_prime(const PDAlgebra& h, const std::vector<int>& word);

/* Componentwise product of two wedge words of equal length, summed over
 * matchings. */
WordCombo nu_prime(const PDAlgebra& h, const std::vector<int>& u, const std::vector<int>& v);

/* Action of a ring word on a word of suspended letters; result letters stay
 * suspended. */
WordCombo nu_bar_prime(const PDAlgebra& h, const std::vector<int>& u,
                       const std::vector<int>& sv);

/* Splits of a wedge word into (first p letters, last q letters) over all
 * shuffles, with the unshuffle sign. */
struct WordSplit {
    std::vector<int> left, right;
    int sign;
};
std::vector<WordSplit> delta_prime(const PDAlgebra& h, const std::vector<int>& word, int p,
                                   bool shifted);

/* ---- tensor-side counterparts (oracles for the square checks) ---- */

/* Componentwise product of tensor words. */
WordCombo tensor_mult(const PDAlgebra& h, const WordCombo& a, const WordCombo& b);
/* Componentwise action on suspended tensor words, with the explicit sign
 * (-1)^{sum_j |a_j|(|b_1|+..+|b_{j-1}|) + sum_i i|a_i|}. */
WordCombo tensor_action(const PDAlgebra& h, const WordCombo& a, const WordCombo& b);
/* Pairwise contraction of a tensor word of even length. */
WordCombo tensor_red(const PDAlgebra& h, const WordCombo& a);
/* Graded shuffle product of tensor words. */
WordCombo tensor_shuffle(const PDAlgebra& h, const WordCombo& a, const WordCombo& b,
                         bool shifted);

/* ---- the direct-sum presentation as a free graded-commutative algebra ---- */

struct CombinedComplex {
    const PDAlgebra* h = nullptr;
    /* d of the i-th suspended generator, as two-letter ring words. */
    std::vector<WordCombo> dy;

    int x_degree(int i) const { return h->degrees[i]; }
    int y_degree(int i) const { return h->degrees[i] + h->top_degree - 1; }
    std::string dy_str(int i) const;
};

CombinedComplex combined_complex(const PDAlgebra& h);

/* Differential of a monomial through the free-derivation route: substitute
 * the generator differential and renormalize the mixed word. Independent of
 * wedge_differential. */
WedgeElement combined_differential(const CombinedComplex& cc, int n, const WedgeMonomial& m);

}  // namespace ctconfig
