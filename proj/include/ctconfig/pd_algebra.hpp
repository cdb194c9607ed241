#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ctconfig/linalg.hpp"
#include "ctconfig/scalar.hpp"

namespace ctconfig {

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Element of the ring, as a dense coordinate vector over the basis. */
using HElem = Vec;

/* The diagonal class as an element of H (x) H, homogeneous of degree N. */
struct DiagonalClass {
    std::vector<std::tuple<int, int, Scalar>> terms;  // (left, right, coeff)
};

/* A finite graded commutative unital algebra with a fundamental class and a
 * nondegenerate multiplication pairing into the top degree. */
class PDAlgebra {
public:
    std::string name;
    int top_degree = 0;  // N, the dimension of the underlying manifold
    Field field;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    int unit = 0;
    int fundamental = 0;
    /* mult[i][j] = basis expansion of b_i * b_j */
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mult;

    int dim() const { return (int)labels.size(); }
    bool even_dimensional() const { return top_degree % 2 == 0; }

    HElem zero_elem() const { return zero_vec(dim(), field); }
    HElem basis_elem(int i) const;
    const std::vector<std::pair<int, Scalar>>& multiply_basis(int i, int j) const
    {
        return mult[i][j];
    }
    HElem multiply(const HElem& a, const HElem& b) const;
    int degree_of(const HElem& a) const;  // -1 for 0 or inhomogeneous
    int label_index(const std::string& label) const;  // -1 when absent
};

/* Every violated axiom, empty when the ring is a valid Poincare-duality
 * algebra. Violations are data, not exceptions. */
std::vector<std::string> validate(const PDAlgebra& h);

/* The dual basis b_i' with  b_i * b_j' = delta_ij * fundamental class.
 * Throws RingError when the pairing is singular. */
std::vector<HElem> dual_basis(const PDAlgebra& h);

DiagonalClass diagonal_class(const PDAlgebra& h);

/* Built-in rings, by spec name: "sphere:<N>", "cp:<m>", "surface:<g>",
 * "torus:<k>" (alias "cp2" = "cp:2"). */
PDAlgebra builtin_ring(const std::string& name, const Field& f);

/* Graded tensor product with Koszul signs. */
PDAlgebra product_ring(const PDAlgebra& a, const PDAlgebra& b);

PDAlgebra parse_ring_json(const std::string& text, const Field& f);
PDAlgebra parse_ring_file(const std::string& path, const Field& f);

/* Structural equality: same basis labels, degrees, distinguished elements
 * and multiplication table (names may differ). */
bool rings_equal(const PDAlgebra& a, const PDAlgebra& b);

}  // namespace ctconfig
