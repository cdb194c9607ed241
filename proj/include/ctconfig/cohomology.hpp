#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ctconfig/invariant_complex.hpp"

namespace ctconfig {

/* A finite cochain complex with ordered basis labels per degree. */
struct CochainComplex {
    Field field;
    std::map<int, std::vector<std::string>> basis_labels;
    std::map<int, SparseMatrix> differentials;  // d_deg : C^deg -> C^{deg+1}

    long dim(int degree) const;
    const SparseMatrix* differential(int degree) const;
    /* Empty when d o d = 0; otherwise the offending degrees. */
    std::vector<int> square_violations() const;
};

std::map<int, long> betti(const CochainComplex& c);

/* Cocycle representatives (echelon-pivot choice) and the machinery to reduce
 * any cocycle to class coordinates. */
struct DegreeCohomology {
    std::vector<Vec> reps;  // representatives, coordinates in C^deg
    Quotient mod_coboundaries;
    SparseMatrix reduced_rep_matrix;  // columns = reduced representatives

    DegreeCohomology(Quotient q, const Field& f)
        : mod_coboundaries(std::move(q)), reduced_rep_matrix(0, 0, f) {}
};

struct Cohomology {
    Field field;
    std::map<int, DegreeCohomology> by_degree;

    std::map<int, long> betti() const;
    long dim(int degree) const;
    /* Class coordinates of a cocycle; throws when the vector is not a
     * cocycle representative (not in ker modulo im). */
    Vec class_coordinates(int degree, const Vec& cocycle) const;
};

Cohomology cohomology(const CochainComplex& c);

/* ---- complexes assembled from the invariant wedge model ---- */

struct WedgeComplexData {
    const PDAlgebra* h = nullptr;
    int n = 0;
    CochainComplex complex;
    std::map<int, std::vector<WedgeMonomial>> monomials;  // per total degree

    Vec to_coords(const WedgeElement& e, int degree) const;
    WedgeElement from_coords(int degree, const Vec& v) const;
};

WedgeComplexData build_wedge_complex(const PDAlgebra& h, int n);

/* ---- complexes assembled from the first page (oracle route) ---- */

struct E1ComplexData {
    const PDAlgebra* h = nullptr;
    int n = 0;
    CochainComplex complex;
    std::map<int, std::vector<E1Monomial>> monomials;  // per total degree

    Vec to_coords(const E1Element& e, int degree) const;
    E1Element from_coords(int degree, const Vec& v) const;
};

E1ComplexData build_e1_complex(const PDAlgebra& h, int n);

/* The subcomplex of fixed elements, with basis produced by the averaging
 * projector; the differential is coordinatized by exact solving. */
struct E1InvariantComplexData {
    int n = 0;
    CochainComplex complex;
    std::map<int, std::vector<E1Element>> basis;  // per total degree
};

E1InvariantComplexData build_e1_invariant_complex(const PDAlgebra& h, int n);

/* ---- ring structure on cohomology ---- */

struct RingTable {
    std::map<int, long> betti;
    struct ClassInfo {
        int degree;
        long index;  // within the degree
        std::string name;
    };
    std::vector<ClassInfo> classes;
    /* products[{a,b}] = class coordinates of class_a * class_b in degree
     * deg_a + deg_b (empty vector = zero). Keys index into `classes`. */
    std::map<std::pair<long, long>, Vec> products;
};

/* Structure constants of the induced product on the wedge-model cohomology
 * (even-dimensional rings). */
RingTable ring_table(const WedgeComplexData& wc, const Cohomology& coh);

/* Odd-dimensional route: the cohomology is the n-th exterior power of H with
 * the componentwise product; everything is a cocycle. */
RingTable odd_ring_table(const PDAlgebra& h, int n);

}  // namespace ctconfig
