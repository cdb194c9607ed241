#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ctconfig/scalar.hpp"

namespace ctconfig {

using Vec = std::vector<Scalar>;

Vec zero_vec(long n, const Field& f);
bool is_zero_vec(const Vec& v);

/* Sparse matrix over an exact field. Stored zero entries are never kept. */
class SparseMatrix {
public:
    SparseMatrix(long rows, long cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const Field& field() const { return field_; }

    void set(long r, long c, const Scalar& v);
    void add(long r, long c, const Scalar& v);
    Scalar get(long r, long c) const;
    const std::map<std::pair<long, long>, Scalar>& entries() const { return entries_; }

    Vec apply(const Vec& x) const;  // matrix * column vector

private:
    long rows_, cols_;
    Field field_;
    std::map<std::pair<long, long>, Scalar> entries_;
};

struct RankKernel {
    long rank = 0;
    std::vector<Vec> kernel;  // basis of the null space, one vector per free column
};

/* Deterministic Gaussian elimination: columns are processed left to right and
 * the pivot is the first unused row with a nonzero entry. */
RankKernel rank_kernel(const SparseMatrix& m);

/* Solves m*x = b; empty when b is not in the column space. */
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

/* Reduced-row-echelon basis of the span of the given vectors. */
std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, long dim, const Field& f);

/* A quotient ambient/span(subspace) with canonical representatives: the
 * standard basis vectors at the non-pivot coordinates of the reduced row
 * echelon form of the subspace. reduce() is linear, kills the subspace and
 * maps the i-th representative to the i-th unit coordinate vector. */
class Quotient {
public:
    Quotient(const std::vector<Vec>& subspace, long ambient_dim, const Field& f);

    long dim() const { return (long)free_cols_.size(); }
    long ambient_dim() const { return ambient_; }
    std::vector<Vec> representatives() const;
    Vec reduce(const Vec& v) const;

private:
    long ambient_;
    Field field_;
    std::vector<std::map<long, Scalar>> echelon_rows_;  // RREF, pivot coeff 1
    std::vector<long> pivot_cols_;
    std::vector<long> free_cols_;
};

}  // namespace ctconfig
