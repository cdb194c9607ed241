#include "ctconfig/linalg.hpp"

#include <cassert>

namespace ctconfig {

Vec zero_vec(long n, const Field& f)
{
    return Vec(n, Scalar::zero(f));
}

bool is_zero_vec(const Vec& v)
{
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

void SparseMatrix::set(long r, long c, const Scalar& v)
{
    assert(0 <= r && r < rows_ && 0 <= c && c < cols_);
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrix::add(long r, long c, const Scalar& v)
{
    if (v.is_zero())
        return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        set(r, c, v);
    } else {
        it->second += v;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

Scalar SparseMatrix::get(long r, long c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

Vec SparseMatrix::apply(const Vec& x) const
{
    assert((long)x.size() == cols_);
    Vec y = zero_vec(rows_, field_);
    for (const auto& [rc, v] : entries_) {
        if (!x[rc.second].is_zero())
            y[rc.first] += v * x[rc.second];
    }
    return y;
}

namespace {

using Row = std::map<long, Scalar>;

/* Reduced row echelon builder. Rows are inserted in call order; each new row
 * is reduced against the pivots found so far, then (if nonzero) normalized,
 * used to clean earlier rows, and recorded with its pivot column = first
 * nonzero coordinate. */
struct Rref {
    std::vector<Row> rows;
    std::vector<long> pivots;  // pivots[k] = pivot column of rows[k]

    void reduce_by_existing(Row& r) const
    {
        for (size_t k = 0; k < rows.size(); ++k) {
            auto it = r.find(pivots[k]);
            if (it == r.end())
                continue;
            Scalar c = it->second;
            r.erase(it);
            for (const auto& [col, v] : rows[k]) {
                if (col == pivots[k])
                    continue;
                auto jt = r.find(col);
                if (jt == r.end()) {
                    r.emplace(col, -(c * v));
                } else {
                    jt->second -= c * v;
                    if (jt->second.is_zero())
                        r.erase(jt);
                }
            }
        }
    }

    /* Returns the pivot column, or -1 when the row reduced to zero. */
    long insert(Row r)
    {
        reduce_by_existing(r);
        if (r.empty())
            return -1;
        long pc = r.begin()->first;
        Scalar inv = r.begin()->second.inverse();
        for (auto& [col, v] : r)
            v *= inv;
        for (size_t k = 0; k < rows.size(); ++k) {
            auto it = rows[k].find(pc);
            if (it == rows[k].end())
                continue;
            Scalar c = it->second;
            rows[k].erase(it);
            for (const auto& [col, v] : r) {
                if (col == pc)
                    continue;
                auto jt = rows[k].find(col);
                if (jt == rows[k].end()) {
                    rows[k].emplace(col, -(c * v));
                } else {
                    jt->second -= c * v;
                    if (jt->second.is_zero())
                        rows[k].erase(jt);
                }
            }
        }
        rows.push_back(std::move(r));
        pivots.push_back(pc);
        return pc;
    }
};

std::vector<Row> matrix_rows(const SparseMatrix& m)
{
    std::vector<Row> rows(m.rows());
    for (const auto& [rc, v] : m.entries())
        rows[rc.first][rc.second] = v;
    return rows;
}

}  // namespace

RankKernel rank_kernel(const SparseMatrix& m)
{
    const Field& f = m.field();
    Rref rr;
    for (auto& row : matrix_rows(m))
        rr.insert(std::move(row));

    RankKernel out;
    out.rank = (long)rr.rows.size();

    std::vector<long> pivot_of_col(m.cols(), -1);
    for (size_t k = 0; k < rr.pivots.size(); ++k)
        pivot_of_col[rr.pivots[k]] = (long)k;

    for (long c = 0; c < m.cols(); ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        Vec x = zero_vec(m.cols(), f);
        x[c] = Scalar::one(f);
        for (size_t k = 0; k < rr.rows.size(); ++k) {
            auto it = rr.rows[k].find(c);
            if (it != rr.rows[k].end())
                x[rr.pivots[k]] = -it->second;
        }
        out.kernel.push_back(std::move(x));
    }
    return out;
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b)
{
    assert((long)b.size() == m.rows());
    const Field& f = m.field();
    const long bcol = m.cols();  // augmented column index

    Rref rr;
    auto rows = matrix_rows(m);
    for (long i = 0; i < m.rows(); ++i) {
        Row r = std::move(rows[i]);
        if (!b[i].is_zero())
            r[bcol] = b[i];
        long pc = rr.insert(std::move(r));
        if (pc == bcol)
            return std::nullopt;  // inconsistent: 0 = nonzero
    }

    Vec x = zero_vec(m.cols(), f);
    for (size_t k = 0; k < rr.rows.size(); ++k) {
        auto it = rr.rows[k].find(bcol);
        if (it != rr.rows[k].end())
            x[rr.pivots[k]] = it->second;
    }
    return x;
}

std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, long dim, const Field& f)
{
    Rref rr;
    for (const auto& v : rows) {
        assert((long)v.size() == dim);
        Row r;
        for (long c = 0; c < dim; ++c)
            if (!v[c].is_zero())
                r[c] = v[c];
        rr.insert(std::move(r));
    }
    std::vector<Vec> out;
    for (const auto& row : rr.rows) {
        Vec v = zero_vec(dim, f);
        for (const auto& [c, val] : row)
            v[c] = val;
        out.push_back(std::move(v));
    }
    return out;
}

Quotient::Quotient(const std::vector<Vec>& subspace, long ambient_dim, const Field& f)
    : ambient_(ambient_dim), field_(f)
{
    Rref rr;
    for (const auto& v : subspace) {
        assert((long)v.size() == ambient_dim);
        Row r;
        for (long c = 0; c < ambient_dim; ++c)
            if (!v[c].is_zero())
                r[c] = v[c];
        rr.insert(std::move(r));
    }
    echelon_rows_ = std::move(rr.rows);
    pivot_cols_ = std::move(rr.pivots);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (long c : pivot_cols_)
        is_pivot[c] = true;
    for (long c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c])
            free_cols_.push_back(c);
}

std::vector<Vec> Quotient::representatives() const
{
    std::vector<Vec> reps;
    for (long c : free_cols_) {
        Vec v = zero_vec(ambient_, field_);
        v[c] = Scalar::one(field_);
        reps.push_back(std::move(v));
    }
    return reps;
}

Vec Quotient::reduce(const Vec& v) const
{
    assert((long)v.size() == ambient_);
    Row r;
    for (long c = 0; c < ambient_; ++c)
        if (!v[c].is_zero())
            r[c] = v[c];
    for (size_t k = 0; k < echelon_rows_.size(); ++k) {
        auto it = r.find(pivot_cols_[k]);
        if (it == r.end())
            continue;
        Scalar c = it->second;
        r.erase(it);
        for (const auto& [col, val] : echelon_rows_[k]) {
            if (col == pivot_cols_[k])
                continue;
            auto jt = r.find(col);
            if (jt == r.end()) {
                r.emplace(col, -(c * val));
            } else {
                jt->second -= c * val;
                if (jt->second.is_zero())
                    r.erase(jt);
            }
        }
    }
    Vec out = zero_vec(dim(), field_);
    for (size_t i = 0; i < free_cols_.size(); ++i) {
        auto it = r.find(free_cols_[i]);
        if (it != r.end())
            out[i] = it->second;
    }
    return out;
}

}  // namespace ctconfig
