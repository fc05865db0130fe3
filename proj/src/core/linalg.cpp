#include "linalg.hpp"

#include <algorithm>

namespace isoform {

int rref(RatMat& m) {
    if (m.empty()) return 0;
    int nrows = (int)m.size(), ncols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = Rat(1) / m[rank][col];
        for (int c = col; c < ncols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (int c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

int rank_of(RatMat m) { return rref(m); }

RatVec solve_columns(const std::vector<RatVec>& cols, const RatVec& b) {
    if (cols.empty()) throw_internal("solve_columns: empty basis");
    int d = (int)b.size(), n = (int)cols.size();
    RatMat aug(d, RatVec(n + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = cols[j][i];
        aug[i][n] = b[i];
    }
    int rank = rref(aug);
    // Consistency: no pivot in the last column.
    for (int r = 0; r < rank; ++r) {
        bool allzero = true;
        for (int c = 0; c < n; ++c)
            if (!aug[r][c].is_zero()) { allzero = false; break; }
        if (allzero && !aug[r][n].is_zero())
            throw_internal("solve_columns: inconsistent system");
    }
    if (rank < n) throw_internal("solve_columns: underdetermined system");
    RatVec x(n);
    for (int r = 0; r < rank; ++r) {
        int lead = -1;
        for (int c = 0; c < n; ++c)
            if (!aug[r][c].is_zero()) { lead = c; break; }
        if (lead >= 0) x[lead] = aug[r][n];
    }
    return x;
}

Subspace::Subspace(RatMat basis_rows) {
    int rank = rref(basis_rows);
    basis_rows.resize(rank);
    rows_ = std::move(basis_rows);
}

bool Subspace::contains(const RatVec& v) const {
    RatVec w = v;
    for (const auto& row : rows_) {
        int lead = -1;
        for (int c = 0; c < (int)row.size(); ++c)
            if (!row[c].is_zero()) { lead = c; break; }
        if (lead < 0) continue;
        Rat f = w[lead];
        if (f.is_zero()) continue;
        for (int c = 0; c < (int)row.size(); ++c) w[c] -= f * row[c];
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    for (size_t i = 0; i < a.rows_.size(); ++i)
        for (size_t j = 0; j < a.rows_[i].size(); ++j) {
            if (a.rows_[i][j] != b.rows_[i][j]) return a.rows_[i][j] < b.rows_[i][j];
        }
    return false;
}

std::vector<RatVec> kernel_basis(RatMat m) {
    if (m.empty()) return {};
    int ncols = (int)m[0].size();
    int rank = rref(m);
    std::vector<int> lead_col(rank, -1);
    std::vector<bool> is_pivot(ncols, false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < ncols; ++c)
            if (!m[r][c].is_zero()) {
                lead_col[r] = c;
                is_pivot[c] = true;
                break;
            }
    std::vector<RatVec> basis;
    for (int c = 0; c < ncols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(ncols);
        v[c] = Rat(1);
        for (int r = 0; r < rank; ++r)
            if (lead_col[r] >= 0) v[lead_col[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVec ivec_to_rat(const IVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

} // namespace isoform
