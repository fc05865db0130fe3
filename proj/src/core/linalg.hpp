#pragma once

#include "rat.hpp"

namespace isoform {

// Reduces `m` to reduced row echelon form in place; returns the rank.
int rref(RatMat& m);

int rank_of(RatMat m);

// Solves A x = b where the columns of A are `cols`. Throws an internal error
// if the system is inconsistent or underdetermined.
RatVec solve_columns(const std::vector<RatVec>& cols, const RatVec& b);

// A linear subspace given by a basis; canonicalized to RREF rows so that two
// Subspace values compare equal exactly when the subspaces coincide.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(RatMat basis_rows);

    int dim() const { return (int)rows_.size(); }
    int ambient() const { return rows_.empty() ? 0 : (int)rows_[0].size(); }
    const RatMat& basis() const { return rows_; }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    RatMat rows_; // canonical RREF, no zero rows
};

// Kernel of `m` (as a map on column vectors), canonical basis from RREF free
// columns.
std::vector<RatVec> kernel_basis(RatMat m);

RatVec ivec_to_rat(const IVec& v);

} // namespace isoform
