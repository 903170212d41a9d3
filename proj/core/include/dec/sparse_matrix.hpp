#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dec {

struct Triplet {
    int row;
    int col;
    double value;
};

/// Compressed sparse row matrix.
///
/// Column indices are sorted within each row and explicit zeros are dropped
/// whenever a matrix is assembled through `from_triplets` or produced by one
/// of the arithmetic helpers below.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    /// Duplicate (row, col) entries are summed; resulting zeros are dropped.
    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
    /// Adopts raw CSR arrays; column indices must already be sorted per row.
    static SparseMatrix from_csr(int rows, int cols, std::vector<int> row_offsets,
                                 std::vector<int> column_indices, std::vector<double> values);
    static SparseMatrix identity(int n);
    static SparseMatrix diagonal(std::span<const double> d);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return values_.size(); }

    std::span<const int> row_offsets() const noexcept { return row_offsets_; }
    std::span<const int> column_indices() const noexcept { return column_indices_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Value at (r, c); zero when the entry is not stored.
    double coeff(int r, int c) const;

    std::vector<Triplet> to_triplets() const;
    std::vector<std::vector<double>> to_dense() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_offsets_{0};
    std::vector<int> column_indices_;
    std::vector<double> values_;
};

std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x);
/// y = A x written into an existing buffer.
void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y);
SparseMatrix transpose(const SparseMatrix& a);
SparseMatrix spgemm(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b);
std::vector<double> diag(const SparseMatrix& a);

/// diag(left) * A * diag(right); either span may be empty to mean identity.
SparseMatrix scale(const SparseMatrix& a, std::span<const double> left,
                   std::span<const double> right);

/// Aᵀ diag(w) A, assembled so that entry (i, j) and (j, i) are accumulated
/// in the same order and the result is bitwise symmetric.
SparseMatrix weighted_gram(const SparseMatrix& a, std::span<const double> w);

/// max |A_ij - A_ji| / max |A_ij| (0 for the zero matrix).
double relative_asymmetry(const SparseMatrix& a);

/// max |A_ij| over stored entries.
double max_abs(const SparseMatrix& a);

}  // namespace dec
