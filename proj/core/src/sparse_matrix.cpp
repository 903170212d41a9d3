#include "dec/sparse_matrix.hpp"

#include "dec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dec {

namespace {

void require(bool cond, const char* what)
{
    if (!cond)
        throw InvalidArgument(what);
}

// Row-by-row accumulator shared by spgemm, add and weighted_gram.
class RowAccumulator {
public:
    explicit RowAccumulator(int cols) : values_(cols, 0.0), occupied_(cols, false) {}

    void add(int col, double v)
    {
        if (!occupied_[col]) {
            occupied_[col] = true;
            touched_.push_back(col);
        }
        values_[col] += v;
    }

    void flush(std::vector<int>& cols, std::vector<double>& vals)
    {
        std::sort(touched_.begin(), touched_.end());
        for (int c : touched_) {
            if (values_[c] != 0.0) {
                cols.push_back(c);
                vals.push_back(values_[c]);
            }
            values_[c] = 0.0;
            occupied_[c] = false;
        }
        touched_.clear();
    }

private:
    std::vector<double> values_;
    std::vector<bool> occupied_;
    std::vector<int> touched_;
};

}  // namespace

SparseMatrix::SparseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), row_offsets_(static_cast<std::size_t>(rows) + 1, 0)
{
    require(rows >= 0 && cols >= 0, "SparseMatrix: negative shape");
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets)
{
    SparseMatrix m(rows, cols);
    for (const auto& t : triplets)
        require(t.row >= 0 && t.row < rows && t.col >= 0 && t.col < cols,
                "SparseMatrix::from_triplets: index out of range");
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    std::size_t i = 0;
    for (int r = 0; r < rows; ++r) {
        while (i < triplets.size() && triplets[i].row == r) {
            const int c = triplets[i].col;
            double v = 0.0;
            while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
                v += triplets[i++].value;
            if (v != 0.0) {
                m.column_indices_.push_back(c);
                m.values_.push_back(v);
            }
        }
        m.row_offsets_[r + 1] = static_cast<int>(m.values_.size());
    }
    return m;
}

SparseMatrix SparseMatrix::from_csr(int rows, int cols, std::vector<int> row_offsets,
                                    std::vector<int> column_indices, std::vector<double> values)
{
    require(rows >= 0 && cols >= 0, "SparseMatrix::from_csr: negative shape");
    require(row_offsets.size() == static_cast<std::size_t>(rows) + 1,
            "SparseMatrix::from_csr: row offset length");
    require(column_indices.size() == values.size(), "SparseMatrix::from_csr: nnz mismatch");
    require(row_offsets.front() == 0 &&
                row_offsets.back() == static_cast<int>(column_indices.size()),
            "SparseMatrix::from_csr: bad row offsets");
    for (int r = 0; r < rows; ++r) {
        require(row_offsets[r] <= row_offsets[r + 1], "SparseMatrix::from_csr: bad row offsets");
        for (int p = row_offsets[r]; p < row_offsets[r + 1]; ++p) {
            require(column_indices[p] >= 0 && column_indices[p] < cols,
                    "SparseMatrix::from_csr: column out of range");
            require(p == row_offsets[r] || column_indices[p - 1] < column_indices[p],
                    "SparseMatrix::from_csr: columns not strictly sorted");
        }
    }
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_offsets_ = std::move(row_offsets);
    m.column_indices_ = std::move(column_indices);
    m.values_ = std::move(values);
    return m;
}

SparseMatrix SparseMatrix::identity(int n)
{
    std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    return diagonal(ones);
}

SparseMatrix SparseMatrix::diagonal(std::span<const double> d)
{
    const int n = static_cast<int>(d.size());
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (d[i] != 0.0) {
            m.column_indices_.push_back(i);
            m.values_.push_back(d[i]);
        }
        m.row_offsets_[i + 1] = static_cast<int>(m.values_.size());
    }
    return m;
}

double SparseMatrix::coeff(int r, int c) const
{
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, "SparseMatrix::coeff: out of range");
    const auto first = column_indices_.begin() + row_offsets_[r];
    const auto last = column_indices_.begin() + row_offsets_[r + 1];
    const auto it = std::lower_bound(first, last, c);
    if (it == last || *it != c)
        return 0.0;
    return values_[static_cast<std::size_t>(it - column_indices_.begin())];
}

std::vector<Triplet> SparseMatrix::to_triplets() const
{
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (int r = 0; r < rows_; ++r)
        for (int p = row_offsets_[r]; p < row_offsets_[r + 1]; ++p)
            out.push_back({r, column_indices_[p], values_[p]});
    return out;
}

std::vector<std::vector<double>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_, 0.0));
    for (int r = 0; r < rows_; ++r)
        for (int p = row_offsets_[r]; p < row_offsets_[r + 1]; ++p)
            out[r][column_indices_[p]] = values_[p];
    return out;
}

void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y)
{
    require(static_cast<int>(x.size()) == a.cols(), "spmv: x has wrong length");
    require(static_cast<int>(y.size()) == a.rows(), "spmv: y has wrong length");
    const auto offsets = a.row_offsets();
    const auto cols = a.column_indices();
    const auto vals = a.values();
    for (int r = 0; r < a.rows(); ++r) {
        double acc = 0.0;
        for (int p = offsets[r]; p < offsets[r + 1]; ++p)
            acc += vals[p] * x[cols[p]];
        y[r] = acc;
    }
}

std::vector<double> spmv(const SparseMatrix& a, std::span<const double> x)
{
    std::vector<double> y(static_cast<std::size_t>(a.rows()));
    spmv(a, x, y);
    return y;
}

SparseMatrix transpose(const SparseMatrix& a)
{
    const auto offsets = a.row_offsets();
    const auto cols = a.column_indices();
    const auto vals = a.values();

    std::vector<int> t_offsets(static_cast<std::size_t>(a.cols()) + 1, 0);
    for (int c : cols)
        ++t_offsets[c + 1];
    for (int c = 0; c < a.cols(); ++c)
        t_offsets[c + 1] += t_offsets[c];

    std::vector<int> cursor(t_offsets.begin(), t_offsets.end() - 1);
    std::vector<int> t_cols(a.nnz());
    std::vector<double> t_vals(a.nnz());
    // Rows are visited in ascending order, so each transposed row is sorted.
    for (int r = 0; r < a.rows(); ++r) {
        for (int p = offsets[r]; p < offsets[r + 1]; ++p) {
            const int dst = cursor[cols[p]]++;
            t_cols[dst] = r;
            t_vals[dst] = vals[p];
        }
    }
    return SparseMatrix::from_csr(a.cols(), a.rows(), std::move(t_offsets), std::move(t_cols),
                                  std::move(t_vals));
}

SparseMatrix spgemm(const SparseMatrix& a, const SparseMatrix& b)
{
    require(a.cols() == b.rows(), "spgemm: shape mismatch");
    const auto ao = a.row_offsets();
    const auto ac = a.column_indices();
    const auto av = a.values();
    const auto bo = b.row_offsets();
    const auto bc = b.column_indices();
    const auto bv = b.values();

    RowAccumulator acc(b.cols());
    std::vector<int> offsets{0};
    std::vector<int> cols;
    std::vector<double> vals;
    offsets.reserve(static_cast<std::size_t>(a.rows()) + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int p = ao[r]; p < ao[r + 1]; ++p) {
            const int k = ac[p];
            for (int q = bo[k]; q < bo[k + 1]; ++q)
                acc.add(bc[q], av[p] * bv[q]);
        }
        acc.flush(cols, vals);
        offsets.push_back(static_cast<int>(cols.size()));
    }
    return SparseMatrix::from_csr(a.rows(), b.cols(), std::move(offsets), std::move(cols),
                                  std::move(vals));
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shape mismatch");
    RowAccumulator acc(a.cols());
    std::vector<int> offsets{0};
    std::vector<int> cols;
    std::vector<double> vals;
    for (int r = 0; r < a.rows(); ++r) {
        for (const SparseMatrix* m : {&a, &b}) {
            const auto o = m->row_offsets();
            const auto c = m->column_indices();
            const auto v = m->values();
            for (int p = o[r]; p < o[r + 1]; ++p)
                acc.add(c[p], v[p]);
        }
        acc.flush(cols, vals);
        offsets.push_back(static_cast<int>(cols.size()));
    }
    return SparseMatrix::from_csr(a.rows(), a.cols(), std::move(offsets), std::move(cols),
                                  std::move(vals));
}

std::vector<double> diag(const SparseMatrix& a)
{
    const int n = std::min(a.rows(), a.cols());
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        d[i] = a.coeff(i, i);
    return d;
}

SparseMatrix scale(const SparseMatrix& a, std::span<const double> left,
                   std::span<const double> right)
{
    require(left.empty() || static_cast<int>(left.size()) == a.rows(), "scale: left length");
    require(right.empty() || static_cast<int>(right.size()) == a.cols(), "scale: right length");
    const auto o = a.row_offsets();
    const auto c = a.column_indices();
    const auto v = a.values();
    std::vector<int> offsets{0};
    std::vector<int> cols;
    std::vector<double> vals;
    for (int r = 0; r < a.rows(); ++r) {
        for (int p = o[r]; p < o[r + 1]; ++p) {
            double x = v[p];
            if (!left.empty())
                x = left[r] * x;
            if (!right.empty())
                x = x * right[c[p]];
            if (x != 0.0) {
                cols.push_back(c[p]);
                vals.push_back(x);
            }
        }
        offsets.push_back(static_cast<int>(cols.size()));
    }
    return SparseMatrix::from_csr(a.rows(), a.cols(), std::move(offsets), std::move(cols),
                                  std::move(vals));
}

SparseMatrix weighted_gram(const SparseMatrix& a, std::span<const double> w)
{
    require(static_cast<int>(w.size()) == a.rows(), "weighted_gram: weight length");
    const SparseMatrix at = transpose(a);
    const auto to = at.row_offsets();
    const auto tc = at.column_indices();
    const auto tv = at.values();
    const auto ao = a.row_offsets();
    const auto ac = a.column_indices();
    const auto av = a.values();

    RowAccumulator acc(a.cols());
    std::vector<int> offsets{0};
    std::vector<int> cols;
    std::vector<double> vals;
    for (int i = 0; i < a.cols(); ++i) {
        // k runs ascending for every (i, j), and w_k * (a_ki * a_kj) is
        // symmetric in i and j, so M_ij and M_ji round identically.
        for (int p = to[i]; p < to[i + 1]; ++p) {
            const int k = tc[p];
            for (int q = ao[k]; q < ao[k + 1]; ++q)
                acc.add(ac[q], w[k] * (tv[p] * av[q]));
        }
        acc.flush(cols, vals);
        offsets.push_back(static_cast<int>(cols.size()));
    }
    return SparseMatrix::from_csr(a.cols(), a.cols(), std::move(offsets), std::move(cols),
                                  std::move(vals));
}

double max_abs(const SparseMatrix& a)
{
    double m = 0.0;
    for (double v : a.values())
        m = std::max(m, std::abs(v));
    return m;
}

double relative_asymmetry(const SparseMatrix& a)
{
    if (a.rows() != a.cols())
        return std::numeric_limits<double>::infinity();
    const double scale_ = max_abs(a);
    if (scale_ == 0.0)
        return 0.0;
    const SparseMatrix t = transpose(a);
    double worst = 0.0;
    for (int r = 0; r < a.rows(); ++r) {
        const auto ao = a.row_offsets();
        const auto to = t.row_offsets();
        int p = ao[r], q = to[r];
        const int pe = ao[r + 1], qe = to[r + 1];
        while (p < pe || q < qe) {
            const int cp = p < pe ? a.column_indices()[p] : a.cols();
            const int cq = q < qe ? t.column_indices()[q] : a.cols();
            double diff;
            if (cp == cq)
                diff = a.values()[p++] - t.values()[q++];
            else if (cp < cq)
                diff = a.values()[p++];
            else
                diff = t.values()[q++];
            worst = std::max(worst, std::abs(diff));
        }
    }
    return worst / scale_;
}

}  // namespace dec
