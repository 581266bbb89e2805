#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glperm/oracle/field.hpp"

namespace glperm::oracle {

/// Dense row-major matrix over a FieldTable's encoding.
class MatrixFq {
public:
    MatrixFq() = default;
    MatrixFq(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    MatrixFq(std::size_t rows, std::size_t cols, std::vector<Elem> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw BadParameters("MatrixFq: data size mismatch");
    }

    static MatrixFq identity(std::size_t n) {
        MatrixFq m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Elem>& data() const noexcept { return data_; }

    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const MatrixFq&, const MatrixFq&) = default;
    friend auto operator<=>(const MatrixFq&, const MatrixFq&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += std::to_string(static_cast<unsigned>((*this)(i, j)));
            }
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

inline MatrixFq multiply(const FieldTable& F, const MatrixFq& a, const MatrixFq& b) {
    if (a.cols() != b.rows()) throw BadParameters("multiply: dimension mismatch");
    MatrixFq c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
        }
    return c;
}

inline MatrixFq transpose(const MatrixFq& a) {
    MatrixFq t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

/// Columns of a followed by columns of b.
inline MatrixFq hconcat(const MatrixFq& a, const MatrixFq& b) {
    if (a.rows() != b.rows()) throw BadParameters("hconcat: row mismatch");
    MatrixFq c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

/// Reduced row echelon form with zero rows dropped; returns the pivot columns
/// through `pivots` when given.
inline MatrixFq rref(const FieldTable& F, MatrixFq a, std::vector<std::size_t>* pivots = nullptr) {
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Elem s = F.inv(a(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), s);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Elem f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<Elem> kept(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(r * a.cols()));
    if (pivots) *pivots = std::move(piv);
    return MatrixFq(r, a.cols(), std::move(kept));
}

inline std::size_t rank(const FieldTable& F, const MatrixFq& a) { return rref(F, a).rows(); }

inline std::optional<MatrixFq> inverse(const FieldTable& F, const MatrixFq& a) {
    if (a.rows() != a.cols()) throw BadParameters("inverse: matrix is not square");
    const std::size_t n = a.rows();
    std::vector<std::size_t> piv;
    MatrixFq r = rref(F, hconcat(a, MatrixFq::identity(n)), &piv);
    if (r.rows() < n || piv.size() < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
    MatrixFq inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

/// Basis (as rows) of {y : y a = 0}, the left null space of a.
inline MatrixFq left_null_space(const FieldTable& F, const MatrixFq& a) {
    // y a = 0  <=>  a^T y^T = 0.
    std::vector<std::size_t> piv;
    const MatrixFq r = rref(F, transpose(a), &piv);
    const std::size_t n = a.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Elem> rows;
    std::size_t count = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> y(n, 0);
        y[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) y[piv[i]] = F.neg(r(i, free));
        rows.insert(rows.end(), y.begin(), y.end());
        ++count;
    }
    return MatrixFq(count, n, std::move(rows));
}

/// Block diagonal diag(a, b).
inline MatrixFq block_diag(const MatrixFq& a, const MatrixFq& b) {
    MatrixFq c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

/// Base-q digits of the entries, row-major, first entry least significant.
inline std::uint64_t encode(const FieldTable& F, const MatrixFq& a) {
    std::uint64_t key = 0;
    for (std::size_t i = a.data().size(); i-- > 0;) key = key * F.order() + a.data()[i];
    return key;
}

inline MatrixFq decode(const FieldTable& F, std::uint64_t key, std::size_t rows, std::size_t cols) {
    std::vector<Elem> d(rows * cols);
    for (auto& e : d) {
        e = static_cast<Elem>(key % F.order());
        key /= F.order();
    }
    return MatrixFq(rows, cols, std::move(d));
}

}  // namespace glperm::oracle
