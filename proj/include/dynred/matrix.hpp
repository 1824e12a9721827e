#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "dynred/arith.hpp"
#include "dynred/errors.hpp"

namespace dynred {

/// Dense row-major matrix over an arbitrary value type.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw UsageError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t m, const T& zero, const T& one) {
        Matrix I(m, m, zero);
        for (std::size_t i = 0; i < m; ++i) I(i, i) = one;
        return I;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<BigRational>;
using IntMatrix = Matrix<BigInt>;

RationalMatrix identity_matrix(std::size_t m);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const BigRational& c, const RationalMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt det(const IntMatrix& m);
/// Rows are scaled to integers first, then eliminated as in det(IntMatrix).
BigRational det(const RationalMatrix& m);
FFElem det(const Matrix<FFElem>& m);

/// Classical adjugate (transposed cofactor matrix): M * adj(M) = det(M) * I.
RationalMatrix adjugate(const RationalMatrix& m);

// Minimum ord_p over the entries; +inf for the zero matrix.
Valuation ord_p(const RationalMatrix& m, const PrimeInt& p);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

} // namespace dynred
