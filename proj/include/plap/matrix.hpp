#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "plap/kernels.hpp"
#include "plap/rational.hpp"

namespace plap {

/// Dense row-major matrix. The two instantiations used throughout are
/// ExactMatrix (rationals, never rounds) and FloatMatrix (binary64).
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count != rows*cols");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged init");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
        return out;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix out(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
        return out;
    }
    static Matrix column(const std::vector<T>& v) {
        Matrix out(v.size(), 1);
        out.data_ = v;
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    const std::vector<T>& entries() const { return data_; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                 std::size_t ncols) const {
        if (row0 + nrows > rows_ || col0 + ncols > cols_)
            throw std::out_of_range("Matrix::block out of range");
        Matrix out(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
        return out;
    }

    void set_block(std::size_t row0, std::size_t col0, const Matrix& m) {
        if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_)
            throw std::out_of_range("Matrix::set_block out of range");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row0 + i, col0 + j) = m(i, j);
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
        Matrix out(a.rows_, a.cols_ + b.cols_);
        out.set_block(0, 0, a);
        out.set_block(0, a.cols_, b);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        kernels::matmul(a.data(), b.data(), out.data(), a.rows_, a.cols_, b.cols_);
        return out;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& v : m.data_) v = s * v;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }
};

using ExactMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

inline FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

}  // namespace plap
