#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperspec {

// Dense row-major matrix. Small enough sizes (desk scale) that no blocking is needed.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> data() const { return data_; }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric(T tolerance = T{}) const
    {
        if (rows_ != cols_)
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j) {
                T diff = (*this)(i, j) - (*this)(j, i);
                if (diff < T{})
                    diff = -diff;
                if (diff > tolerance)
                    return false;
            }
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RealMatrix = Matrix<double>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    assert(a.cols() == b.rows());
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            if (aik == T{})
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

inline std::vector<double> mat_vec(const RealMatrix& a, std::span<const double> x)
{
    assert(a.cols() == x.size());
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

inline RealMatrix to_real(const IntMatrix& m)
{
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = static_cast<double>(m(i, j));
    return out;
}

inline double frobenius_norm(const RealMatrix& m)
{
    double s = 0.0;
    for (double v : m.data())
        s += v * v;
    return std::sqrt(s);
}

} // namespace hyperspec
