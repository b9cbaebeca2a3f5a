#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tomex/errors.hpp"
#include "tomex/rational.hpp"

namespace tomex {

// Dense square matrix over an arbitrary coefficient ring T (a field scalar,
// a polynomial, a Laurent series, ...).  Value semantics, row-major storage.
template <class T>
class Matrix {
  public:
    Matrix() = default;

    Matrix(std::size_t dim, const T& fill) : dim_(dim), e_(dim * dim, fill) {}

    static Matrix zeros(std::size_t dim, const T& proto) {
        return Matrix(dim, zero_like(proto));
    }

    static Matrix identity(std::size_t dim, const T& proto) {
        Matrix m(dim, zero_like(proto));
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = one_like(proto);
        return m;
    }

    std::size_t dim() const { return dim_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    Matrix operator+(const Matrix& o) const {
        check_dim(o);
        Matrix r(*this);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = T(r.e_[k] + o.e_[k]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_dim(o);
        Matrix r(*this);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = T(r.e_[k] - o.e_[k]);
        return r;
    }

    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.e_) x = T(-x);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        check_dim(o);
        Matrix r = zeros(dim_, proto());
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                const T& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (std::size_t j = 0; j < dim_; ++j)
                    r(i, j) = T(r(i, j) + a * o(k, j));
            }
        return r;
    }

    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    bool operator==(const Matrix& o) const {
        return dim_ == o.dim_ && e_ == o.e_;
    }

    const T& proto() const {
        static const T fallback{};
        return e_.empty() ? fallback : e_[0];
    }

    const std::vector<T>& entries() const { return e_; }
    std::vector<T>& entries() { return e_; }

  private:
    void check_dim(const Matrix& o) const {
        if (dim_ != o.dim_) throw mismatch_error("matrix dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<T> e_;
};

template <class T>
Matrix<T> zero_like(const Matrix<T>& m) {
    return Matrix<T>::zeros(m.dim(), m.proto());
}

template <class T>
Matrix<T> one_like(const Matrix<T>& m) {
    return Matrix<T>::identity(m.dim(), m.proto());
}

template <class T>
bool is_zero(const Matrix<T>& m) {
    for (const auto& x : m.entries())
        if (!is_zero(x)) return false;
    return true;
}

template <class T>
double abs_norm(const Matrix<T>& m) {
    double r = 0;
    for (const auto& x : m.entries()) r = std::max(r, abs_norm(x));
    return r;
}

template <class T>
struct algebra_scalar<Matrix<T>> {
    using type = scalar_t<T>;
};

template <class T>
Matrix<T> scale(const Matrix<T>& m, const scalar_t<T>& c) {
    Matrix<T> r(m);
    for (auto& x : r.entries()) x = scale(x, c);
    return r;
}

// Entrywise Frobenius norm; used to normalise random float instances.
template <class T>
double frobenius_norm(const Matrix<T>& m) {
    double s = 0;
    for (const auto& x : m.entries()) {
        double a = abs_norm(x);
        s += a * a;
    }
    return std::sqrt(s);
}

// Gauss-Jordan inverse over a field scalar.  Exact over rationals (first
// nonzero pivot), partial pivoting over doubles.
template <class S>
Matrix<S> invert(const Matrix<S>& m) {
    const std::size_t n = m.dim();
    Matrix<S> a(m);
    Matrix<S> r = Matrix<S>::identity(n, m.proto());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        if constexpr (field<S>::exact) {
            while (piv < n && field<S>::is_zero(a(piv, col))) ++piv;
            if (piv == n) throw singular_error("singular matrix in invert()");
        } else {
            for (std::size_t i = col + 1; i < n; ++i)
                if (field<S>::abs_double(a(i, col)) > field<S>::abs_double(a(piv, col))) piv = i;
            if (field<S>::is_zero(a(piv, col)))
                throw singular_error("singular matrix in invert()");
        }
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(r(piv, j), r(col, j));
            }
        S d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = S(a(col, j) / d);
            r(col, j) = S(r(col, j) / d);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            S f = a(i, col);
            if (field<S>::is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = S(a(i, j) - f * a(col, j));
                r(i, j) = S(r(i, j) - f * r(col, j));
            }
        }
    }
    return r;
}

// Elementary matrix with a single unit entry; E(1,2) in 1-based math notation
// is unit_entry(dim, 0, 1).
template <class S>
Matrix<S> unit_entry(std::size_t dim, std::size_t i, std::size_t j) {
    Matrix<S> m = Matrix<S>::zeros(dim, field<S>::zero());
    m(i, j) = field<S>::one();
    return m;
}

} // namespace tomex
