#pragma once

#include "tomex/matrix.hpp"
#include "tomex/poly.hpp"

namespace tomex {

// Matrix with polynomial entries: the concrete home of a coefficient family
// A(t) and the weight-zero integration operator.
template <class S>
using PolyMatrix = Matrix<Poly<S>>;

template <class S>
PolyMatrix<S> poly_matrix_zero(std::size_t dim) {
    return PolyMatrix<S>::zeros(dim, Poly<S>());
}

template <class S>
PolyMatrix<S> poly_matrix_identity(std::size_t dim) {
    return PolyMatrix<S>::identity(dim, Poly<S>());
}

// Lift a constant matrix to a polynomial matrix.
template <class S>
PolyMatrix<S> as_poly_matrix(const Matrix<S>& m) {
    PolyMatrix<S> r = poly_matrix_zero<S>(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!field<S>::is_zero(m(i, j))) r(i, j) = Poly<S>::constant(m(i, j));
    return r;
}

template <class S>
Matrix<S> eval(const PolyMatrix<S>& p, const S& t) {
    Matrix<S> r = Matrix<S>::zeros(p.dim(), field<S>::zero());
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) r(i, j) = p(i, j).eval(t);
    return r;
}

// Entrywise exact antiderivative vanishing at t = 0.
template <class S>
PolyMatrix<S> poly_integrate(const PolyMatrix<S>& p) {
    PolyMatrix<S> r(p);
    for (auto& x : r.entries()) x = x.integrate();
    return r;
}

// Entrywise formal derivative.
template <class S>
PolyMatrix<S> poly_derive(const PolyMatrix<S>& p) {
    PolyMatrix<S> r(p);
    for (auto& x : r.entries()) x = x.derive();
    return r;
}

// Multiply by the scalar monomial c*t^k.
template <class S>
PolyMatrix<S> mul_monomial(const PolyMatrix<S>& p, const S& c, std::size_t k) {
    const Poly<S> mono = Poly<S>::monomial(c, k);
    PolyMatrix<S> r(p);
    for (auto& x : r.entries()) x = x * mono;
    return r;
}

} // namespace tomex
