#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "tomex/errors.hpp"
#include "tomex/matrix.hpp"

namespace tomex {

// Matrix exponential by scaling-and-squaring around a truncated Taylor core.
// The scaled norm is kept below 1/4 so the degree-16 tail is far below double
// round-off; accuracy target is 1e-13 relative for norms up to 10.
inline Matrix<double> mat_exp(const Matrix<double>& a) {
    const double nrm = frobenius_norm(a);
    int squarings = 0;
    double s = 1.0;
    while (nrm * s > 0.25) {
        s *= 0.5;
        ++squarings;
    }
    Matrix<double> b = scale(a, s);

    Matrix<double> r = Matrix<double>::identity(a.dim(), 0.0);
    Matrix<double> term = r;
    for (int k = 1; k <= 16; ++k) {
        term = scale(Matrix<double>(term * b), 1.0 / k);
        r = r + term;
    }
    for (int k = 0; k < squarings; ++k) r = r * r;
    return r;
}

// The exponential is transcendental: there is no exact-arithmetic variant.
inline Matrix<Rat> mat_exp(const Matrix<Rat>&) {
    throw precondition_error("mat_exp is unsupported in exact mode");
}

// Plain Taylor exponential, for callers that need a matching truncation on
// both sides of an identity.
inline Matrix<double> exp_taylor(const Matrix<double>& a, int terms) {
    Matrix<double> r = Matrix<double>::identity(a.dim(), 0.0);
    Matrix<double> term = r;
    for (int k = 1; k <= terms; ++k) {
        term = scale(Matrix<double>(term * a), 1.0 / k);
        r = r + term;
    }
    return r;
}

// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Quadrature gauss_legendre_unit(int points);

// Classical fourth-order Runge-Kutta for Ydot = Y * A(t), Y(0) = identity.
template <class F>
Matrix<double> integrate_right_ode(const F& coeff, double t_end, long steps,
                                   const Matrix<double>& y0) {
    Matrix<double> y = y0;
    const double h = t_end / static_cast<double>(steps);
    for (long i = 0; i < steps; ++i) {
        const double t = h * static_cast<double>(i);
        Matrix<double> a1 = coeff(t);
        Matrix<double> a2 = coeff(t + 0.5 * h);
        Matrix<double> a4 = coeff(t + h);
        Matrix<double> k1 = y * a1;
        Matrix<double> k2 = Matrix<double>(y + scale(k1, 0.5 * h)) * a2;
        Matrix<double> k3 = Matrix<double>(y + scale(k2, 0.5 * h)) * a2;
        Matrix<double> k4 = Matrix<double>(y + scale(k3, h)) * a4;
        y = y + scale(Matrix<double>(k1 + scale(k2, 2.0) + scale(k3, 2.0) + k4), h / 6.0);
    }
    return y;
}

} // namespace tomex
