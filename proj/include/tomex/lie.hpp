#pragma once

#include <vector>

#include "tomex/rational.hpp"

namespace tomex {

// [a, b] = ab - ba.
template <class A>
A commutator(const A& a, const A& b) {
    return A(a * b - b * a);
}

// m-fold nested bracket [a,[a,...[a,b]]].
template <class A>
A ad_power(const A& a, const A& b, unsigned m) {
    A r = b;
    for (unsigned k = 0; k < m; ++k) r = commutator(a, r);
    return r;
}

// Closed-form expansion of the nested bracket through left/right
// multiplication operators: (l_a - r_a)^m (b) expanded binomially as
// sum_k (-1)^k C(m,k) a^(m-k) b a^k.  Serves as the independent oracle for
// ad_power in the tests.
template <class A>
A ad_power_binomial(const A& a, const A& b, unsigned m) {
    std::vector<A> pow;
    pow.reserve(m + 1);
    pow.push_back(one_like(a));
    for (unsigned k = 1; k <= m; ++k) pow.push_back(A(pow.back() * a));

    A r = zero_like(b);
    Rat binom(1);
    for (unsigned k = 0; k <= m; ++k) {
        A term = A(pow[m - k] * b * pow[k]);
        Rat c = (k % 2 == 0) ? binom : Rat(-binom);
        r = A(r + scale_rat(term, c));
        binom = Rat(binom * Rat(static_cast<long>(m - k)) / Rat(static_cast<long>(k) + 1));
    }
    return r;
}

// Left and right multiplication operators; they commute with each other.
template <class A>
struct LeftMul {
    A a;
    A operator()(const A& x) const { return A(a * x); }
};

template <class A>
struct RightMul {
    A a;
    A operator()(const A& x) const { return A(x * a); }
};

// (l_x - r_y)^m applied to b; the operator powering the finite-difference
// exponent series.
template <class A>
A lr_power(const A& x, const A& y, const A& b, unsigned m) {
    A r = b;
    for (unsigned k = 0; k < m; ++k) r = A(x * r - r * y);
    return r;
}

} // namespace tomex
