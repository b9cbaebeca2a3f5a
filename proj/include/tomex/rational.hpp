#pragma once

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace tomex {

// Exact arithmetic uses GMP rationals; floating arithmetic uses IEEE doubles.
// The two never mix inside a computation: every algebra type below is a
// template over exactly one of them.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Per-field glue used by the generic algebra code.
template <class S>
struct field;

template <>
struct field<Rat> {
    static constexpr bool exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_rat(const Rat& q) { return q; }
    static Rat from_int(long n) { return Rat(n); }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static double abs_double(const Rat& x) { return std::fabs(x.get_d()); }
};

template <>
struct field<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rat(const Rat& q) { return q.get_d(); }
    static double from_int(long n) { return static_cast<double>(n); }
    static bool is_zero(double x) { return x == 0.0; }
    static double abs_double(double x) { return std::fabs(x); }
};

// Scalars are themselves (commutative) algebra elements; these free functions
// make them usable wherever a coefficient algebra is expected.
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline double abs_norm(const Rat& x) { return std::fabs(x.get_d()); }
inline Rat scale(const Rat& x, const Rat& c) { return Rat(x * c); }

inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }
inline bool is_zero(double x) { return x == 0.0; }
inline double abs_norm(double x) { return std::fabs(x); }
inline double scale(double x, double c) { return x * c; }

template <class A>
struct algebra_scalar;

template <>
struct algebra_scalar<Rat> {
    using type = Rat;
};
template <>
struct algebra_scalar<double> {
    using type = double;
};

template <class A>
using scalar_t = typename algebra_scalar<A>::type;

// Multiply by an exact rational constant, converting to the algebra's field.
template <class A>
A scale_rat(const A& a, const Rat& q) {
    return scale(a, field<scalar_t<A>>::from_rat(q));
}

} // namespace tomex
