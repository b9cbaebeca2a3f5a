#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "tomex/errors.hpp"
#include "tomex/rational.hpp"

namespace tomex {

// Degree cap shared by all polynomial computations.  Identities in this
// library stay far below it; blowing through the cap indicates a runaway
// computation rather than a legitimately large answer.
inline std::atomic<int>& poly_degree_cap() {
    static std::atomic<int> cap{64};
    return cap;
}

inline void set_poly_degree_cap(int cap) { poly_degree_cap().store(cap); }

// Univariate polynomial in t over a field scalar S, dense coefficients,
// normalised so the leading stored coefficient is nonzero.
template <class S>
class Poly {
  public:
    Poly() = default;

    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }

    static Poly monomial(const S& v, std::size_t degree) {
        std::vector<S> c(degree + 1, field<S>::zero());
        c[degree] = v;
        return Poly(std::move(c));
    }

    // Number of stored coefficients; degree() is size()-1 for nonzero polys.
    std::size_t size() const { return c_.size(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const S& coeff(std::size_t k) const {
        static const S z = field<S>::zero();
        return k < c_.size() ? c_[k] : z;
    }

    const std::vector<S>& coeffs() const { return c_; }

    S eval(const S& t) const {
        S r = field<S>::zero();
        for (std::size_t k = c_.size(); k-- > 0;) r = S(r * t + c_[k]);
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<S> r(std::max(c_.size(), o.c_.size()), field<S>::zero());
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = S(coeff(k) + o.coeff(k));
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<S> r(std::max(c_.size(), o.c_.size()), field<S>::zero());
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = S(coeff(k) - o.coeff(k));
        return Poly(std::move(r));
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = S(-x);
        return r;
    }

    Poly operator*(const Poly& o) const {
        if (c_.empty() || o.c_.empty()) return Poly();
        const int deg = degree() + o.degree();
        if (deg > poly_degree_cap().load())
            throw degree_overflow_error("polynomial degree overflow");
        std::vector<S> r(c_.size() + o.c_.size() - 1, field<S>::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (field<S>::is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = S(r[i + j] + c_[i] * o.c_[j]);
        }
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Exact antiderivative with value 0 at t = 0.
    Poly integrate() const {
        if (c_.empty()) return Poly();
        if (degree() + 1 > poly_degree_cap().load())
            throw degree_overflow_error("polynomial degree overflow in integrate");
        std::vector<S> r(c_.size() + 1, field<S>::zero());
        for (std::size_t k = 0; k < c_.size(); ++k)
            r[k + 1] = S(c_[k] / field<S>::from_int(static_cast<long>(k) + 1));
        return Poly(std::move(r));
    }

    Poly derive() const {
        if (c_.size() <= 1) return Poly();
        std::vector<S> r(c_.size() - 1, field<S>::zero());
        for (std::size_t k = 1; k < c_.size(); ++k)
            r[k - 1] = S(c_[k] * field<S>::from_int(static_cast<long>(k)));
        return Poly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && field<S>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<S> c_;
};

template <class S>
Poly<S> zero_like(const Poly<S>&) {
    return Poly<S>();
}

template <class S>
Poly<S> one_like(const Poly<S>&) {
    return Poly<S>::constant(field<S>::one());
}

template <class S>
bool is_zero(const Poly<S>& p) {
    return p.size() == 0;
}

template <class S>
double abs_norm(const Poly<S>& p) {
    double r = 0;
    for (const auto& x : p.coeffs()) r = std::max(r, field<S>::abs_double(x));
    return r;
}

template <class S>
struct algebra_scalar<Poly<S>> {
    using type = S;
};

template <class S>
Poly<S> scale(const Poly<S>& p, const S& c) {
    std::vector<S> r(p.coeffs());
    for (auto& x : r) x = S(x * c);
    return Poly<S>(std::move(r));
}

} // namespace tomex
