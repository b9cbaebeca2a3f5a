#pragma once

#include <cstddef>
#include <vector>

#include "tomex/errors.hpp"
#include "tomex/rational.hpp"

namespace tomex {

// Truncated Laurent series in epsilon with a bounded pole part: coefficients
// for exponents -maxPole .. truncation are stored, everything above the
// truncation order is cut off, and any product that would push a nonzero
// coefficient below -maxPole raises pole_overflow_error.  All elements taking
// part in one computation share the same window.
template <class S>
class Laurent {
  public:
    Laurent() = default;

    Laurent(int max_pole, int truncation)
        : max_pole_(max_pole), trunc_(truncation),
          c_(static_cast<std::size_t>(max_pole + truncation + 1), field<S>::zero()) {}

    static Laurent monomial(int max_pole, int truncation, int exponent, const S& v) {
        Laurent l(max_pole, truncation);
        l.set(exponent, v);
        return l;
    }

    int max_pole() const { return max_pole_; }
    int truncation() const { return trunc_; }

    const S& coeff(int exponent) const {
        static const S z = field<S>::zero();
        if (exponent < -max_pole_ || exponent > trunc_) return z;
        return c_[static_cast<std::size_t>(exponent + max_pole_)];
    }

    void set(int exponent, const S& v) {
        if (exponent < -max_pole_ || exponent > trunc_)
            throw mismatch_error("Laurent exponent outside window");
        c_[static_cast<std::size_t>(exponent + max_pole_)] = v;
    }

    Laurent operator+(const Laurent& o) const {
        check(o);
        Laurent r(*this);
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = S(r.c_[k] + o.c_[k]);
        return r;
    }

    Laurent operator-(const Laurent& o) const {
        check(o);
        Laurent r(*this);
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = S(r.c_[k] - o.c_[k]);
        return r;
    }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& x : r.c_) x = S(-x);
        return r;
    }

    Laurent operator*(const Laurent& o) const {
        check(o);
        Laurent r(max_pole_, trunc_);
        for (int i = -max_pole_; i <= trunc_; ++i) {
            const S& a = coeff(i);
            if (field<S>::is_zero(a)) continue;
            for (int j = -max_pole_; j <= trunc_; ++j) {
                const S& b = o.coeff(j);
                if (field<S>::is_zero(b)) continue;
                const int e = i + j;
                if (e > trunc_) continue; // formal truncation
                if (e < -max_pole_)
                    throw pole_overflow_error("Laurent pole part exceeds window");
                r.set(e, S(r.coeff(e) + a * b));
            }
        }
        return r;
    }

    bool operator==(const Laurent& o) const {
        return max_pole_ == o.max_pole_ && trunc_ == o.trunc_ && c_ == o.c_;
    }

    // Projection onto the strict pole part (exponents < 0).
    Laurent pole_part() const {
        Laurent r(max_pole_, trunc_);
        for (int e = -max_pole_; e < 0; ++e) r.set(e, coeff(e));
        return r;
    }

    const std::vector<S>& raw() const { return c_; }

  private:
    void check(const Laurent& o) const {
        if (max_pole_ != o.max_pole_ || trunc_ != o.trunc_)
            throw mismatch_error("Laurent window mismatch");
    }

    int max_pole_ = 0;
    int trunc_ = 0;
    std::vector<S> c_;
};

template <class S>
Laurent<S> zero_like(const Laurent<S>& l) {
    return Laurent<S>(l.max_pole(), l.truncation());
}

template <class S>
Laurent<S> one_like(const Laurent<S>& l) {
    return Laurent<S>::monomial(l.max_pole(), l.truncation(), 0, field<S>::one());
}

template <class S>
bool is_zero(const Laurent<S>& l) {
    for (const auto& x : l.raw())
        if (!field<S>::is_zero(x)) return false;
    return true;
}

template <class S>
double abs_norm(const Laurent<S>& l) {
    double r = 0;
    for (const auto& x : l.raw()) r = std::max(r, field<S>::abs_double(x));
    return r;
}

template <class S>
struct algebra_scalar<Laurent<S>> {
    using type = S;
};

template <class S>
Laurent<S> scale(const Laurent<S>& l, const S& c) {
    Laurent<S> r(l);
    for (int e = -l.max_pole(); e <= l.truncation(); ++e) r.set(e, S(l.coeff(e) * c));
    return r;
}

} // namespace tomex
