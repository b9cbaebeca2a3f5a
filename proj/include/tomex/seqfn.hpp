#pragma once

#include <cstddef>
#include <vector>

#include "tomex/errors.hpp"
#include "tomex/rational.hpp"

namespace tomex {

// Finitely supported function on the naturals with values in an algebra A
// (typically Matrix<S>).  Values beyond the stored length are zero by
// definition; arithmetic is pointwise and requires equal lengths.
template <class A>
class SeqFn {
  public:
    SeqFn() = default;

    SeqFn(std::size_t length, const A& fill) : v_(length, fill) {}

    explicit SeqFn(std::vector<A> values) : v_(std::move(values)) {}

    std::size_t length() const { return v_.size(); }

    const A& at(std::size_t n) const { return v_.at(n); }
    A& at(std::size_t n) { return v_.at(n); }

    SeqFn operator+(const SeqFn& o) const {
        check(o);
        SeqFn r(*this);
        for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] = A(r.v_[k] + o.v_[k]);
        return r;
    }

    SeqFn operator-(const SeqFn& o) const {
        check(o);
        SeqFn r(*this);
        for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] = A(r.v_[k] - o.v_[k]);
        return r;
    }

    SeqFn operator-() const {
        SeqFn r(*this);
        for (auto& x : r.v_) x = A(-x);
        return r;
    }

    SeqFn operator*(const SeqFn& o) const {
        check(o);
        SeqFn r(*this);
        for (std::size_t k = 0; k < v_.size(); ++k) r.v_[k] = A(r.v_[k] * o.v_[k]);
        return r;
    }

    bool operator==(const SeqFn& o) const { return v_ == o.v_; }

    const std::vector<A>& values() const { return v_; }

  private:
    void check(const SeqFn& o) const {
        if (v_.size() != o.v_.size()) throw mismatch_error("sequence length mismatch");
    }

    std::vector<A> v_;
};

template <class A>
SeqFn<A> zero_like(const SeqFn<A>& f) {
    if (f.length() == 0) return f;
    return SeqFn<A>(f.length(), zero_like(f.at(0)));
}

template <class A>
SeqFn<A> one_like(const SeqFn<A>& f) {
    if (f.length() == 0) return f;
    return SeqFn<A>(f.length(), one_like(f.at(0)));
}

template <class A>
bool is_zero(const SeqFn<A>& f) {
    for (const auto& x : f.values())
        if (!is_zero(x)) return false;
    return true;
}

template <class A>
double abs_norm(const SeqFn<A>& f) {
    double r = 0;
    for (const auto& x : f.values()) r = std::max(r, abs_norm(x));
    return r;
}

template <class A>
struct algebra_scalar<SeqFn<A>> {
    using type = scalar_t<A>;
};

template <class A>
SeqFn<A> scale(const SeqFn<A>& f, const scalar_t<A>& c) {
    SeqFn<A> r(f);
    for (std::size_t k = 0; k < f.length(); ++k) r.at(k) = scale(f.at(k), c);
    return r;
}

// Forward difference: delta(f)(n) = f(n+1) - f(n), shortening by one.
template <class A>
SeqFn<A> delta(const SeqFn<A>& f) {
    if (f.length() < 2) throw mismatch_error("delta needs length >= 2");
    std::vector<A> r;
    r.reserve(f.length() - 1);
    for (std::size_t n = 0; n + 1 < f.length(); ++n) r.push_back(A(f.at(n + 1) - f.at(n)));
    return SeqFn<A>(std::move(r));
}

// Partial-sum map rsum(f)(n) = sum of f(0..n-1); rsum(f)(0) = 0.
template <class A>
SeqFn<A> rsum(const SeqFn<A>& f) {
    SeqFn<A> r = zero_like(f);
    if (f.length() == 0) return r;
    A acc = zero_like(f.at(0));
    for (std::size_t n = 0; n < f.length(); ++n) {
        r.at(n) = acc;
        acc = A(acc + f.at(n));
    }
    return r;
}

} // namespace tomex
