#pragma once

#include <ostream>
#include <stdexcept>

#include "ncprob/rational.hpp"

namespace ncprob {

/// Element a + eps*b of the ring C[eps]/(eps^2).
///
/// The std part carries the ordinary expectation phi, the inf part the
/// infinitesimal layer phi'. Multiplication kills eps^2.
template <typename T>
struct Dual {
    T std_{};
    T inf_{};

    constexpr Dual() = default;
    constexpr Dual(T s) : std_(std::move(s)) {}
    constexpr Dual(T s, T i) : std_(std::move(s)), inf_(std::move(i)) {}

    friend Dual operator+(const Dual& x, const Dual& y) {
        return {x.std_ + y.std_, x.inf_ + y.inf_};
    }
    friend Dual operator-(const Dual& x, const Dual& y) {
        return {x.std_ - y.std_, x.inf_ - y.inf_};
    }
    friend Dual operator-(const Dual& x) { return {-x.std_, -x.inf_}; }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.std_ * y.std_, x.std_ * y.inf_ + x.inf_ * y.std_};
    }
    friend Dual operator*(const Dual& x, const T& c) { return {x.std_ * c, x.inf_ * c}; }
    friend Dual operator*(const T& c, const Dual& x) { return x * c; }

    Dual& operator+=(const Dual& y) { return *this = *this + y; }
    Dual& operator-=(const Dual& y) { return *this = *this - y; }
    Dual& operator*=(const Dual& y) { return *this = *this * y; }

    /// (a + eps b)^{-1} = a^{-1} - eps b a^{-2}; requires a != 0.
    Dual inverse() const {
        if (std_ == T(0)) throw std::domain_error("Dual::inverse: pure-eps element");
        T ai = T(1) / std_;
        return {ai, -inf_ * ai * ai};
    }

    friend bool operator==(const Dual& x, const Dual& y) {
        return x.std_ == y.std_ && x.inf_ == y.inf_;
    }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

    bool is_zero() const { return std_ == T(0) && inf_ == T(0); }

    friend std::ostream& operator<<(std::ostream& os, const Dual& x) {
        return os << "(" << x.std_ << " + " << x.inf_ << "e)";
    }
};

using DualQ = Dual<Rat>;

inline DualQ dual_add(const DualQ& x, const DualQ& y) { return x + y; }
inline DualQ dual_mul(const DualQ& x, const DualQ& y) { return x * y; }
inline DualQ dual_inv(const DualQ& x) { return x.inverse(); }

}  // namespace ncprob
