#pragma once

#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

/// Truncated Laurent series in t = 1/z with exact-order bookkeeping.
///
/// Represents sum_{j=lead}^{kmax} c[j-lead] * t^j where every stored
/// coefficient is exact and nothing is claimed beyond t^kmax. Operations
/// propagate kmax conservatively so a coefficient is never reported unless
/// it is provably exact.
class Laurent {
public:
    Laurent() : lead_(0), kmax_(-1) {}
    Laurent(int lead, int kmax, std::vector<Rat> coeffs);

    static Laurent zero(int kmax) { return Laurent(0, kmax, {}); }
    static Laurent constant(const Rat& c, int kmax);
    static Laurent monomial(const Rat& c, int power, int kmax);

    int lead() const { return lead_; }
    int kmax() const { return kmax_; }
    /// Coefficient of t^j; exact for j <= kmax, throws beyond.
    Rat coeff(int j) const;
    bool is_zero() const;

    Laurent truncated(int new_kmax) const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Rat& c);

    /// Multiplicative inverse; the lead coefficient must be nonzero.
    Laurent inverse() const;

    /// Formal d/dz = -t^2 d/dt.
    Laurent d_dz() const;

    /// Substitutes `arg` (a series with lead() == -1 and unit lead
    /// coefficient, i.e. an F-type series z + O(1)) for z. `this` must have
    /// lead() >= -1.
    Laurent compose_at(const Laurent& arg) const;

private:
    void trim();
    int lead_;
    int kmax_;
    std::vector<Rat> c_;  // c_[i] is the coefficient of t^(lead_+i)
};

enum class SeriesKind { G, F };

/// A transform-calculus series: G-type sum_{n>=0} c_n z^{-n-1} or F-type
/// z + sum_{n>=0} d_n z^{-n}. `order` is the truncation order K carried by
/// the value; the Laurent payload tracks the provably exact range.
struct TruncSeries {
    SeriesKind kind;
    int order;
    Laurent series;
};

/// Cauchy transform from moments m_0..m_K (m_0 must equal 1).
TruncSeries g_from_moments(const std::vector<Rat>& m, int K);

/// Moments m_0..m_K back out of a G-type series; throws if the series does
/// not carry order K exactly.
std::vector<Rat> moments_from_g(const TruncSeries& g, int K);

/// F = 1/G. The result is exact to order K-1 when G carries order K.
TruncSeries reciprocal(const TruncSeries& g);

/// G = 1/F.
TruncSeries g_from_f(const TruncSeries& f);

/// F1 o F2; both must be F-type.
TruncSeries compose(const TruncSeries& f1, const TruncSeries& f2);

/// Compositional inverse of an F-type series, by fixed-point iteration on
/// truncated series; F o F^{-1} = z to the carried order.
TruncSeries comp_inverse(const TruncSeries& f);

/// Termwise formal d/dz.
TruncSeries derivative(const TruncSeries& s);

}  // namespace ncprob
