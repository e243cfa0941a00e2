#include "ncprob/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncprob {

Laurent::Laurent(int lead, int kmax, std::vector<Rat> coeffs)
    : lead_(lead), kmax_(kmax), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) > kmax_ - lead_ + 1)
        throw std::invalid_argument("Laurent: more coefficients than exact range");
    c_.resize(std::max(0, kmax_ - lead_ + 1));
    trim();
}

void Laurent::trim() {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    if (i > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(i));
        lead_ += static_cast<int>(i);
    }
    if (c_.empty()) lead_ = kmax_ + 1;
}

Laurent Laurent::constant(const Rat& c, int kmax) { return Laurent(0, kmax, {c}); }

Laurent Laurent::monomial(const Rat& c, int power, int kmax) {
    return Laurent(power, kmax, {c});
}

Rat Laurent::coeff(int j) const {
    if (j > kmax_) throw std::out_of_range("Laurent::coeff: beyond exact truncation order");
    if (j < lead_ || j > lead_ + static_cast<int>(c_.size()) - 1) return Rat(0);
    return c_[j - lead_];
}

bool Laurent::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Laurent Laurent::truncated(int new_kmax) const {
    if (new_kmax >= kmax_) return *this;
    int len = std::max(0, new_kmax - lead_ + 1);
    return Laurent(lead_, new_kmax,
                   std::vector<Rat>(c_.begin(), c_.begin() + std::min<std::size_t>(len, c_.size())));
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    int kmax = std::min(a.kmax_, b.kmax_);
    int lead = std::min(a.lead_, b.lead_);
    if (lead > kmax) lead = kmax;
    std::vector<Rat> c(std::max(0, kmax - lead + 1));
    for (int j = lead; j <= kmax; ++j)
        c[j - lead] = (j <= a.kmax_ ? a.coeff(j) : Rat(0)) + (j <= b.kmax_ ? b.coeff(j) : Rat(0));
    return Laurent(lead, kmax, std::move(c));
}

Laurent operator-(const Laurent& a) {
    std::vector<Rat> c = a.c_;
    for (auto& x : c) x = -x;
    return Laurent(a.lead_, a.kmax_, std::move(c));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) {
        // zero times anything stays zero at the partner's shifted range
        int kmax = a.is_zero() ? a.kmax_ + b.lead_ : b.kmax_ + a.lead_;
        return Laurent::zero(kmax);
    }
    int lead = a.lead_ + b.lead_;
    int kmax = std::min(a.kmax_ + b.lead_, b.kmax_ + a.lead_);
    std::vector<Rat> c(std::max(0, kmax - lead + 1));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            int deg = a.lead_ + static_cast<int>(i) + b.lead_ + static_cast<int>(j);
            if (deg > kmax) break;
            c[deg - lead] += a.c_[i] * b.c_[j];
        }
    }
    return Laurent(lead, kmax, std::move(c));
}

Laurent operator*(const Laurent& a, const Rat& r) {
    std::vector<Rat> c = a.c_;
    for (auto& x : c) x = x * r;
    return Laurent(a.lead_, a.kmax_, std::move(c));
}

Laurent Laurent::inverse() const {
    if (is_zero() || c_.empty() || c_[0] == 0)
        throw std::domain_error("Laurent::inverse: zero leading coefficient");
    int l = lead_;
    int rel = kmax_ - l;          // relative exact order of 1 + u
    int out_kmax = kmax_ - 2 * l;  // error t^{kmax+1} in input -> t^{kmax+1-2l}
    // invert a0(1+u): power series inversion on the relative part
    std::vector<Rat> u(rel + 1);
    for (int j = 0; j <= rel; ++j) u[j] = c_[0] == 0 ? Rat(0) : coeff(l + j) / c_[0];
    std::vector<Rat> inv(rel + 1);
    inv[0] = 1;
    for (int j = 1; j <= rel; ++j) {
        Rat s = 0;
        for (int i = 1; i <= j; ++i) s += u[i] * inv[j - i];
        inv[j] = -s;
    }
    Rat a0i = Rat(1) / c_[0];
    for (auto& x : inv) x = x * a0i;
    return Laurent(-l, out_kmax, std::move(inv));
}

Laurent Laurent::d_dz() const {
    // d/dz = -t^2 d/dt: c t^j -> -j c t^{j+1}
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i] = -Rat(lead_ + static_cast<int>(i)) * c_[i];
    return Laurent(lead_ + 1, kmax_ + 1, std::move(c));
}

Laurent Laurent::compose_at(const Laurent& arg) const {
    if (arg.lead() != -1 || arg.coeff(-1) != 1)
        throw std::invalid_argument("Laurent::compose_at: argument must be z + O(1)");
    if (lead_ < -1) throw std::invalid_argument("Laurent::compose_at: series lead below -1");
    // this = d_{-1} t^{-1} + sum_{n>=0} d_n t^n evaluated at z = arg:
    // t^{-1} -> arg, t^n -> (1/arg)^n.
    int kmax = std::min(kmax_, arg.kmax());
    Laurent r = arg.inverse();  // lead 1, kmax arg.kmax()+2
    Laurent acc = Laurent::zero(kmax);
    if (lead_ == -1) acc = acc + arg * coeff(-1);
    Laurent rpow = Laurent::constant(1, kmax + 8);
    for (int n = 0; n <= kmax_ && n <= kmax; ++n) {
        if (n > 0) rpow = rpow * r;
        Rat d = coeff(n);
        if (d != 0) acc = acc + rpow * d;
    }
    return acc.truncated(kmax);
}

namespace {

void require_kind(const TruncSeries& s, SeriesKind k, const char* what) {
    if (s.kind != k) throw std::invalid_argument(std::string(what) + ": series kind mismatch");
}

}  // namespace

TruncSeries g_from_moments(const std::vector<Rat>& m, int K) {
    if (m.empty() || m[0] != 1)
        throw std::invalid_argument("g_from_moments: not a distribution (m0 != 1)");
    if (static_cast<int>(m.size()) < K + 1)
        throw std::invalid_argument("g_from_moments: fewer than K+1 moments");
    std::vector<Rat> c(K + 1);
    for (int n = 0; n <= K; ++n) c[n] = m[n];
    return TruncSeries{SeriesKind::G, K, Laurent(1, K + 1, std::move(c))};
}

std::vector<Rat> moments_from_g(const TruncSeries& g, int K) {
    require_kind(g, SeriesKind::G, "moments_from_g");
    if (g.series.kmax() < K + 1)
        throw std::out_of_range("moments_from_g: series not exact to requested order");
    std::vector<Rat> m(K + 1);
    for (int n = 0; n <= K; ++n) m[n] = g.series.coeff(n + 1);
    return m;
}

TruncSeries reciprocal(const TruncSeries& g) {
    require_kind(g, SeriesKind::G, "reciprocal");
    if (g.series.coeff(1) != 1)
        throw std::invalid_argument("reciprocal: leading moment must be 1");
    Laurent f = g.series.inverse();
    return TruncSeries{SeriesKind::F, g.order - 1, f};
}

TruncSeries g_from_f(const TruncSeries& f) {
    require_kind(f, SeriesKind::F, "g_from_f");
    Laurent g = f.series.inverse();
    return TruncSeries{SeriesKind::G, f.order + 1, g};
}

TruncSeries compose(const TruncSeries& f1, const TruncSeries& f2) {
    require_kind(f1, SeriesKind::F, "compose");
    require_kind(f2, SeriesKind::F, "compose");
    Laurent out = f1.series.compose_at(f2.series);
    return TruncSeries{SeriesKind::F, std::min(f1.order, f2.order), out};
}

TruncSeries comp_inverse(const TruncSeries& f) {
    require_kind(f, SeriesKind::F, "comp_inverse");
    int kmax = f.series.kmax();
    // Fixed-point iteration H <- H - (F o H - z); each pass fixes one more
    // coefficient of H.
    Laurent z = Laurent::monomial(1, -1, kmax);
    Laurent h = z;
    for (int it = 0; it <= kmax + 2; ++it) {
        Laurent err = f.series.compose_at(h) - z;
        if (err.is_zero()) break;
        h = h - err;
    }
    return TruncSeries{SeriesKind::F, f.order, h.truncated(kmax)};
}

TruncSeries derivative(const TruncSeries& s) {
    return TruncSeries{s.kind, s.order, s.series.d_dz()};
}

}  // namespace ncprob
