#pragma once

#include <vector>

#include "ncprob/series.hpp"

namespace ncprob {

/// Moment sequence m_0..m_K of a distribution; m_0 = 1.
struct Dist {
    std::vector<Rat> m;

    Dist() : m{Rat(1)} {}
    explicit Dist(std::vector<Rat> moments);
    int order() const { return static_cast<int>(m.size()) - 1; }
};

/// Infinitesimal distribution: a std layer plus a phi'-layer sequence
/// (inf[0] records the value on the unit, normally 0).
struct InfDist {
    Dist std;
    std::vector<Rat> inf;
};

Dist point_mass(const Rat& c, int K);
Dist semicircle(int K);

/// Free convolution by cumulant additivity; exact to min(order1, order2).
Dist free_add(const Dist& m1, const Dist& m2, int K);

/// Free convolution by the inverse-F additivity formula; independent code
/// path used as a cross-check of free_add. Same guaranteed order.
Dist free_add_via_finv(const Dist& m1, const Dist& m2, int K);

/// Boolean convolution: F = F1 + F2 - z.
Dist boolean_add(const Dist& m1, const Dist& m2, int K);

/// Monotone convolution m1 |> m2: F = F1 o F2.
Dist monotone_add(const Dist& m1, const Dist& m2, int K);

/// Free multiplicative convolution via the mixed-moment engine: the n-th
/// moment is the free joint value of (ab)^n.
Dist free_mult(const Dist& m1, const Dist& m2, int K);

/// c-free convolution: F = F_{nu1} o w1 + F_{nu2} o w2 - F_{boxplus}, with
/// subordinations w_i = F_{mu_i}^{-1} o F_{mu1 boxplus mu2}. Exact to the
/// minimum of the four input orders.
Dist cfree_add(const Dist& mu1, const Dist& nu1, const Dist& mu2, const Dist& nu2, int K);

/// Infinitesimal free convolution: std layer by free_add; inf layer by
/// G = G_{nu1}(w1) w1' + G_{nu2}(w2) w2'. The inf layer is guaranteed to
/// order min(inf orders, std order - 2) by the series bookkeeping.
InfDist inf_free_add(const InfDist& d1, const InfDist& d2, int K);

/// Cyclic-antimonotone convolution of a std-layer mu with a phi'-layer nu:
/// G = G_nu(F_mu(z)) F_mu'(z). nu[0] may be nonzero. Guaranteed to order
/// min(nu order, mu order - 2).
std::vector<Rat> cyclic_antimonotone_conv(const Dist& mu, const std::vector<Rat>& nu, int K);

}  // namespace ncprob
