#include "ncprob/conv.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ncprob/cumulants.hpp"
#include "ncprob/indep.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

namespace {

std::vector<Rat> take(const std::vector<Rat>& v, int K) {
    return std::vector<Rat>(v.begin(), v.begin() + K + 1);
}

void require_order(int guaranteed, int K, const char* what) {
    if (K < 0 || K > guaranteed)
        throw std::invalid_argument(std::string(what) + ": requested order " + std::to_string(K) +
                                    " exceeds guaranteed exact order " + std::to_string(guaranteed));
}

TruncSeries f_of(const Dist& d) { return reciprocal(g_from_moments(d.m, d.order())); }

std::vector<Rat> moments_of_f(const Laurent& f, int K) {
    TruncSeries fs{SeriesKind::F, f.kmax(), f};
    return moments_from_g(g_from_f(fs), K);
}

// sum_n v[n] z^{-(n+1)}: the Cauchy-type series of a (possibly non-unital)
// moment sequence, v[0] included.
Laurent g_of_seq(const std::vector<Rat>& v) {
    return Laurent(1, static_cast<int>(v.size()), v);
}

Laurent subordination(const Dist& mu, const Laurent& f_boxplus) {
    return comp_inverse(f_of(mu)).series.compose_at(f_boxplus);
}

}  // namespace

Dist::Dist(std::vector<Rat> moments) : m(std::move(moments)) {
    if (m.empty() || m[0] != 1)
        throw std::invalid_argument("Dist: moment sequence must start with m0 = 1");
}

Dist point_mass(const Rat& c, int K) { return Dist(point_mass_moments(c, K)); }
Dist semicircle(int K) { return Dist(semicircle_moments(K)); }

Dist free_add(const Dist& m1, const Dist& m2, int K) {
    require_order(std::min(m1.order(), m2.order()), K, "free_add");
    std::vector<Rat> k1 = cumulants_from_moment_seq(take(m1.m, K));
    std::vector<Rat> k2 = cumulants_from_moment_seq(take(m2.m, K));
    for (int n = 1; n <= K; ++n) k1[n] += k2[n];
    return Dist(moment_seq_from_cumulants(k1));
}

Dist free_add_via_finv(const Dist& m1, const Dist& m2, int K) {
    require_order(std::min(m1.order(), m2.order()), K, "free_add_via_finv");
    Laurent f1 = comp_inverse(f_of(m1)).series;
    Laurent f2 = comp_inverse(f_of(m2)).series;
    Laurent z = Laurent::monomial(1, -1, std::max(f1.kmax(), f2.kmax()));
    Laurent s = f1 + f2 - z;
    Laurent f = comp_inverse(TruncSeries{SeriesKind::F, s.kmax(), s}).series;
    return Dist(moments_of_f(f, K));
}

Dist boolean_add(const Dist& m1, const Dist& m2, int K) {
    require_order(std::min(m1.order(), m2.order()), K, "boolean_add");
    Laurent f1 = f_of(m1).series;
    Laurent f2 = f_of(m2).series;
    Laurent z = Laurent::monomial(1, -1, std::max(f1.kmax(), f2.kmax()));
    return Dist(moments_of_f(f1 + f2 - z, K));
}

Dist monotone_add(const Dist& m1, const Dist& m2, int K) {
    require_order(std::min(m1.order(), m2.order()), K, "monotone_add");
    Laurent f = f_of(m1).series.compose_at(f_of(m2).series);
    return Dist(moments_of_f(f, K));
}

Dist free_mult(const Dist& m1, const Dist& m2, int K) {
    require_order(std::min(m1.order(), m2.order()), K, "free_mult");
    Scenario s;
    int ia = s.alphabet.add({"a", "1", GenKind::Main, false});
    int ib = s.alphabet.add({"b", "2", GenKind::Main, false});
    s.groups.emplace("1", functional_from_moments(m1.m));
    s.groups.emplace("2", functional_from_moments(m2.m));
    std::vector<Rat> out{Rat(1)};
    Word w;
    for (int n = 1; n <= K; ++n) {
        w.letters.push_back(ia);
        w.letters.push_back(ib);
        out.push_back(mm_free(s, w).std_);
    }
    return Dist(std::move(out));
}

Dist cfree_add(const Dist& mu1, const Dist& nu1, const Dist& mu2, const Dist& nu2, int K) {
    int guaranteed = std::min(std::min(mu1.order(), mu2.order()),
                              std::min(nu1.order(), nu2.order()));
    require_order(guaranteed, K, "cfree_add");
    int km = std::min(mu1.order(), mu2.order());
    Laurent fb = f_of(free_add(mu1, mu2, km)).series;
    Laurent w1 = subordination(mu1, fb);
    Laurent w2 = subordination(mu2, fb);
    Laurent f = f_of(nu1).series.compose_at(w1) + f_of(nu2).series.compose_at(w2) - fb;
    return Dist(moments_of_f(f, K));
}

InfDist inf_free_add(const InfDist& d1, const InfDist& d2, int K) {
    int km = std::min(d1.std.order(), d2.std.order());
    int kinf = std::min({static_cast<int>(d1.inf.size()) - 1,
                         static_cast<int>(d2.inf.size()) - 1, km - 2});
    require_order(km, K, "inf_free_add (std layer)");
    require_order(kinf, K, "inf_free_add (inf layer)");
    InfDist out;
    out.std = free_add(d1.std, d2.std, K);
    Laurent fb = f_of(free_add(d1.std, d2.std, km)).series;
    Laurent w1 = subordination(d1.std, fb);
    Laurent w2 = subordination(d2.std, fb);
    Laurent g = g_of_seq(d1.inf).compose_at(w1) * w1.d_dz() +
                g_of_seq(d2.inf).compose_at(w2) * w2.d_dz();
    out.inf.resize(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n <= K; ++n) out.inf[static_cast<std::size_t>(n)] = g.coeff(n + 1);
    return out;
}

std::vector<Rat> cyclic_antimonotone_conv(const Dist& mu, const std::vector<Rat>& nu, int K) {
    int guaranteed = std::min(static_cast<int>(nu.size()) - 1, mu.order() - 2);
    require_order(guaranteed, K, "cyclic_antimonotone_conv");
    Laurent f = f_of(mu).series;
    Laurent g = g_of_seq(nu).compose_at(f) * f.d_dz();
    std::vector<Rat> out(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n <= K; ++n) out[static_cast<std::size_t>(n)] = g.coeff(n + 1);
    return out;
}

}  // namespace ncprob
