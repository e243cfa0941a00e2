#include "ncprob/mk.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ncprob/bprime.hpp"
#include "ncprob/ncpart.hpp"

namespace ncprob {

namespace {

// phi_pi with grouped arguments: each block evaluates phi at the
// concatenation of its argument words.
Rat phi_grouped(const NcPartition& pi, const std::vector<Word>& args,
                const MomentFunctional& f) {
    Rat out = 1;
    for (const auto& blk : pi.blocks()) {
        Word w;
        for (int i : blk) w = concat(w, args[static_cast<std::size_t>(i - 1)]);
        out *= f(w).std_;
    }
    return out;
}

// kappa_pi of the grouped arguments by Moebius inversion over refinements.
Rat kappa_grouped(const NcPartition& pi, const std::vector<Word>& args,
                  const MomentFunctional& f) {
    Rat total = 0;
    for (const auto& sigma : refinements(pi))
        total += phi_grouped(sigma, args, f) * mobius(sigma, pi);
    return total;
}

// p w_1 p w_2 p ... p w_k p expanded in the extended algebra.
BPrimeElement compress_factors(const std::vector<Word>& factors, const CompressionContext& ctx) {
    BPrimeElement p = compress(ctx.s.alphabet, Word{}, ctx.q);
    BPrimeElement acc = p;
    for (const auto& w : factors)
        acc = bprime_mul(ctx.s.alphabet, bprime_mul(ctx.s.alphabet, acc, bprime_from_main(w)), p);
    return acc;
}

std::vector<Word> letter_factors(const Word& w) {
    std::vector<Word> factors;
    factors.reserve(w.size());
    for (int l : w.letters) factors.push_back(Word{{l}});
    return factors;
}

}  // namespace

Dist inverse_mk_uni(const Dist& mu, int K) {
    if (K > mu.order())
        throw std::invalid_argument("inverse_mk_uni: requested order exceeds input order");
    std::vector<Rat> t(static_cast<std::size_t>(K) + 1);
    t[0] = 1;
    for (int n = 1; n <= K; ++n) {
        Rat s = Rat(n + 1) * mu.m[static_cast<std::size_t>(n)];
        for (int j = 0; j < n; ++j)
            s -= t[static_cast<std::size_t>(j)] * mu.m[static_cast<std::size_t>(n - j)];
        t[static_cast<std::size_t>(n)] = s;
    }
    return Dist(std::move(t));
}

Rat inverse_mk_multi(const Word& w, const MomentFunctional& f) {
    int n = static_cast<int>(w.size());
    if (n == 0) return 1;
    // kappa_pi factorizes over blocks; memoize the full cumulant per subword
    std::map<Word, Rat> memo;
    auto kap = [&](const Word& sub) {
        auto it = memo.find(sub);
        if (it != memo.end()) return it->second;
        Rat v = free_cumulant_full(sub, f).std_;
        memo.emplace(sub, v);
        return v;
    };
    Rat total = 0;
    for (const auto& pi : enumerate_nc(n)) {
        Rat term = kreweras(pi).num_blocks();
        for (const auto& blk : pi.blocks()) {
            if (term == 0) break;
            term *= kap(subword(w, blk));
        }
        total += term;
    }
    return total;
}

Rat kreweras_weighted_sum(const std::vector<Word>& args, const MomentFunctional& f) {
    int n = static_cast<int>(args.size());
    if (n == 0) return 1;
    Rat total = 0;
    for (const auto& pi : enumerate_nc(n))
        total += Rat(kreweras(pi).num_blocks()) * kappa_grouped(pi, args, f);
    return total;
}

Rat compressed_phi_prime_unit_sum(const Word& w, const MomentFunctional& f) {
    std::vector<Word> args{Word{}};
    for (int l : w.letters) args.push_back(Word{{l}});
    return -kreweras_weighted_sum(args, f);
}

CompressionContext compression_context(
    const std::vector<std::pair<std::string, std::vector<Rat>>>& marginals) {
    CompressionContext ctx;
    ctx.s.law = Law::WEAK_BPRIME;
    for (const auto& [id, m] : marginals) {
        ctx.s.alphabet.add({id, id, GenKind::Main, false});
        ctx.s.groups.emplace(id, functional_from_moments(m));
        ctx.s.algebra_groups.insert(id);
    }
    ctx.q = ctx.s.alphabet.add({"q", "proj", GenKind::Projection, true});
    ctx.s.pert_groups = {"proj"};
    std::vector<Rat> unit_weights(24, Rat(1));
    unit_weights[0] = 0;
    ctx.s.pert_joint = phi_functional_from_values(std::move(unit_weights));
    return ctx;
}

MomentFunctional main_functional(const CompressionContext& ctx) {
    Scenario s = ctx.s;
    return MomentFunctional([s](const Word& w) { return mm_free(s, w); });
}

Rat compressed_phi_prime(const std::vector<Word>& factors, const CompressionContext& ctx) {
    return phi_prime_of(compress_factors(factors, ctx), ctx.s);
}

Rat compressed_phi_prime(const Word& w, const CompressionContext& ctx) {
    return compressed_phi_prime(letter_factors(w), ctx);
}

MomentFunctional compressed_functional(const CompressionContext& ctx) {
    CompressionContext c = ctx;  // shares the scenario cache
    return MomentFunctional([c](const Word& w) {
        BPrimeElement e = compress_factors(letter_factors(w), c);
        Rat psi = phi_of(e, c.s);
        return DualQ(psi, psi + phi_prime_of(e, c.s));
    });
}

Rat compressed_inf_cumulant(const Word& w, const CompressionContext& ctx) {
    return free_cumulant_full(w, compressed_functional(ctx)).inf_;
}

Report check_core_lemma(const std::vector<Word>& as, const std::vector<Word>& bs,
                        const MomentFunctional& f) {
    if (as.size() != bs.size())
        throw std::invalid_argument("check_core_lemma: argument tuples differ in length");
    Report r;
    std::vector<Word> products;
    std::vector<Word> interleaved;
    for (std::size_t i = 0; i < as.size(); ++i) {
        products.push_back(concat(as[i], bs[i]));
        interleaved.push_back(as[i]);
        interleaved.push_back(bs[i]);
    }
    Rat lhs = kreweras_weighted_sum(products, f);
    Rat rhs = kreweras_weighted_sum(interleaved, f);
    ++r.checked;
    if (lhs != rhs)
        r.violations.push_back("product sum " + lhs.str() + " != interleaved sum " + rhs.str());
    return r;
}

Report check_mk_propositions(const Dist& mu1, const Dist& mu2, int K) {
    Report r;
    Dist tau1 = inverse_mk_uni(mu1, mu1.order());
    Dist tau2 = inverse_mk_uni(mu2, mu2.order());

    // (i) the infinitesimal law of a compressed variable is (mu, mu - tau)
    auto check_single = [&](const Dist& mu, const Dist& tau, const char* name) {
        CompressionContext ctx = compression_context({{"a", mu.m}});
        MomentFunctional cf = compressed_functional(ctx);
        Word w;
        int cap = std::min(K, std::min(mu.order(), 8));
        for (int n = 1; n <= cap; ++n) {
            w.letters.push_back(0);
            DualQ v = cf(w);
            ++r.checked;
            if (v.std_ != mu.m[static_cast<std::size_t>(n)] ||
                v.inf_ != mu.m[static_cast<std::size_t>(n)] - tau.m[static_cast<std::size_t>(n)])
                r.violations.push_back(std::string(name) + ": compressed law differs at order " +
                                       std::to_string(n));
        }
    };
    check_single(mu1, tau1, "mu1");
    check_single(mu2, tau2, "mu2");

    // (ii) additive: (mu1, mu1-tau1) + (mu2, mu2-tau2) = (mu, mu-tau)
    if (mu1.order() >= K + 2 && mu2.order() >= K + 2) {
        auto diff = [](const Dist& m, const Dist& t) {
            std::vector<Rat> d(m.m.size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = m.m[i] - t.m[i];
            return d;
        };
        InfDist sum = inf_free_add({mu1, diff(mu1, tau1)}, {mu2, diff(mu2, tau2)}, K);
        Dist mu = free_add(mu1, mu2, K);
        Dist tau = inverse_mk_uni(mu, K);
        ++r.checked;
        if (sum.std.m != mu.m)
            r.violations.push_back("additive: std layer differs");
        ++r.checked;
        if (sum.inf != diff(mu, tau))
            r.violations.push_back("additive: inf layer differs");
    } else {
        r.violations.push_back("additive: input orders below K+2");
    }

    // (iii) multiplicative, via the compressed moment identity
    CompressionContext ctx2 = compression_context({{"a", mu1.m}, {"b", mu2.m}});
    int kmult = std::min({K, 3, mu1.order(), mu2.order()});
    Dist prod = free_mult(mu1, mu2, kmult);
    Dist taup = inverse_mk_uni(prod, kmult);
    Word ab = ctx2.s.alphabet.word({"a", "b"});
    std::vector<Word> grouped, singles;
    for (int n = 1; n <= kmult; ++n) {
        grouped.push_back(ab);
        singles.push_back(Word{{0}});
        singles.push_back(Word{{1}});
        Rat g = compressed_phi_prime(grouped, ctx2);
        Rat s = compressed_phi_prime(singles, ctx2);
        ++r.checked;
        if (g != s)
            r.violations.push_back("multiplicative: grouped/split compressions differ at n = " +
                                   std::to_string(n));
        ++r.checked;
        if (g != -taup.m[static_cast<std::size_t>(n)])
            r.violations.push_back("multiplicative: transform mismatch at n = " +
                                   std::to_string(n));
    }
    return r;
}

std::pair<Rat, Rat> anticommutator_counterexample() {
    CompressionContext ctx =
        compression_context({{"a", semicircle_moments(8)}, {"b", semicircle_moments(8)}});
    Word ab = ctx.s.alphabet.word({"a", "b"});
    Word ba = ctx.s.alphabet.word({"b", "a"});
    Rat x2 = 0, big_x2 = 0;
    for (const Word& g : {ab, ba})
        for (const Word& h : {ab, ba}) {
            x2 -= compressed_phi_prime({g, h}, ctx);
            big_x2 -= compressed_phi_prime(concat(g, h), ctx);
        }
    return {x2, big_x2};
}

}  // namespace ncprob
