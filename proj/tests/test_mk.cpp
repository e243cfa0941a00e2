#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncprob/mk.hpp"

using namespace ncprob;

namespace {

// arbitrary rational moment sequences; the identities under test are formal
std::vector<Rat> odd_moments() {
    return {Rat(1), Rat(1, 2), Rat(2), Rat(1, 3), Rat(4), Rat(9, 2), Rat(6)};
}
std::vector<Rat> other_moments() {
    return {Rat(1), Rat(-1), Rat(3, 2), Rat(2), Rat(17, 3), Rat(-5), Rat(8)};
}

}  // namespace

TEST_CASE("univariate inverse transform: recursion basics") {
    Dist delta0 = point_mass(Rat(0), 6);
    CHECK(inverse_mk_uni(delta0, 6).m == delta0.m);

    Dist sc = semicircle(8);
    Dist tau = inverse_mk_uni(sc, 8);
    CHECK(tau.m[1] == 0);
    CHECK(tau.m[2] == 2);
    CHECK(tau.m[4] == 6);

    Dist fp = Dist(free_poisson_moments(4));
    CHECK(inverse_mk_uni(fp, 4).m[1] == fp.m[1]);  // first entries always agree
}

TEST_CASE("univariate transform equals the diagonal of the multivariate one to order 10") {
    std::vector<Rat> m = free_poisson_moments(10);
    MomentFunctional f = functional_from_moments(m);
    Dist tau = inverse_mk_uni(Dist(m), 10);
    Word w;
    for (int n = 1; n <= 10; ++n) {
        w.letters.push_back(0);
        CHECK(inverse_mk_multi(w, f) == tau.m[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("multivariate transform: small cases") {
    CompressionContext ctx = compression_context({{"a", odd_moments()}, {"b", other_moments()}});
    MomentFunctional f = main_functional(ctx);
    // n = 1: the full sum is the first cumulant, i.e. the mean
    CHECK(inverse_mk_multi(Word{{0}}, f) == Rat(1, 2));
    // centered single variable at n = 2: both partitions weigh the variance
    std::vector<Rat> centered{Rat(1), Rat(0), Rat(5, 7), Rat(0), Rat(2)};
    MomentFunctional fc = functional_from_moments(centered);
    CHECK(inverse_mk_multi(Word{{0, 0}}, fc) == 2 * Rat(5, 7));
    // grouped machinery agrees with the letterwise path on singleton factors
    std::vector<Word> args{Word{{0}}, Word{{1}}, Word{{0}}};
    CHECK(kreweras_weighted_sum(args, f) == inverse_mk_multi(Word{{0, 1, 0}}, f));
}

TEST_CASE("compressed phi' equals minus the multivariate transform (words <= 6)") {
    CompressionContext ctx = compression_context({{"a", odd_moments()}, {"b", other_moments()}});
    MomentFunctional f = main_functional(ctx);
    std::vector<Word> words = words_over({0, 1}, 6);
    for (const Word& w : words)
        CHECK(compressed_phi_prime(w, ctx) == -inverse_mk_multi(w, f));
    // mixed word of free centered semicirculars vanishes
    CompressionContext sc2 =
        compression_context({{"a", semicircle_moments(6)}, {"b", semicircle_moments(6)}});
    CHECK(compressed_phi_prime(sc2.s.alphabet.word({"a", "b"}), sc2) == 0);
    // single factor: phi'(p a p) = -phi(a)
    CHECK(compressed_phi_prime(Word{{0}}, ctx) == -Rat(1, 2));
}

TEST_CASE("unit-slot summation route agrees (words <= 4)") {
    CompressionContext ctx = compression_context({{"a", odd_moments()}, {"b", other_moments()}});
    MomentFunctional f = main_functional(ctx);
    for (const Word& w : words_over({0, 1}, 4))
        CHECK(compressed_phi_prime_unit_sum(w, f) == compressed_phi_prime(w, ctx));
}

TEST_CASE("infinitesimal cumulants of compressed variables: (1-n) kappa_n") {
    CompressionContext ctx = compression_context({{"a", odd_moments()}, {"b", other_moments()}});
    MomentFunctional f = main_functional(ctx);
    for (const Word& w : words_over({0, 1}, 4)) {
        Rat kn = free_cumulant_full(w, f).std_;
        int n = static_cast<int>(w.size());
        CHECK(compressed_inf_cumulant(w, ctx) == Rat(1 - n) * kn);
    }
    // frozen single-variable values
    CompressionContext sc = compression_context({{"a", semicircle_moments(6)}});
    CHECK(compressed_inf_cumulant(Word{{0}}, sc) == 0);
    CHECK(compressed_inf_cumulant(Word{{0, 0}}, sc) == -1);
    CompressionContext fp = compression_context({{"a", free_poisson_moments(6)}});
    CHECK(compressed_inf_cumulant(Word{{0, 0, 0}}, fp) == -2);
}

TEST_CASE("compressed free families are infinitesimally free under (psi, psi')") {
    CompressionContext ctx =
        compression_context({{"a", semicircle_moments(8)}, {"b", free_poisson_moments(8)}});
    MomentFunctional cf = compressed_functional(ctx);

    Scenario s;
    s.law = Law::INF_FREE;
    s.alphabet.add({"a", "a", GenKind::Main, false});
    s.alphabet.add({"b", "b", GenKind::Main, false});
    for (const std::string& id : {"a", "b"}) {
        std::vector<Rat> ms{Rat(1)}, is{Rat(0)};
        Word w;
        int letter = s.alphabet.index_of(id);
        for (int n = 1; n <= 8; ++n) {
            w.letters.push_back(letter);
            DualQ v = cf(w);
            ms.push_back(v.std_);
            is.push_back(v.inf_);
        }
        s.groups.emplace(id, functional_from_moments(ms, is));
    }
    Report rep = verify_independence(cf, s, 5);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("core combinatorial identity for free families") {
    CompressionContext ctx =
        compression_context({{"a", semicircle_moments(8)}, {"b", free_poisson_moments(8)}});
    MomentFunctional f = main_functional(ctx);
    Word a{{0}}, b{{1}};
    CHECK(check_core_lemma({a}, {b}, f).ok());
    CHECK(check_core_lemma({a, a}, {b, b}, f).ok());
    CHECK(check_core_lemma({a, a, a}, {b, b, b}, f).ok());
    // longer words as arguments within each group
    Word aa{{0, 0}};
    CHECK(check_core_lemma({aa, a}, {b, b}, f).ok());
}

TEST_CASE("transform propositions: additive, multiplicative, compressed law") {
    SUBCASE("semicircle pair to order 8") {
        Report r = check_mk_propositions(semicircle(10), semicircle(10), 8);
        CHECK(r.violations.empty());
        CHECK(r.checked > 0);
    }
    SUBCASE("point mass at 1 is the multiplicative unit") {
        Report r = check_mk_propositions(Dist(free_poisson_moments(10)), point_mass(Rat(1), 10), 8);
        CHECK(r.violations.empty());
    }
    SUBCASE("projection laws") {
        Report r = check_mk_propositions(Dist(bernoulli_moments(Rat(1, 2), 8)),
                                         Dist(bernoulli_moments(Rat(1, 3), 8)), 6);
        CHECK(r.violations.empty());
    }
}

TEST_CASE("anti-commutator of compressions is not the compression of the anti-commutator") {
    auto [x2, big_x2] = anticommutator_counterexample();
    CHECK(x2 == 4);
    CHECK(big_x2 == 6);

    // the aligned terms of the two four-term expansions agree pairwise
    CompressionContext ctx =
        compression_context({{"a", semicircle_moments(8)}, {"b", semicircle_moments(8)}});
    Word ab = ctx.s.alphabet.word({"a", "b"});
    Word ba = ctx.s.alphabet.word({"b", "a"});
    CHECK(compressed_phi_prime({ab, ab}, ctx) == compressed_phi_prime(concat(ab, ab), ctx));
    CHECK(compressed_phi_prime({ba, ba}, ctx) == compressed_phi_prime(concat(ba, ba), ctx));

    // degenerate marginals kill every term
    CompressionContext zero =
        compression_context({{"a", point_mass_moments(Rat(0), 8)}, {"b", point_mass_moments(Rat(0), 8)}});
    Word zab = zero.s.alphabet.word({"a", "b"});
    Word zba = zero.s.alphabet.word({"b", "a"});
    Rat zx2 = 0, zbig = 0;
    for (const Word& g : {zab, zba})
        for (const Word& h : {zab, zba}) {
            zx2 += compressed_phi_prime({g, h}, zero);
            zbig += compressed_phi_prime(concat(g, h), zero);
        }
    CHECK(zx2 == 0);
    CHECK(zbig == 0);
}
