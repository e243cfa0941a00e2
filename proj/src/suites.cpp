#include "ncprob/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ncprob/bprime.hpp"
#include "ncprob/conv.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/indep.hpp"
#include "ncprob/mk.hpp"
#include "ncprob/ncpart.hpp"
#include "ncprob/rmt.hpp"

namespace ncprob {

bool SuiteResult::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

// Records the first failure only; one CheckResult per named identity.
struct Check {
    CheckResult res;
    explicit Check(std::string name) { res.name = std::move(name); }

    template <typename A, typename B>
    void equal(const A& a, const B& b, const std::string& where) {
        if (!res.pass || a == b) return;
        res.pass = false;
        std::ostringstream os;
        os << where << ": " << a << " != " << b;
        res.detail = os.str();
    }
    void require(bool cond, const std::string& where) {
        if (!res.pass || cond) return;
        res.pass = false;
        res.detail = where;
    }
};

// Small random rationals; denominators kept tiny so the exact arithmetic in
// the deeper sums stays cheap.
struct RatGen {
    std::mt19937_64 rng;
    explicit RatGen(std::uint64_t seed) : rng(seed) {}
    Rat operator()() {
        int num = static_cast<int>(rng() % 17) - 8;
        int den = static_cast<int>(rng() % 3) + 1;
        return Rat(num, den);
    }
    Rat nonzero() {
        Rat r = (*this)();
        return r == 0 ? Rat(1) : r;
    }
    std::vector<Rat> moments(int order) {
        std::vector<Rat> m{Rat(1)};
        for (int k = 1; k <= order; ++k) m.push_back((*this)());
        return m;
    }
};

Scenario two_free_groups(const std::vector<Rat>& m1, const std::vector<Rat>& m2) {
    Scenario s;
    s.alphabet.add({"a", "g1", GenKind::Main, false});
    s.alphabet.add({"b", "g2", GenKind::Main, false});
    s.law = Law::FREE;
    s.groups["g1"] = functional_from_moments(m1);
    s.groups["g2"] = functional_from_moments(m2);
    return s;
}

std::vector<Rat> fixed_m1() {
    return {Rat(1), Rat(1), Rat(3), Rat(7), Rat(21), Rat(61), Rat(190), Rat(602), Rat(1921)};
}
std::vector<Rat> fixed_m2() {
    return {Rat(1), Rat(2), Rat(5), Rat(15), Rat(51), Rat(188), Rat(731), Rat(2950), Rat(12235)};
}

// Two free main groups plus two perturbation groups (one holding the
// projection), trivially independent perturbation side.
Scenario bprime_model() {
    Scenario s;
    s.alphabet.add({"a", "g1", GenKind::Main, false});
    s.alphabet.add({"b", "g2", GenKind::Main, false});
    s.alphabet.add({"f", "p1", GenKind::Perturbation, false});
    s.alphabet.add({"q", "p2", GenKind::Projection, false});
    s.law = Law::BPRIME;
    s.algebra_groups = {"g1", "g2"};
    s.pert_groups = {"p1", "p2"};
    s.groups["g1"] = functional_from_moments(semicircle_moments(8));
    s.groups["g2"] = functional_from_moments(fixed_m1());
    s.groups["p1"] = phi_functional_from_values(
        {Rat(0), Rat(2), Rat(3), Rat(5), Rat(8), Rat(13), Rat(21), Rat(34), Rat(55)});
    s.groups["p2"] = phi_functional_from_values(std::vector<Rat>(9, Rat(1)));
    return s;
}

Word diag_word(int letter, int n) {
    Word w;
    w.letters.assign(static_cast<std::size_t>(n), letter);
    return w;
}

std::string show_word(const Word& w) {
    std::string s;
    for (int l : w.letters) s += static_cast<char>('a' + l);
    return s.empty() ? "1" : s;
}

}  // namespace

SuiteResult lattice_suite(int max_n) {
    SuiteResult out{"lattice", {}};

    Check counts("enumeration sizes match the Catalan numbers");
    for (int n = 1; n <= std::min(max_n, 10); ++n)
        counts.equal(Rat(static_cast<int>(enumerate_nc(n).size())), Rat(catalan(n)),
                     "n=" + std::to_string(n));
    out.checks.push_back(counts.res);

    int ex = std::min(max_n, 6);

    Check rank("complement block-count identity |pi| + |Kr(pi)| = n + 1");
    for (int n = 1; n <= ex; ++n)
        for (const auto& pi : enumerate_nc(n))
            rank.equal(pi.num_blocks() + kreweras(pi).num_blocks(), n + 1, pi.to_string());
    out.checks.push_back(rank.res);

    Check card("relative-complement cardinality |Kr(pi)| = |Kr(sig)| + |Kr(Kr_pi(sig))| - 1");
    for (int n = 1; n <= ex; ++n)
        for (const auto& pi : enumerate_nc(n))
            for (const auto& sig : enumerate_nc(n)) {
                if (!leq(sig, pi)) continue;
                card.equal(kreweras(pi).num_blocks(),
                           kreweras(sig).num_blocks() +
                               kreweras(relative_kreweras(sig, pi)).num_blocks() - 1,
                           sig.to_string() + " <= " + pi.to_string());
            }
    out.checks.push_back(card.res);

    Check anti("complement is a bijective order anti-isomorphism");
    for (int n = 1; n <= ex; ++n) {
        auto all = enumerate_nc(n);
        std::vector<NcPartition> images;
        images.reserve(all.size());
        for (const auto& pi : all) images.push_back(kreweras(pi));
        std::sort(images.begin(), images.end());
        anti.require(std::adjacent_find(images.begin(), images.end()) == images.end(),
                     "complement not injective at n=" + std::to_string(n));
        for (const auto& sig : all)
            for (const auto& pi : all)
                anti.require(leq(sig, pi) == leq(kreweras(pi), kreweras(sig)),
                             sig.to_string() + " vs " + pi.to_string());
    }
    out.checks.push_back(anti.res);

    return out;
}

SuiteResult cumulant_suite(int max_n, std::uint64_t seed) {
    SuiteResult out{"cumulants", {}};
    RatGen gen(seed);
    int len_cap = std::min(max_n, 6);

    Check round("moment/cumulant round trip on randomized functionals");
    Check leib("infinitesimal cumulants: Leibniz route equals the Moebius route");
    for (int rep = 0; rep < 200; ++rep) {
        // arbitrary dual-valued unital functional on words over two letters
        MomentFunctional f([&gen](const Word& w) {
            if (w.empty()) return DualQ(Rat(1));
            return DualQ(gen(), gen());
        });
        CumulantSpec kappa = [&f](const Word& w) { return free_cumulant_full(w, f); };
        for (int k = 0; k < 2; ++k) {
            int len = 1 + static_cast<int>(gen.rng() % static_cast<unsigned>(len_cap));
            Word w;
            for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<int>(gen.rng() % 2));
            DualQ lhs = moments_from_cumulants(kappa, w);
            DualQ rhs = f(w);
            round.equal(lhs.std_, rhs.std_, "rep " + std::to_string(rep) + " word " + show_word(w));
            round.equal(lhs.inf_, rhs.inf_, "rep " + std::to_string(rep) + " word " + show_word(w));
            auto parts = enumerate_nc(len);
            const auto& pi = parts[gen.rng() % parts.size()];
            leib.equal(kappa_prime_leibniz(pi, w, f), free_cumulant(pi, w, f).inf_,
                       "rep " + std::to_string(rep) + " " + pi.to_string());
        }
    }
    out.checks.push_back(round.res);
    out.checks.push_back(leib.res);

    // Idempotent with unit expectation and -1 infinitesimal layer on every
    // power: the marginal of a compressed unit.
    MomentFunctional fp([](const Word& w) {
        return w.empty() ? DualQ(Rat(1)) : DualQ(Rat(1), Rat(-1));
    });
    int pn = std::min(max_n, 7);
    // Full cumulants per block size; cumulant functionals factor over the
    // blocks of pi, which the small-n cross-check below re-verifies against
    // the direct Moebius sum.
    std::vector<DualQ> kfull{DualQ()};
    for (int k = 1; k <= pn; ++k) kfull.push_back(free_cumulant_full(diag_word(0, k), fp));

    Check proj("projection cumulant sums: sum over pi <= sigma of kappa'_pi equals -|sigma|");
    for (int n = 1; n <= pn; ++n) {
        Word w = diag_word(0, n);
        for (const auto& sigma : enumerate_nc(n)) {
            Rat sum = 0;
            for (const auto& pi : refinements(sigma)) {
                DualQ term(Rat(1));
                for (const auto& blk : pi.blocks()) term *= kfull[blk.size()];
                if (n <= 4) proj.equal(term.inf_, free_cumulant(pi, w, fp).inf_, pi.to_string());
                sum += term.inf_;
            }
            proj.equal(sum, Rat(-sigma.num_blocks()), "sigma=" + sigma.to_string());
        }
    }
    out.checks.push_back(proj.res);

    return out;
}

SuiteResult engine_suite(int max_n) {
    SuiteResult out{"engines", {}};
    int wl = std::min(max_n, 6);
    int tl = std::min(max_n, 5);

    Check closure("every engine's joint passes its own law checker");
    auto closed = [&](const Scenario& s, int len, const std::string& label) {
        Report rep = verify_independence(joint_functional(s), s, len);
        closure.require(rep.ok(),
                        label + (rep.violations.empty() ? "" : ": " + rep.violations.front()));
    };
    {
        Scenario s = two_free_groups(fixed_m1(), fixed_m2());
        closed(s, wl, "free");
        s.law = Law::BOOLEAN;
        closed(s, wl, "boolean");
        s.law = Law::MONOTONE;
        s.ordered = {"g1", "g2"};
        closed(s, wl, "monotone");
        s.law = Law::ANTIMONOTONE;
        closed(s, wl, "antimonotone");
        s.law = Law::CFREE;
        s.psi_groups["g1"] = functional_from_moments(
            {Rat(1), Rat(2), Rat(4), Rat(8), Rat(16), Rat(32), Rat(64), Rat(128), Rat(256)});
        s.psi_groups["g2"] = functional_from_moments(
            {Rat(1), Rat(-1), Rat(2), Rat(-3), Rat(5), Rat(-8), Rat(13), Rat(-21), Rat(34)});
        closed(s, wl, "c-free");
    }
    {
        Scenario s = two_free_groups(fixed_m1(), fixed_m2());
        s.law = Law::INF_FREE;
        s.groups["g1"] = functional_from_moments(
            fixed_m1(), {Rat(0), Rat(2), Rat(-1), Rat(4), Rat(1), Rat(9), Rat(-5), Rat(3), Rat(7)});
        s.groups["g2"] = functional_from_moments(
            fixed_m2(), {Rat(0), Rat(-1), Rat(3), Rat(0), Rat(7), Rat(-2), Rat(6), Rat(11), Rat(-4)});
        closed(s, wl, "infinitesimally free");
    }
    {
        Scenario s;
        s.alphabet.add({"f", "p1", GenKind::Perturbation, false});
        s.alphabet.add({"g", "p2", GenKind::Perturbation, false});
        s.law = Law::TRIVIAL;
        s.groups["p1"] = phi_functional_from_values(
            {Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8)});
        s.groups["p2"] = phi_functional_from_values(
            {Rat(5), Rat(7), Rat(11), Rat(13), Rat(17), Rat(19), Rat(23)});
        closed(s, wl, "trivial");
    }
    {
        Scenario s = bprime_model();
        s.law = Law::CYCLIC_ANTIMONOTONE;
        closed(s, wl, "cyclic-antimonotone");
        s = bprime_model();
        s.law = Law::WEAK_BPRIME;
        closed(s, wl, "weak two-layer");
        s = bprime_model();
        closed(s, wl, "two-layer");
    }
    out.checks.push_back(closure.res);

    Check embed("two-layer joint equals the infinitesimal-freeness embedding");
    {
        Report rep = check_bprime_iff_inf_free(bprime_model(), tl);
        embed.require(rep.ok(), rep.violations.empty() ? "" : rep.violations.front());
        embed.require(rep.checked > 0, "no words checked");
    }
    out.checks.push_back(embed.res);

    Check pairtf("paired subalgebras: c-freeness matches boolean perturbations");
    {
        Scenario s = bprime_model();
        Poly P{{s.alphabet.word({"f"}), Rat(1)}};
        Report rep = check_cfree_theorem(s, P, {{"g1", "p1"}, {"g2", "p2"}}, tl);
        pairtf.require(rep.ok(), rep.violations.empty() ? "" : rep.violations.front());
        pairtf.require(rep.checked > 0, "no words checked");
    }
    out.checks.push_back(pairtf.res);

    Check dual("free additive convolution: cumulant route equals inverse-F route");
    {
        Dist a = semicircle(10);
        Dist b = Dist(free_poisson_moments(10));
        for (int n = 0; n <= 10; ++n) {
            dual.equal(free_add(a, b, 10).m[static_cast<std::size_t>(n)],
                       free_add_via_finv(a, b, 10).m[static_cast<std::size_t>(n)],
                       "m_" + std::to_string(n));
        }
    }
    out.checks.push_back(dual.res);

    Check degen("c-free convolution degenerates to free and boolean");
    {
        Dist mu1 = semicircle(8);
        Dist mu2 = Dist(free_poisson_moments(8));
        Dist nu1 = Dist(bernoulli_moments(Rat(1, 3), 8));
        Dist nu2 = Dist(symmetric_bernoulli_moments(8));
        degen.require(cfree_add(mu1, mu1, mu2, mu2, 8).m == free_add(mu1, mu2, 8).m,
                      "matching second layers");
        Dist d0 = point_mass(Rat(0), 8);
        degen.require(cfree_add(d0, nu1, d0, nu2, 8).m == boolean_add(nu1, nu2, 8).m,
                      "point-mass first layers");
    }
    out.checks.push_back(degen.res);

    Check pert1("perturbed free convolution: layers add and convolve separately");
    {
        Dist mu1 = semicircle(12);
        Dist mu2 = Dist(free_poisson_moments(12));
        std::vector<Rat> nu1(11), nu2(11);
        for (int k = 1; k <= 10; ++k) {
            nu1[static_cast<std::size_t>(k)] = Rat(1, k);
            nu2[static_cast<std::size_t>(k)] = Rat(k * k);
        }
        InfDist l1{mu1, cyclic_antimonotone_conv(mu1, nu1, 10)};
        InfDist l2{mu2, cyclic_antimonotone_conv(mu2, nu2, 10)};
        InfDist lhs = inf_free_add(l1, l2, 8);
        Dist mb = free_add(mu1, mu2, 12);
        std::vector<Rat> nusum(11);
        for (int k = 0; k <= 10; ++k)
            nusum[static_cast<std::size_t>(k)] =
                nu1[static_cast<std::size_t>(k)] + nu2[static_cast<std::size_t>(k)];
        pert1.require(std::equal(lhs.std.m.begin(), lhs.std.m.end(), mb.m.begin()),
                      "first layer");
        pert1.require(lhs.inf == cyclic_antimonotone_conv(mb, nusum, 8), "second layer");
    }
    out.checks.push_back(pert1.res);

    Check pert2("c-free convolution of antimonotone perturbations factorizes");
    {
        Dist mu1 = semicircle(8);
        Dist mu2 = Dist(free_poisson_moments(8));
        Dist nu1 = Dist(bernoulli_moments(Rat(1, 3), 8));
        Dist nu2 = Dist(symmetric_bernoulli_moments(8));
        Dist l1 = monotone_add(nu1, mu1, 8);
        Dist l2 = monotone_add(nu2, mu2, 8);
        Dist lhs = cfree_add(mu1, l1, mu2, l2, 8);
        Dist rhs = monotone_add(boolean_add(nu1, nu2, 8), free_add(mu1, mu2, 8), 8);
        pert2.require(lhs.m == rhs.m, "order 8");
    }
    out.checks.push_back(pert2.res);

    return out;
}

SuiteResult bprime_suite(int max_n, std::uint64_t seed) {
    SuiteResult out{"bprime", {}};
    RatGen gen(seed);
    int wl = std::min(max_n, 6);

    Check routes("compressed phi': direct, complement-weighted, and unit-slot routes agree");
    {
        CompressionContext ctx =
            compression_context({{"x", gen.moments(8)}, {"y", gen.moments(8)}});
        MomentFunctional f = main_functional(ctx);
        for (const Word& w : words_over({0, 1}, wl)) {
            Rat direct = compressed_phi_prime(w, ctx);
            routes.equal(direct, -inverse_mk_multi(w, f), "word " + show_word(w));
            routes.equal(direct, compressed_phi_prime_unit_sum(w, f),
                         "unit-slot word " + show_word(w));
        }
    }
    out.checks.push_back(routes.res);

    Check core("complement-weighted sums: products equal the interleaved tuple");
    {
        Scenario s = two_free_groups(gen.moments(8), gen.moments(8));
        MomentFunctional f = joint_functional(s);
        for (int n = 1; n <= std::min(max_n, 4); ++n) {
            std::vector<Word> as(static_cast<std::size_t>(n), Word{{0}});
            std::vector<Word> bs(static_cast<std::size_t>(n), Word{{1}});
            Report rep = check_core_lemma(as, bs, f);
            core.require(rep.ok(), "n=" + std::to_string(n) +
                                       (rep.violations.empty() ? "" : ": " + rep.violations.front()));
        }
    }
    out.checks.push_back(core.res);

    Check anti("anti-commutator counterexample values are (4, 6)");
    {
        auto [x2, X2] = anticommutator_counterexample();
        anti.equal(x2, Rat(4), "compressed product");
        anti.equal(X2, Rat(6), "product of compressions");
    }
    out.checks.push_back(anti.res);

    return out;
}

SuiteResult mk_suite(int max_n) {
    SuiteResult out{"mk", {}};
    int ord = std::max(4, std::min(max_n, 10));

    Check rec("semicircle transform by the coefficient recursion: t2 = 2, t4 = 6");
    {
        Dist tau = inverse_mk_uni(semicircle(ord), ord);
        rec.equal(tau.m[1], Rat(0), "t1");
        rec.equal(tau.m[2], Rat(2), "t2");
        rec.equal(tau.m[3], Rat(0), "t3");
        rec.equal(tau.m[4], Rat(6), "t4");
    }
    out.checks.push_back(rec.res);

    Check nc("semicircle transform by the partition formula: t2 = 2, t4 = 6");
    {
        MomentFunctional f = functional_from_moments(semicircle_moments(ord));
        nc.equal(inverse_mk_multi(diag_word(0, 2), f), Rat(2), "t2");
        nc.equal(inverse_mk_multi(diag_word(0, 4), f), Rat(6), "t4");
    }
    out.checks.push_back(nc.res);

    Check diag("recursion equals the partition formula on the diagonal");
    {
        std::vector<Dist> dists{Dist(free_poisson_moments(ord)),
                                Dist(bernoulli_moments(Rat(2, 5), ord))};
        for (const Dist& mu : dists) {
            Dist tau = inverse_mk_uni(mu, ord);
            MomentFunctional f = functional_from_moments(mu.m);
            for (int n = 1; n <= ord; ++n)
                diag.equal(tau.m[static_cast<std::size_t>(n)],
                           inverse_mk_multi(diag_word(0, n), f), "order " + std::to_string(n));
        }
    }
    out.checks.push_back(diag.res);

    return out;
}

SuiteResult rmt_suite(int samples, std::uint64_t seed) {
    SuiteResult out{"rmt", {}};

    EnsembleSpec base;
    base.samples = samples;
    base.seed = seed;
    base.model = Model::MINOR;
    base.gens = {{"x", false, {{Rat(-1), Rat(1, 2)}, {Rat(1), Rat(1, 2)}}, {}},
                 {"y", false, {{Rat(0), Rat(1, 2)}, {Rat(2), Rat(1, 4)}, {Rat(-1), Rat(1, 4)}}, {}},
                 {"q", true, {}, {}}};

    std::vector<std::vector<std::string>> proj_words{{"q"}, {"q", "q", "q"}};
    std::vector<std::vector<std::string>> main_words{
        {"x"}, {"y"}, {"x", "x"}, {"x", "y"}, {"y", "y", "y"},
        {"x", "y", "x", "y"}, {"x", "x", "y", "y"}, {"y", "y", "y", "y"}};
    std::vector<std::vector<std::string>> pert_words{
        {"q"}, {"x", "q"}, {"q", "y"}, {"q", "x", "q"}, {"x", "q", "y"}};

    std::vector<std::vector<std::string>> all_words = proj_words;
    all_words.insert(all_words.end(), main_words.begin(), main_words.end());
    all_words.insert(all_words.end(), pert_words.begin(), pert_words.end());

    Check projc("corner-projection traces are exactly 1");
    Check phic("main words of degree <= 4 meet the phi tolerance");
    Check pertc("perturbation words of degree <= 3 meet the phi' tolerance");
    for (int N : {64, 128, 256}) {
        EnsembleSpec spec = base;
        spec.N = N;
        SimResult r = run(spec, all_words);
        // rows come back in input order; word labels are canonicalized
        std::size_t i = 0;
        for (std::size_t k = 0; k < proj_words.size(); ++k, ++i) {
            const WordResult& row = r.rows.at(i);
            projc.require(std::abs(row.emp_trdiff_mean - 1.0) < 1e-9 &&
                              row.emp_trdiff_stderr < 1e-9,
                          row.word + " at N=" + std::to_string(N));
        }
        for (std::size_t k = 0; k < main_words.size(); ++k, ++i) {
            const WordResult& row = r.rows.at(i);
            double tol = 3.0 * row.emp_tr_stderr + 5.0 / N;
            phic.require(row.abs_err_phi <= tol, row.word + " at N=" + std::to_string(N));
        }
        for (std::size_t k = 0; k < pert_words.size(); ++k, ++i) {
            const WordResult& row = r.rows.at(i);
            double tol = 3.0 * row.emp_trdiff_stderr + 5.0 / N;
            pertc.require(row.abs_err_phi_prime <= tol, row.word + " at N=" + std::to_string(N));
        }
    }
    out.checks.push_back(projc.res);
    out.checks.push_back(phic.res);
    out.checks.push_back(pertc.res);

    Check conv("errors do not grow across the size grid beyond noise");
    {
        std::vector<std::vector<std::string>> grid_words{
            {"x", "y"}, {"x", "y", "x", "y"}, {"q", "x", "q"}};
        ConvergenceTable t = convergence_study(base, {64, 128, 256}, grid_words);
        conv.require(t.anomalies.empty(),
                     t.anomalies.empty() ? "" : t.anomalies.front());
    }
    out.checks.push_back(conv.res);

    return out;
}

std::vector<SuiteResult> run_suites(const std::string& which, int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    std::vector<SuiteResult> out;
    bool all = which == "all";
    if (all || which == "lattice") out.push_back(lattice_suite(max_n));
    if (all || which == "cumulants") out.push_back(cumulant_suite(max_n));
    if (all || which == "engines") out.push_back(engine_suite(max_n));
    if (all || which == "bprime") out.push_back(bprime_suite(max_n));
    if (all || which == "mk") out.push_back(mk_suite(max_n));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace ncprob
