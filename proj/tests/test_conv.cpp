#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncprob/conv.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/indep.hpp"
#include "ncprob/ncpart.hpp"

using namespace ncprob;

namespace {

Dist free_poisson(int K) { return Dist(free_poisson_moments(K)); }
Dist sym_bernoulli(int K) { return Dist(symmetric_bernoulli_moments(K)); }
Dist bernoulli(const Rat& p, int K) { return Dist(bernoulli_moments(p, K)); }

// Moments of a+b (or its second layer) under the scenario's law, n = 0..K.
struct SumMoments {
    std::vector<Rat> std_;
    std::vector<Rat> inf_;
};

SumMoments sum_moments(const Scenario& s, int ia, int ib, int K) {
    MomentFunctional joint = joint_functional(s);
    DPoly p{{Word{{ia}}, DualQ(Rat(1))}, {Word{{ib}}, DualQ(Rat(1))}};
    DPoly pn = dpoly_unit();
    SumMoments out;
    out.std_.push_back(Rat(1));
    out.inf_.push_back(Rat(0));
    for (int n = 1; n <= K; ++n) {
        pn = dpoly_mul(s.alphabet, pn, p);
        DualQ v = joint(pn);
        out.std_.push_back(v.std_);
        out.inf_.push_back(v.inf_);
    }
    return out;
}

Scenario two_group_scenario(Law law, const std::vector<Rat>& m1, const std::vector<Rat>& m2,
                            int& ia, int& ib) {
    Scenario s;
    s.law = law;
    ia = s.alphabet.add({"a", "1", GenKind::Main, false});
    ib = s.alphabet.add({"b", "2", GenKind::Main, false});
    s.groups.emplace("1", functional_from_moments(m1));
    s.groups.emplace("2", functional_from_moments(m2));
    return s;
}

// Independent oracle for the multiplicative convolution:
// m_n = sum over pi in NC(n) of kappa_pi[m1] * m_{Kr(pi)}[m2].
Rat boxtimes_oracle(const std::vector<Rat>& m1, const std::vector<Rat>& m2, int n) {
    std::vector<Rat> k1 = cumulants_from_moment_seq(m1);
    Rat total = 0;
    for (const auto& pi : enumerate_nc(n)) {
        Rat term = 1;
        for (const auto& blk : pi.blocks()) term *= k1[blk.size()];
        NcPartition kr = kreweras(pi);
        for (const auto& blk : kr.blocks()) term *= m2[blk.size()];
        total += term;
    }
    return total;
}

std::vector<Rat> take_first(const std::vector<Rat>& v, int K) {
    return std::vector<Rat>(v.begin(), v.begin() + K + 1);
}

// mu antimonotone-convolved with nu: F = F_nu o F_mu.
Dist anti_add(const Dist& mu, const Dist& nu, int K) { return monotone_add(nu, mu, K); }

}  // namespace

TEST_CASE("free additive convolution: frozen values and point masses") {
    Dist sc = semicircle(8);
    Dist s2 = free_add(sc, sc, 8);
    CHECK(s2.m[1] == 0);
    CHECK(s2.m[2] == 2);  // variances add
    CHECK(s2.m[3] == 0);
    CHECK(s2.m[4] == 8);  // semicircle of variance 2: m4 = 2 * 2^2

    Dist d = free_add(point_mass(Rat(1, 2), 6), point_mass(Rat(1, 3), 6), 6);
    CHECK(d.m == point_mass_moments(Rat(5, 6), 6));

    Dist fp = free_poisson(6);
    CHECK(free_add(fp, point_mass(Rat(0), 6), 6).m == fp.m);
}

TEST_CASE("free additive convolution: cumulant route equals inverse-F route to order 10") {
    Dist a = semicircle(10);
    Dist b = free_poisson(10);
    CHECK(free_add(a, b, 10).m == free_add_via_finv(a, b, 10).m);
    CHECK(free_add(b, b, 10).m == free_add_via_finv(b, b, 10).m);
}

TEST_CASE("boolean convolution: frozen values") {
    Dist sb = sym_bernoulli(6);
    Dist d = boolean_add(sb, sb, 6);
    CHECK(d.m[1] == 0);
    CHECK(d.m[2] == 2);
    CHECK(d.m[3] == 0);
    CHECK(d.m[4] == 4);  // G = z/(z^2-2)
    CHECK(d.m[6] == 8);

    Dist fp = free_poisson(6);
    CHECK(boolean_add(fp, point_mass(Rat(0), 6), 6).m == fp.m);
}

TEST_CASE("monotone convolution: point-mass identities and shift") {
    Dist fp = free_poisson(6);
    CHECK(monotone_add(fp, point_mass(Rat(0), 6), 6).m == fp.m);
    CHECK(monotone_add(point_mass(Rat(0), 6), fp, 6).m == fp.m);
    // mu |> delta_c is the shift of mu by c
    Dist sb = sym_bernoulli(4);
    Dist sh = monotone_add(sb, point_mass(Rat(1), 4), 4);
    CHECK(sh.m[1] == 1);
    CHECK(sh.m[2] == 2);
    CHECK(sh.m[3] == 4);  // E(X+1)^3 = 3*1 + 1
}

TEST_CASE("multiplicative convolution: frozen value and identity") {
    Dist b = bernoulli(Rat(1, 2), 6);
    Dist d = free_mult(b, b, 6);
    CHECK(d.m[1] == Rat(1, 4));
    Dist fp = free_poisson(5);
    CHECK(free_mult(fp, point_mass(Rat(1), 5), 5).m == fp.m);

    // Kreweras-complement oracle, independent of the mixed-moment engine.
    Dist sc = semicircle(6);
    Dist sf = free_mult(sc, fp, 5);
    for (int n = 1; n <= 5; ++n)
        CHECK(sf.m[n] == boxtimes_oracle(sc.m, free_poisson_moments(6), n));
}

TEST_CASE("convolution ops agree with the matching independence engine to order 6") {
    const int K = 6;
    std::vector<Rat> m1 = semicircle_moments(K);
    std::vector<Rat> m2 = free_poisson_moments(K);
    int ia = 0, ib = 0;

    SUBCASE("free") {
        Scenario s = two_group_scenario(Law::FREE, m1, m2, ia, ib);
        CHECK(sum_moments(s, ia, ib, K).std_ == free_add(Dist(m1), Dist(m2), K).m);
    }
    SUBCASE("boolean") {
        Scenario s = two_group_scenario(Law::BOOLEAN, m1, m2, ia, ib);
        CHECK(sum_moments(s, ia, ib, K).std_ == boolean_add(Dist(m1), Dist(m2), K).m);
    }
    SUBCASE("monotone") {
        // group 1 is inner, group 2 outer: the sum is distributed as m1 |> m2
        Scenario s = two_group_scenario(Law::MONOTONE, m1, m2, ia, ib);
        s.ordered = {"1", "2"};
        CHECK(sum_moments(s, ia, ib, K).std_ == monotone_add(Dist(m1), Dist(m2), K).m);
    }
    SUBCASE("antimonotone") {
        Scenario s = two_group_scenario(Law::ANTIMONOTONE, m1, m2, ia, ib);
        s.ordered = {"1", "2"};
        CHECK(sum_moments(s, ia, ib, K).std_ == monotone_add(Dist(m2), Dist(m1), K).m);
    }
    SUBCASE("c-free") {
        std::vector<Rat> n1 = bernoulli_moments(Rat(1, 3), K);
        std::vector<Rat> n2 = symmetric_bernoulli_moments(K);
        Scenario s = two_group_scenario(Law::CFREE, m1, m2, ia, ib);
        s.psi_groups.emplace("1", functional_from_moments(n1));
        s.psi_groups.emplace("2", functional_from_moments(n2));
        CHECK(sum_moments(s, ia, ib, K).std_ ==
              cfree_add(Dist(m1), Dist(n1), Dist(m2), Dist(n2), K).m);
    }
    SUBCASE("infinitesimally free") {
        std::vector<Rat> i1{Rat(0), Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5), Rat(1, 6)};
        std::vector<Rat> i2{Rat(0), Rat(-1), Rat(2), Rat(-3), Rat(4), Rat(-5), Rat(6)};
        std::vector<Rat> m1w = semicircle_moments(K + 2);
        std::vector<Rat> m2w = free_poisson_moments(K + 2);
        Scenario s;
        s.law = Law::INF_FREE;
        ia = s.alphabet.add({"a", "1", GenKind::Main, false});
        ib = s.alphabet.add({"b", "2", GenKind::Main, false});
        s.groups.emplace("1", functional_from_moments(m1w, i1));
        s.groups.emplace("2", functional_from_moments(m2w, i2));
        InfDist d1{Dist(m1w), i1};
        InfDist d2{Dist(m2w), i2};
        InfDist sum = inf_free_add(d1, d2, K);
        SumMoments eng = sum_moments(s, ia, ib, K);
        CHECK(eng.std_ == sum.std.m);
        CHECK(eng.inf_ == sum.inf);
    }
    SUBCASE("cyclic-antimonotone") {
        std::vector<Rat> mu = free_poisson_moments(K + 2);
        std::vector<Rat> nu(K + 1, Rat(1));  // Phi(f^k) = 1, projection-like
        nu[0] = 0;
        Scenario s;
        s.law = Law::WEAK_BPRIME;
        ia = s.alphabet.add({"a", "alg", GenKind::Main, false});
        ib = s.alphabet.add({"f", "pert", GenKind::Perturbation, false});
        s.groups.emplace("alg", functional_from_moments(mu));
        s.algebra_groups = {"alg"};
        s.pert_groups = {"pert"};
        {
            std::vector<Rat> vals(static_cast<std::size_t>(K) + 1, Rat(1));
            vals[0] = 0;
            s.pert_joint = phi_functional_from_values(vals);
        }
        SumMoments eng = sum_moments(s, ia, ib, K);
        CHECK(eng.std_ == take_first(mu, K));
        CHECK(eng.inf_ == cyclic_antimonotone_conv(Dist(mu), nu, K));
    }
}

TEST_CASE("cyclic-antimonotone convolution via the infinitesimal embedding") {
    // conv(mu, nu) equals the inf layer of (mu, 0) inf-free-convolved with
    // (delta_0, nu).
    Dist mu = free_poisson(10);
    std::vector<Rat> nu{Rat(0), Rat(1), Rat(1), Rat(2), Rat(3), Rat(5), Rat(8), Rat(13), Rat(21)};
    InfDist a{mu, std::vector<Rat>(11, Rat(0))};
    InfDist b{point_mass(Rat(0), 10), nu};
    CHECK(inf_free_add(a, b, 8).inf == cyclic_antimonotone_conv(mu, nu, 8));
}

TEST_CASE("inf-free convolution of perturbed pairs matches perturbing the free convolution") {
    // (mu1 ~ nu1) inf-boxplus (mu2 ~ nu2) = (mu1 boxplus mu2) ~ (nu1 + nu2),
    // where ~ is the cyclic-antimonotone perturbation, checked to order 8.
    Dist mu1 = semicircle(12);
    Dist mu2 = free_poisson(12);
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
    CHECK(lhs.std.m == take_first(mb.m, 8));
    CHECK(lhs.inf == cyclic_antimonotone_conv(mb, nusum, 8));
}

TEST_CASE("c-free convolution of antimonotone perturbations factorizes to order 8") {
    // With psi layers lambda_i = mu_i <| nu_i, the c-free convolution's psi
    // layer is (mu1 boxplus mu2) <| (nu1 uplus nu2).
    Dist mu1 = semicircle(8);
    Dist mu2 = free_poisson(8);
    Dist nu1 = bernoulli(Rat(1, 3), 8);
    Dist nu2 = sym_bernoulli(8);
    Dist l1 = anti_add(mu1, nu1, 8);
    Dist l2 = anti_add(mu2, nu2, 8);
    Dist lhs = cfree_add(mu1, l1, mu2, l2, 8);
    Dist rhs = anti_add(free_add(mu1, mu2, 8), boolean_add(nu1, nu2, 8), 8);
    CHECK(lhs.m == rhs.m);
}

TEST_CASE("operations refuse orders beyond the guaranteed exact range") {
    Dist a = semicircle(4);
    Dist b = free_poisson(6);
    CHECK_THROWS_AS(free_add(a, b, 5), std::invalid_argument);
    CHECK_THROWS_AS(boolean_add(a, b, 6), std::invalid_argument);
    CHECK_THROWS_AS(free_mult(b, a, 5), std::invalid_argument);
    // the perturbation layer costs two orders of the main law
    std::vector<Rat> nu(7, Rat(1));
    CHECK_THROWS_AS(cyclic_antimonotone_conv(Dist(free_poisson_moments(6)), nu, 5),
                    std::invalid_argument);
    CHECK(cyclic_antimonotone_conv(Dist(free_poisson_moments(6)), nu, 4).size() == 5);
    CHECK_THROWS_AS(Dist(std::vector<Rat>{Rat(2), Rat(1)}), std::invalid_argument);
}
