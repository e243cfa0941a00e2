#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncprob/bprime.hpp"

using namespace ncprob;

namespace {

// Two free main groups, two perturbation groups (one holding the projection
// q), trivially independent perturbation side.
Scenario model() {
    Scenario s;
    s.alphabet.add({"a", "g1", GenKind::Main, false});
    s.alphabet.add({"b", "g2", GenKind::Main, false});
    s.alphabet.add({"f", "p1", GenKind::Perturbation, false});
    s.alphabet.add({"q", "p2", GenKind::Projection, false});
    s.law = Law::BPRIME;
    s.algebra_groups = {"g1", "g2"};
    s.pert_groups = {"p1", "p2"};
    s.groups["g1"] = functional_from_moments(semicircle_moments(8));
    s.groups["g2"] = functional_from_moments({Rat(1), Rat(1), Rat(3), Rat(7), Rat(21), Rat(61), Rat(190), Rat(602), Rat(1921)});
    s.groups["p1"] = phi_functional_from_values({Rat(0), Rat(2), Rat(3), Rat(5), Rat(8), Rat(13), Rat(21), Rat(34), Rat(55)});
    // q is idempotent, so every run collapses to q itself: Phi(q^n) = 1
    s.groups["p2"] = phi_functional_from_values({Rat(0), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    return s;
}

BPrimeElement letter_elem(const Scenario& s, const std::string& id) {
    Word w = s.alphabet.word({id});
    if (s.is_pert(w.letters[0])) return bprime_from_pert({{w, Rat(1)}});
    return bprime_from_main(w);
}

bool same(const BPrimeElement& x, const BPrimeElement& y) {
    return x.main == y.main && x.pert == y.pert;
}

}  // namespace

TEST_CASE("product structure") {
    Scenario s = model();
    BPrimeElement a = letter_elem(s, "a");
    BPrimeElement f = letter_elem(s, "f");
    CHECK(same(bprime_mul(s.alphabet, bprime_unit(), a), a));
    CHECK(same(bprime_mul(s.alphabet, f, bprime_unit()), f));
    BPrimeElement ff = bprime_mul(s.alphabet, f, f);
    CHECK(ff.main.empty());
    CHECK(ff.pert.size() == 1);
    BPrimeElement af = bprime_mul(s.alphabet, a, f);
    CHECK(af.main.empty());
    CHECK(af.pert.count(s.alphabet.word({"a", "f"})) == 1);
}

TEST_CASE("product is associative") {
    Scenario s = model();
    std::vector<BPrimeElement> elems;
    for (const std::string& id : {"a", "b", "f", "q"}) elems.push_back(letter_elem(s, id));
    // a couple of mixed elements with rational weights
    elems.push_back(bprime_add(bprime_scale(elems[0], Rat(2, 3)), bprime_scale(elems[2], Rat(-1, 2))));
    elems.push_back(bprime_add(elems[1], bprime_scale(elems[3], Rat(5))));
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems)
                CHECK(same(bprime_mul(s.alphabet, bprime_mul(s.alphabet, x, y), z),
                           bprime_mul(s.alphabet, x, bprime_mul(s.alphabet, y, z))));
}

TEST_CASE("contrast with the pert-killing product") {
    Scenario s = model();
    Word wf = s.alphabet.word({"f"});
    TypeBElement xi{{}, {{wf, Rat(1)}}};
    TypeBElement prod = typeb_mul(s.alphabet, xi, xi);
    CHECK(prod.main.empty());
    CHECK(prod.pert.empty());
    // with one pert part zero the two products agree
    Word wa = s.alphabet.word({"a"});
    TypeBElement am{{{wa, Rat(1)}}, {}};
    TypeBElement mixed = typeb_mul(s.alphabet, am, xi);
    BPrimeElement mixed2 = bprime_mul(s.alphabet, bprime_from_main(wa),
                                      bprime_from_pert({{wf, Rat(1)}}));
    CHECK(mixed.pert == mixed2.pert);
    CHECK(mixed.main == mixed2.main);
}

TEST_CASE("functionals on elements") {
    Scenario s = model();
    BPrimeElement a = letter_elem(s, "a");
    BPrimeElement f = letter_elem(s, "f");
    BPrimeElement q = letter_elem(s, "q");
    CHECK(phi_prime_of(a, s) == 0);
    CHECK(phi_prime_of(q, s) == 1);
    CHECK(phi_prime_of(f, s) == 2);
    // phi ignores the perturbation part
    BPrimeElement af = bprime_add(a, f);
    CHECK(phi_of(af, s) == phi_of(a, s));
    CHECK(phi_of(bprime_mul(s.alphabet, af, af), s) ==
          phi_of(bprime_mul(s.alphabet, a, a), s));
}

TEST_CASE("compression by p = 1 - q") {
    Scenario s = model();
    int qi = s.alphabet.index_of("q");
    BPrimeElement p = compress(s.alphabet, Word{}, qi);
    CHECK(p.main == poly_unit());
    CHECK(p.pert == Poly{{s.alphabet.word({"q"}), Rat(-1)}});

    BPrimeElement ca = compress(s.alphabet, s.alphabet.word({"a"}), qi);
    CHECK(ca.main == Poly{{s.alphabet.word({"a"}), Rat(1)}});
    Poly expect{{s.alphabet.word({"q", "a"}), Rat(-1)},
                {s.alphabet.word({"a", "q"}), Rat(-1)},
                {s.alphabet.word({"q", "a", "q"}), Rat(1)}};
    CHECK(ca.pert == expect);

    // phi'(p a p) = -phi(a): the three q-terms contribute -phi(a) - phi(a) + phi(a)
    Scenario s2 = model();
    s2.groups["g1"] = functional_from_moments({Rat(1), Rat(5), Rat(26), Rat(140), Rat(777), Rat(4400), Rat(25300), Rat(147000), Rat(863500)});
    CHECK(phi_prime_of(ca, s2) == -5);
    // and idempotency of the compression: (pap)(pap) = p a p a p... uses q^2=q
    BPrimeElement caa = compress(s2.alphabet, s2.alphabet.word({"a", "a"}), qi);
    CHECK(same(bprime_mul(s2.alphabet, ca, ca), caa));
}

TEST_CASE("b-prime joint equals the infinitesimal-freeness embedding") {
    Scenario s = model();
    Report rep = check_bprime_iff_inf_free(s, 5);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("correlated perturbations break the per-group embedding only") {
    Scenario s = model();
    // joint Phi that does not vanish on alternating mixed runs
    s.pert_joint = MomentFunctional([](const Word& w) {
        Rat v = 1;
        for (std::size_t i = 0; i < w.size(); ++i) v *= 2;
        return DualQ(v);
    });
    s.law = Law::WEAK_BPRIME;
    CHECK(check_bprime_iff_inf_free(s, 4).ok());
    s.law = Law::BPRIME;  // force the per-group variant against the same joint
    Report rep = check_bprime_iff_inf_free(s, 4);
    CHECK_FALSE(rep.ok());
    for (const auto& v : rep.violations) CHECK(v.find("group-embedding") == 0);
}

TEST_CASE("joint functional passes its own law checker") {
    Scenario s = model();
    CHECK(verify_independence(joint_functional(s), s, 5).ok());
}

TEST_CASE("phi_P basics") {
    Scenario s = model();
    Poly P{{s.alphabet.word({"q"}), Rat(1)}};
    CHECK(phi_P(bprime_unit(), P, s) == 1);
    // phi_P agrees with phi on the main algebra (cyclic factorization wraps
    // the main letters around P)
    for (const std::string& id : {"a", "b"}) {
        BPrimeElement x = letter_elem(s, id);
        CHECK(phi_P(x, P, s) == phi_of(x, s));
        CHECK(phi_P(bprime_mul(s.alphabet, x, x), P, s) ==
              phi_of(bprime_mul(s.alphabet, x, x), s));
    }
    // phi_P(f) = Phi(P f)/Phi(P)
    BPrimeElement f = letter_elem(s, "f");
    CHECK(phi_P(f, P, s) == phi_prime_of(bprime_mul(s.alphabet, bprime_from_pert(P), f), s));
    CHECK_THROWS_AS(phi_P(f, Poly{}, s), std::domain_error);
}

TEST_CASE("trivially independent perturbations are boolean for phi_P") {
    Scenario s = model();
    Poly P{{s.alphabet.word({"f"}), Rat(1)}};  // P in the first pert group
    Report rep = check_cfree_theorem(s, P, {{"g1", "p1"}, {"g2", "p2"}}, 4);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
}

TEST_CASE("the equivalence also holds when both sides fail") {
    Scenario s = model();
    s.law = Law::WEAK_BPRIME;
    // non-multiplicative joint Phi: factorial of the run length
    s.pert_joint = MomentFunctional([](const Word& w) {
        Rat v = 1;
        for (std::size_t i = 1; i <= w.size(); ++i) v *= int(i);
        return DualQ(v);
    });
    Poly P{{s.alphabet.word({"f"}), Rat(1)}};
    Report rep = check_cfree_theorem(s, P, {{"g1", "p1"}, {"g2", "p2"}}, 4);
    CHECK(rep.ok());
}
