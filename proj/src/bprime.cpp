#include "ncprob/bprime.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ncprob {

namespace {

bool word_has_pert(const Scenario& s, const Word& w) {
    for (int l : w.letters)
        if (s.is_pert(l)) return true;
    return false;
}

BPrimeElement word_element(const Scenario& s, const Word& w) {
    BPrimeElement e;
    if (word_has_pert(s, w))
        e.pert[w] = Rat(1);
    else
        e.main[w] = Rat(1);
    return e;
}

}  // namespace

BPrimeElement bprime_unit() { return BPrimeElement{poly_unit(), {}}; }

BPrimeElement bprime_from_main(const Word& w) { return BPrimeElement{{{w, Rat(1)}}, {}}; }

BPrimeElement bprime_from_pert(const Poly& p) { return BPrimeElement{{}, p}; }

BPrimeElement bprime_add(const BPrimeElement& a, const BPrimeElement& b) {
    return BPrimeElement{poly_add(a.main, b.main), poly_add(a.pert, b.pert)};
}

BPrimeElement bprime_scale(const BPrimeElement& a, const Rat& c) {
    return BPrimeElement{poly_scale(a.main, c), poly_scale(a.pert, c)};
}

BPrimeElement bprime_mul(const Alphabet& alpha, const BPrimeElement& a, const BPrimeElement& b) {
    BPrimeElement r;
    r.main = poly_mul(alpha, a.main, b.main);
    r.pert = poly_add(poly_add(poly_mul(alpha, a.main, b.pert), poly_mul(alpha, a.pert, b.main)),
                      poly_mul(alpha, a.pert, b.pert));
    return r;
}

TypeBElement typeb_mul(const Alphabet& alpha, const TypeBElement& a, const TypeBElement& b) {
    TypeBElement r;
    r.main = poly_mul(alpha, a.main, b.main);
    r.pert = poly_add(poly_mul(alpha, a.main, b.pert), poly_mul(alpha, a.pert, b.main));
    return r;
}

Rat phi_of(const BPrimeElement& b, const Scenario& s) {
    Rat acc(0);
    for (const auto& [w, c] : b.main) acc += c * mm_free(s, w).std_;
    return acc;
}

Rat phi_prime_of(const BPrimeElement& b, const Scenario& s) {
    Rat acc(0);
    for (const auto& [w, c] : b.pert) acc += c * mm_cyclic_antimonotone(s, w);
    return acc;
}

Rat phi_P(const BPrimeElement& b, const Poly& P, const Scenario& s) {
    Rat denom = phi_prime_of(bprime_from_pert(P), s);
    if (denom == 0) throw std::domain_error("phi_P: Phi(P) = 0");
    BPrimeElement pb = bprime_mul(s.alphabet, bprime_from_pert(P), b);
    return phi_prime_of(pb, s) / denom;
}

MomentFunctional phi_P_functional(const Poly& P, const Scenario& s) {
    return MomentFunctional(
        [P, s](const Word& w) { return DualQ(phi_P(word_element(s, w), P, s)); });
}

BPrimeElement compress(const Alphabet& alpha, const Word& w, int q_letter) {
    Word q;
    q.letters.push_back(q_letter);
    BPrimeElement p{poly_unit(), {{q, Rat(-1)}}};  // p = 1 - q
    BPrimeElement e = p;
    for (int letter : w.letters) {
        Word a;
        a.letters.push_back(letter);
        e = bprime_mul(alpha, bprime_mul(alpha, e, bprime_from_main(a)), p);
    }
    return e;
}

namespace {

void compare_words(Report& rep, const Scenario& s, const Scenario& embedded, int max_len,
                   const char* what) {
    for (const Word& raw : words_over(scenario_letters(s), max_len)) {
        Word w = s.alphabet.canonical(raw);
        if (w != raw) continue;
        ++rep.checked;
        DualQ lhs = mm_bprime(s, w);
        DualQ rhs = mm_inf_free(embedded, w);
        if (!(lhs == rhs))
            rep.violations.push_back(std::string(what) + ": " + s.alphabet.show(w));
    }
}

}  // namespace

Report check_bprime_iff_inf_free(const Scenario& s, int max_len) {
    Report rep;

    // Weak form: the whole perturbation side embedded as one group at order
    // epsilon, with its joint functional.
    {
        Scenario weak;
        for (int i = 0; i < s.alphabet.size(); ++i) {
            Generator g = s.alphabet.at(i);
            if (s.pert_groups.count(g.group)) g.group = "pert-merged";
            weak.alphabet.add(g);
        }
        weak.law = Law::INF_FREE;
        for (const auto& grp : s.algebra_groups) weak.groups[grp] = s.groups.at(grp);
        Scenario outer = s;
        weak.groups["pert-merged"] =
            MomentFunctional([outer](const Word& w) { return DualQ{Rat(0), mm_bprime(outer, w).inf_}; });
        compare_words(rep, s, weak, max_len, "weak-embedding");
    }

    // Full form: each perturbation group embedded separately; requires the
    // trivially-independent joint, i.e. the full law.
    if (s.law == Law::BPRIME) {
        Scenario full;
        full.alphabet = s.alphabet;
        full.law = Law::INF_FREE;
        for (const auto& grp : s.algebra_groups) full.groups[grp] = s.groups.at(grp);
        for (const auto& grp : s.pert_groups) {
            MomentFunctional marg = s.groups.at(grp);
            full.groups[grp] =
                MomentFunctional([marg](const Word& w) { return DualQ{Rat(0), marg(w).std_}; });
        }
        compare_words(rep, s, full, max_len, "group-embedding");
    }

    return rep;
}

Report check_cfree_theorem(const Scenario& s, const Poly& P,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           int max_len) {
    Report rep;
    auto phiP = [&](const BPrimeElement& b) { return phi_P(b, P, s); };
    phiP(bprime_unit());  // validates Phi(P) != 0

    // Boolean independence of the perturbation groups w.r.t. phi_P. A
    // failure here is not by itself a violation: the claim under test is the
    // equivalence of the two sides (plus the reduction lemma).
    bool boolean_ok = true;
    std::string boolean_witness;
    std::vector<int> pert_letters;
    for (const auto& [ag, pg] : pairs)
        for (int l : s.alphabet.letters_of_group(pg)) pert_letters.push_back(l);
    for (const Word& raw : words_over(pert_letters, max_len)) {
        Word w = s.alphabet.canonical(raw);
        if (w != raw) continue;
        // maximal same-group runs
        std::vector<Word> runs;
        for (int l : w.letters) {
            if (runs.empty() || s.group_of(runs.back().letters.back()) != s.group_of(l))
                runs.push_back(Word{});
            runs.back().letters.push_back(l);
        }
        if (runs.size() < 2) continue;
        ++rep.checked;
        Rat prod(1);
        for (const Word& r : runs) prod *= phiP(word_element(s, r));
        if (phiP(word_element(s, w)) != prod) {
            boolean_ok = false;
            if (boolean_witness.empty()) boolean_witness = s.alphabet.show(w);
        }
    }

    // Candidate phi-centered elements of each B_i = A_i<F_i>.
    std::vector<std::vector<BPrimeElement>> candidates;
    for (const auto& [ag, pg] : pairs) {
        std::vector<BPrimeElement> cs;
        int a = s.alphabet.letters_of_group(ag).at(0);
        int f = s.alphabet.letters_of_group(pg).at(0);
        Word wa{{a}}, wf{{f}}, waf{{a, f}};
        BPrimeElement centered = bprime_from_main(wa);
        centered.main[Word{}] -= s.groups.at(ag)(wa).std_;
        cs.push_back(centered);
        cs.push_back(bprime_from_pert({{wf, Rat(1)}}));
        cs.push_back(bprime_from_pert({{waf, Rat(1)}}));
        candidates.push_back(std::move(cs));
    }

    // c-freeness factorization and the reduction to perturbation parts, on
    // alternating products of centered elements.
    bool cfree_ok = true;
    const int m = static_cast<int>(pairs.size());
    int n_max = std::min(max_len, 4);
    std::vector<int> idx_seq;
    std::function<void(int)> walk = [&](int depth) {
        if (depth >= 2) {
            // all choices of one candidate per position
            std::vector<std::size_t> choice(idx_seq.size(), 0);
            for (;;) {
                BPrimeElement prod = bprime_unit();
                BPrimeElement pert_prod = bprime_unit();
                Rat factor(1);
                for (std::size_t j = 0; j < idx_seq.size(); ++j) {
                    const BPrimeElement& b = candidates[idx_seq[j]][choice[j]];
                    prod = bprime_mul(s.alphabet, prod, b);
                    pert_prod = bprime_mul(s.alphabet, pert_prod, bprime_from_pert(b.pert));
                    factor *= phiP(b);
                }
                ++rep.checked;
                Rat lhs = phiP(prod);
                if (lhs != factor) cfree_ok = false;
                if (lhs != phiP(pert_prod))
                    rep.violations.push_back("lemma reduction failed at depth " +
                                             std::to_string(idx_seq.size()));
                std::size_t k = 0;
                while (k < choice.size() && ++choice[k] == candidates[idx_seq[k]].size())
                    choice[k++] = 0;
                if (k == choice.size()) break;
            }
        }
        if (depth == n_max) return;
        for (int i = 0; i < m; ++i) {
            if (!idx_seq.empty() && idx_seq.back() == i) continue;
            idx_seq.push_back(i);
            walk(depth + 1);
            idx_seq.pop_back();
        }
    };
    walk(0);

    if (boolean_ok != cfree_ok)
        rep.violations.push_back(std::string("equivalence broken: boolean=") +
                                 (boolean_ok ? "yes" : "no") + " c-free=" +
                                 (cfree_ok ? "yes" : "no") +
                                 (boolean_witness.empty() ? "" : " witness " + boolean_witness));
    return rep;
}

}  // namespace ncprob
