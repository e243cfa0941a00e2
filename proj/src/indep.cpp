#include "ncprob/indep.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncprob {

namespace {

std::vector<std::pair<std::string, Word>> runs_of(const Scenario& s, const Word& w) {
    std::vector<std::pair<std::string, Word>> runs;
    for (int letter : w.letters) {
        const std::string& g = s.group_of(letter);
        if (runs.empty() || runs.back().first != g) runs.push_back({g, Word{}});
        runs.back().second.letters.push_back(letter);
    }
    return runs;
}

const MomentFunctional& marginal(const Scenario& s, const std::string& group) {
    auto it = s.groups.find(group);
    if (it == s.groups.end())
        throw std::invalid_argument("unknown generator group: " + group);
    return it->second;
}

DualQ free_eval(const Scenario& s, const Word& w);

DualQ free_eval_poly(const Scenario& s, const DPoly& p) {
    DualQ acc;
    for (const auto& [mono, coef] : p) acc = acc + coef * free_eval(s, mono);
    return acc;
}

// Centering recursion: write w as runs x_1..x_k, substitute
// x_i = (x_i - c_i) + c_i with c_i the marginal value; the term with every
// factor centered is an alternating centered product and vanishes. Each
// surviving term drops at least one run, so the recursion shortens.
DualQ free_eval(const Scenario& s, const Word& w) {
    Word cw = s.alphabet.canonical(w);
    if (cw.empty()) return DualQ(Rat(1));
    auto runs = runs_of(s, cw);
    if (runs.size() == 1) return marginal(s, runs[0].first)(cw);

    {
        std::lock_guard<std::mutex> lk(s.cache->mu);
        auto it = s.cache->free_memo.find(cw);
        if (it != s.cache->free_memo.end()) return it->second;
    }

    const std::size_t k = runs.size();
    std::vector<DualQ> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = marginal(s, runs[i].first)(runs[i].second);

    DualQ acc;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        DualQ coef(Rat(1));
        DPoly rest = dpoly_unit();
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                coef = coef * c[i];
            } else {
                DPoly xi;
                xi[runs[i].second] = DualQ(Rat(1));
                xi[Word{}] = xi[Word{}] + DualQ{-c[i].std_, -c[i].inf_};
                rest = dpoly_mul(s.alphabet, rest, xi);
            }
        }
        acc = acc + coef * free_eval_poly(s, rest);
    }

    std::lock_guard<std::mutex> lk(s.cache->mu);
    s.cache->free_memo[cw] = acc;
    return acc;
}

bool has_pert(const Scenario& s, const Word& w) {
    for (int letter : w.letters)
        if (s.is_pert(letter)) return true;
    return false;
}

// Perturbation-side Phi on a pure perturbation word: the joint functional
// when one is given, trivial independence across pert groups otherwise.
Rat pert_phi(const Scenario& s, const Word& pw) {
    if (pw.empty()) throw std::invalid_argument("Phi of empty perturbation word");
    if (s.pert_joint.valid()) return s.pert_joint(pw).std_;
    auto runs = runs_of(s, pw);
    if (runs.size() > 1) return Rat(0);
    return marginal(s, runs[0].first)(pw).std_;
}

}  // namespace

DualQ mm_free(const Scenario& s, const Word& w) { return free_eval(s, w); }
DualQ mm_inf_free(const Scenario& s, const Word& w) { return free_eval(s, w); }

DualQ mm_boolean(const Scenario& s, const Word& w) {
    DualQ acc(Rat(1));
    for (const auto& [g, run] : runs_of(s, w)) acc = acc * marginal(s, g)(run);
    return acc;
}

namespace {

DualQ monotone_eval(const Scenario& s, const Word& w, const std::string& inner,
                    const std::string& outer) {
    Word inner_word;
    DualQ acc(Rat(1));
    Word outer_run;
    auto flush = [&] {
        if (!outer_run.empty()) {
            acc = acc * marginal(s, outer)(outer_run);
            outer_run.letters.clear();
        }
    };
    for (int letter : w.letters) {
        const std::string& g = s.group_of(letter);
        if (g == inner) {
            flush();
            inner_word.letters.push_back(letter);
        } else if (g == outer) {
            outer_run.letters.push_back(letter);
        } else {
            throw std::invalid_argument("letter outside the ordered pair: " + g);
        }
    }
    flush();
    if (!inner_word.empty()) acc = acc * marginal(s, inner)(inner_word);
    return acc;
}

}  // namespace

DualQ mm_monotone(const Scenario& s, const Word& w) {
    return monotone_eval(s, w, s.ordered.first, s.ordered.second);
}

DualQ mm_antimonotone(const Scenario& s, const Word& w) {
    return monotone_eval(s, w, s.ordered.second, s.ordered.first);
}

Rat mm_trivial(const Scenario& s, const Word& w) {
    Word cw = s.alphabet.canonical(w);
    if (cw.empty()) return Rat(0);
    auto runs = runs_of(s, cw);
    if (runs.size() > 1) return Rat(0);
    return marginal(s, runs[0].first)(cw).std_;
}

Rat mm_cyclic_antimonotone(const Scenario& s, const Word& w) {
    Word cw = s.alphabet.canonical(w);
    std::vector<Word> algebra_segments;  // a_0 .. a_n, possibly empty
    Word pert_word;                      // f_1 .. f_n
    algebra_segments.push_back(Word{});
    for (int letter : cw.letters) {
        if (s.is_pert(letter)) {
            pert_word.letters.push_back(letter);
            algebra_segments.push_back(Word{});
        } else {
            algebra_segments.back().letters.push_back(letter);
        }
    }
    if (pert_word.empty())
        throw std::invalid_argument("cyclic-antimonotone factorization needs a perturbation letter");

    Rat acc = s.traced_cyclic
                  ? free_eval(s, concat(algebra_segments.back(), algebra_segments.front())).std_
                  : free_eval(s, concat(algebra_segments.front(), algebra_segments.back())).std_;
    for (std::size_t i = 1; i + 1 < algebra_segments.size(); ++i)
        acc *= free_eval(s, algebra_segments[i]).std_;
    // the f_i multiply inside the perturbation algebra, so idempotents collapse
    return acc * pert_phi(s, s.alphabet.canonical(pert_word));
}

namespace {

Rat cfree_eval(const Scenario& s, const Word& w);

Rat cfree_eval_poly(const Scenario& s, const DPoly& p) {
    Rat acc(0);
    for (const auto& [mono, coef] : p) acc += coef.std_ * cfree_eval(s, mono);
    return acc;
}

// Same centering recursion as free_eval, but the fully phi-centered
// alternating term factorizes under psi instead of vanishing.
Rat cfree_eval(const Scenario& s, const Word& w) {
    Word cw = s.alphabet.canonical(w);
    if (cw.empty()) return Rat(1);
    auto runs = runs_of(s, cw);
    if (runs.size() == 1) {
        auto it = s.psi_groups.find(runs[0].first);
        if (it == s.psi_groups.end())
            throw std::invalid_argument("no psi marginal for group: " + runs[0].first);
        return it->second(cw).std_;
    }

    {
        std::lock_guard<std::mutex> lk(s.cache->mu);
        auto it = s.cache->cfree_memo.find(cw);
        if (it != s.cache->cfree_memo.end()) return it->second;
    }

    const std::size_t k = runs.size();
    std::vector<Rat> c(k), psi(k);
    for (std::size_t i = 0; i < k; ++i) {
        c[i] = marginal(s, runs[i].first)(runs[i].second).std_;
        psi[i] = s.psi_groups.at(runs[i].first)(runs[i].second).std_;
    }

    Rat acc(1);
    for (std::size_t i = 0; i < k; ++i) acc *= psi[i] - c[i];

    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Rat coef(1);
        DPoly rest = dpoly_unit();
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                coef *= c[i];
            } else {
                DPoly xi;
                xi[runs[i].second] = DualQ(Rat(1));
                xi[Word{}] = xi[Word{}] + DualQ(-c[i]);
                rest = dpoly_mul(s.alphabet, rest, xi);
            }
        }
        acc += coef * cfree_eval_poly(s, rest);
    }

    std::lock_guard<std::mutex> lk(s.cache->mu);
    s.cache->cfree_memo[cw] = acc;
    return acc;
}

}  // namespace

Rat mm_cfree(const Scenario& s, const Word& w) { return cfree_eval(s, w); }

Rat inf_free_direct(const Scenario& s,
                    const std::vector<std::pair<std::string, DPoly>>& centered) {
    const std::size_t n = centered.size();
    if (n == 0) return Rat(0);
    for (std::size_t i = 0; i < n; ++i)
        if (centered[i].first != centered[n - 1 - i].first) return Rat(0);
    if (n % 2 == 0) return Rat(0);

    Rat acc(1);
    for (std::size_t i = 0; i + i + 1 < n; ++i) {
        DPoly prod = dpoly_mul(s.alphabet, centered[i].second, centered[n - 1 - i].second);
        acc *= marginal(s, centered[i].first)(prod).std_;
    }
    const auto& mid = centered[n / 2];
    return acc * marginal(s, mid.first)(mid.second).inf_;
}

DualQ mm_bprime(const Scenario& s, const Word& w) {
    Word cw = s.alphabet.canonical(w);
    if (!has_pert(s, cw)) return free_eval(s, cw);
    return DualQ{Rat(0), mm_cyclic_antimonotone(s, cw)};
}

DualQ mm_eval(const Scenario& s, const Word& w) {
    switch (s.law) {
        case Law::FREE:
        case Law::INF_FREE:
            return free_eval(s, w);
        case Law::BOOLEAN:
            return mm_boolean(s, w);
        case Law::MONOTONE:
            return mm_monotone(s, w);
        case Law::ANTIMONOTONE:
            return mm_antimonotone(s, w);
        case Law::TRIVIAL:
            return DualQ(mm_trivial(s, w));
        case Law::CYCLIC_ANTIMONOTONE:
            return has_pert(s, w) ? DualQ(mm_cyclic_antimonotone(s, w)) : free_eval(s, w);
        case Law::CFREE:
            return DualQ(mm_cfree(s, w));
        case Law::WEAK_BPRIME:
        case Law::BPRIME:
            return mm_bprime(s, w);
    }
    throw std::logic_error("unhandled law");
}

MomentFunctional joint_functional(const Scenario& s) {
    return MomentFunctional([s](const Word& w) { return mm_eval(s, w); });
}

std::vector<int> scenario_letters(const Scenario& s) {
    std::vector<int> out;
    switch (s.law) {
        case Law::MONOTONE:
        case Law::ANTIMONOTONE:
            for (const auto& g : {s.ordered.first, s.ordered.second})
                for (int l : s.alphabet.letters_of_group(g)) out.push_back(l);
            break;
        case Law::CYCLIC_ANTIMONOTONE:
        case Law::WEAK_BPRIME:
        case Law::BPRIME: {
            for (int l = 0; l < s.alphabet.size(); ++l) {
                const std::string& g = s.group_of(l);
                if (s.algebra_groups.count(g) || s.pert_groups.count(g)) out.push_back(l);
            }
            break;
        }
        default:
            for (const auto& [g, f] : s.groups)
                for (int l : s.alphabet.letters_of_group(g)) out.push_back(l);
            break;
    }
    return out;
}

namespace {

void check_word(Report& rep, bool good, const Scenario& s, const Word& w, const char* what) {
    ++rep.checked;
    if (!good) rep.violations.push_back(std::string(what) + ": " + s.alphabet.show(w));
}

// Centered product of the maximal runs of w, with centers taken from the
// joint functional itself.
DPoly centered_runs(const Scenario& s, const MomentFunctional& joint, const Word& w) {
    DPoly prod = dpoly_unit();
    for (const auto& [g, run] : runs_of(s, w)) {
        DPoly xi;
        xi[run] = DualQ(Rat(1));
        DualQ c = joint(run);
        xi[Word{}] = xi[Word{}] + DualQ{-c.std_, -c.inf_};
        prod = dpoly_mul(s.alphabet, prod, xi);
    }
    return prod;
}

}  // namespace

Report verify_independence(const MomentFunctional& joint, const Scenario& s, int max_len) {
    Report rep;
    std::vector<int> letters = scenario_letters(s);

    for (const Word& raw : words_over(letters, max_len)) {
        Word w = s.alphabet.canonical(raw);
        if (w != raw) continue;  // avoid duplicates from idempotent collapse
        auto runs = runs_of(s, w);

        switch (s.law) {
            case Law::FREE:
            case Law::INF_FREE: {
                if (runs.size() < 2) break;
                DualQ v = joint(centered_runs(s, joint, w));
                bool good = s.law == Law::FREE ? v.std_ == 0 : v.is_zero();
                check_word(rep, good, s, w, s.law == Law::FREE ? "free" : "inf-free");
                break;
            }
            case Law::BOOLEAN: {
                if (runs.size() < 2) break;
                DualQ prod(Rat(1));
                for (const auto& [g, run] : runs) prod = prod * joint(run);
                check_word(rep, joint(w).std_ == prod.std_, s, w, "boolean");
                break;
            }
            case Law::TRIVIAL: {
                if (runs.size() < 2) break;
                check_word(rep, joint(w).std_ == 0, s, w, "trivial");
                break;
            }
            case Law::MONOTONE:
            case Law::ANTIMONOTONE: {
                const std::string& inner =
                    s.law == Law::MONOTONE ? s.ordered.first : s.ordered.second;
                Word inner_word;
                Rat prod(1);
                Word outer_run;
                auto flush = [&] {
                    if (!outer_run.empty()) {
                        prod *= joint(outer_run).std_;
                        outer_run.letters.clear();
                    }
                };
                for (int letter : w.letters) {
                    if (s.group_of(letter) == inner)
                        flush(), inner_word.letters.push_back(letter);
                    else
                        outer_run.letters.push_back(letter);
                }
                flush();
                if (!inner_word.empty()) prod *= joint(inner_word).std_;
                check_word(rep, joint(w).std_ == prod, s, w, "monotone");
                break;
            }
            case Law::CYCLIC_ANTIMONOTONE: {
                if (!has_pert(s, w)) break;
                std::vector<Word> seg{Word{}};
                Word pw;
                for (int letter : w.letters) {
                    if (s.is_pert(letter))
                        pw.letters.push_back(letter), seg.push_back(Word{});
                    else
                        seg.back().letters.push_back(letter);
                }
                Rat expect = joint(concat(seg.front(), seg.back())).std_;
                for (std::size_t i = 1; i + 1 < seg.size(); ++i)
                    expect *= joint(seg[i]).std_;
                expect *= joint(pw).std_;
                check_word(rep, joint(w).std_ == expect, s, w, "cyclic-antimonotone");
                break;
            }
            case Law::CFREE: {
                if (runs.size() < 2) break;
                // center w.r.t. the scenario's phi layer
                DPoly prod = dpoly_unit();
                Rat expect(1);
                for (const auto& [g, run] : runs) {
                    Rat c = marginal(s, g)(run).std_;
                    DPoly xi;
                    xi[run] = DualQ(Rat(1));
                    xi[Word{}] = xi[Word{}] + DualQ(-c);
                    prod = dpoly_mul(s.alphabet, prod, xi);
                    expect *= joint(run).std_ - c;
                }
                check_word(rep, joint(prod).std_ == expect, s, w, "c-free");
                break;
            }
            case Law::WEAK_BPRIME:
            case Law::BPRIME: {
                if (!has_pert(s, w)) {
                    if (runs.size() < 2) break;
                    check_word(rep, joint(centered_runs(s, joint, w)).is_zero(), s, w,
                               "b-prime/free-part");
                    break;
                }
                check_word(rep, joint(w).std_ == 0, s, w, "b-prime/phi-vanishing");
                std::vector<Word> seg{Word{}};
                Word pw;
                for (int letter : w.letters) {
                    if (s.is_pert(letter))
                        pw.letters.push_back(letter), seg.push_back(Word{});
                    else
                        seg.back().letters.push_back(letter);
                }
                Rat expect = joint(concat(seg.front(), seg.back())).std_;
                for (std::size_t i = 1; i + 1 < seg.size(); ++i)
                    expect *= joint(seg[i]).std_;
                expect *= joint(pw).inf_;
                check_word(rep, joint(w).inf_ == expect, s, w, "b-prime/cyclic");
                if (s.law == Law::BPRIME && pw.size() == w.size() &&
                    runs_of(s, pw).size() >= 2)
                    check_word(rep, joint(pw).inf_ == 0, s, pw, "b-prime/trivial");
                break;
            }
        }
    }
    return rep;
}

}  // namespace ncprob
