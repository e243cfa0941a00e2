#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncprob/words.hpp"

namespace ncprob {

enum class Law {
    FREE,
    BOOLEAN,
    MONOTONE,
    ANTIMONOTONE,
    TRIVIAL,
    CYCLIC_ANTIMONOTONE,
    INF_FREE,
    CFREE,
    WEAK_BPRIME,
    BPRIME,
};

/// Marginal data + law for a family of generator groups.
///
/// groups: phi-layer marginal per group label (dual-valued; the inf part is
///   used by INF_FREE and by perturbation-side functionals of the B' laws).
/// psi_groups: second-layer marginals, CFREE only.
/// ordered: (inner, outer) roles for MONOTONE/ANTIMONOTONE; the inner
///   group's letters are evaluated jointly, maximal outer runs factor out.
/// algebra_groups/pert_groups: roles for CYCLIC_ANTIMONOTONE and the B'
///   laws.
/// pert_joint: joint perturbation functional (WEAK_BPRIME and plain
///   CYCLIC_ANTIMONOTONE); when absent the perturbation side is evaluated
///   by trivial independence across pert_groups with per-group marginals
///   taken from `groups`.
struct Scenario {
    Alphabet alphabet;
    Law law = Law::FREE;
    std::map<std::string, MomentFunctional> groups;
    std::map<std::string, MomentFunctional> psi_groups;
    std::pair<std::string, std::string> ordered;
    std::set<std::string> algebra_groups;
    std::set<std::string> pert_groups;
    MomentFunctional pert_joint;
    /// Evaluate the wrap-around factor of the cyclic factorization as
    /// phi(a_n a_0) instead of the default phi(a_0 a_n); phi need not be
    /// tracial, so the two can differ.
    bool traced_cyclic = false;
    int max_len = 8;

    struct Cache {
        std::map<Word, DualQ> free_memo;
        std::map<Word, Rat> cfree_memo;
        std::mutex mu;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();

    const std::string& group_of(int letter) const { return alphabet.at(letter).group; }
    bool is_pert(int letter) const { return pert_groups.count(group_of(letter)) > 0; }
};

/// Joint functional under freeness, by the centering recursion over the dual
/// ring (so the same engine computes infinitesimal freeness).
DualQ mm_free(const Scenario& s, const Word& w);

/// Joint functional under Boolean independence: maximal same-group runs
/// factor.
DualQ mm_boolean(const Scenario& s, const Word& w);

/// Monotone rule: inner letters evaluated jointly as one word, maximal outer
/// runs factor out. mm_antimonotone swaps the roles.
DualQ mm_monotone(const Scenario& s, const Word& w);
DualQ mm_antimonotone(const Scenario& s, const Word& w);

/// Trivial independence of a non-unital functional: single-group words by
/// marginal, anything spanning two or more groups is 0. The empty word is 0.
Rat mm_trivial(const Scenario& s, const Word& w);

/// Cyclic-antimonotone factorization. Writing w = a0 f1 a1 ... fn an with
/// algebra segments a_i (possibly empty) and perturbation letters f_i, the
/// value is phi(a0*an) * prod_{0<i<n} phi(a_i) * Phi(f1...fn). phi comes
/// from mm_free over the algebra groups, Phi from pert_joint (or trivial
/// independence across pert_groups). Note the a0*an ordering; phi need not
/// be tracial. Throws if w has no perturbation letter.
Rat mm_cyclic_antimonotone(const Scenario& s, const Word& w);

/// Second-layer (psi) joint under c-freeness; the phi layer is the free
/// joint of `groups`.
Rat mm_cfree(const Scenario& s, const Word& w);

/// Infinitesimal freeness: the free centering recursion over the dual ring.
DualQ mm_inf_free(const Scenario& s, const Word& w);

/// Closed form for phi' of an alternating product of phi-centered elements:
/// zero unless the group pattern is a palindrome of odd length, in which
/// case it is phi(b_1 b_n) phi(b_2 b_{n-1}) ... phi'(b_mid). Used as an
/// independent cross-check of mm_inf_free.
Rat inf_free_direct(const Scenario& s,
                    const std::vector<std::pair<std::string, DPoly>>& centered);

/// Joint dual functional of a (weak) B' scenario: words without
/// perturbation letters evaluate to (free phi, 0); words with them to
/// (0, cyclic-antimonotone Phi).
DualQ mm_bprime(const Scenario& s, const Word& w);

/// Dispatch on s.law. Scalar-valued laws return their value in the std part
/// (TRIVIAL, CFREE, and the Phi of CYCLIC_ANTIMONOTONE on mixed words).
DualQ mm_eval(const Scenario& s, const Word& w);

/// mm_eval wrapped as a memoizing MomentFunctional.
MomentFunctional joint_functional(const Scenario& s);

struct Report {
    int checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the defining conditions of s.law against a joint functional on
/// all words up to max_len, reporting each violating word.
///
/// Conventions on `joint` by law: FREE/INF_FREE/BOOLEAN/MONOTONE/
/// ANTIMONOTONE read phi from std (and phi' from inf for INF_FREE);
/// TRIVIAL and CFREE read their scalar layer from std;
/// CYCLIC_ANTIMONOTONE reads Phi of perturbation-containing words and phi
/// of algebra words both from std; WEAK_BPRIME/BPRIME read phi from std and
/// the perturbation layer from inf (the mm_bprime convention).
Report verify_independence(const MomentFunctional& joint, const Scenario& s, int max_len);

/// Letters a scenario's law quantifies over.
std::vector<int> scenario_letters(const Scenario& s);

}  // namespace ncprob
