#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncprob/indep.hpp"

namespace ncprob {

/// Element of the extended algebra A<F>: a main part (polynomial in main
/// letters) plus a perturbation part (every monomial contains at least one
/// perturbation letter). The unit is (1, 0).
struct BPrimeElement {
    Poly main;
    Poly pert;
};

/// Element of the contrasting "link" algebra: same data, but the product
/// kills the pert*pert term.
struct TypeBElement {
    Poly main;
    Poly pert;
};

BPrimeElement bprime_unit();
BPrimeElement bprime_from_main(const Word& w);
BPrimeElement bprime_from_pert(const Poly& p);
BPrimeElement bprime_add(const BPrimeElement& a, const BPrimeElement& b);
BPrimeElement bprime_scale(const BPrimeElement& a, const Rat& c);

/// (a1, f1)(a2, f2) = (a1 a2, a1 f2 + f1 a2 + f1 f2).
BPrimeElement bprime_mul(const Alphabet& alpha, const BPrimeElement& a, const BPrimeElement& b);

/// (a1, x1)(a2, x2) = (a1 a2, a1 x2 + x1 a2): no x1 x2 term.
TypeBElement typeb_mul(const Alphabet& alpha, const TypeBElement& a, const TypeBElement& b);

/// phi(a + f) = phi(a): the free joint of the main part.
Rat phi_of(const BPrimeElement& b, const Scenario& s);

/// phi'(a + f) = Phi(f): the cyclic-antimonotone value of the perturbation
/// part (each monomial contains a perturbation letter, so the factorization
/// applies; pure perturbation monomials evaluate by the perturbation-side
/// functional directly).
Rat phi_prime_of(const BPrimeElement& b, const Scenario& s);

/// phi_P(b) = Phi(P b) / Phi(P), with Phi extended as phi'. Throws
/// std::domain_error when Phi(P) = 0.
Rat phi_P(const BPrimeElement& b, const Poly& P, const Scenario& s);

/// phi_P as a functional on words (each word read as an element of A<F>).
MomentFunctional phi_P_functional(const Poly& P, const Scenario& s);

/// p a1 p a2 p ... p an p with p = 1 - q, expanded and canonicalized under
/// q^2 = q. The main part is the word itself; the perturbation part
/// collects the cross terms. compress(empty) = p = (1, -q).
BPrimeElement compress(const Alphabet& alpha, const Word& w, int q_letter);

/// Checks that the joint functional of a (weak) B' scenario coincides with
/// infinitesimal freeness of the embedded subalgebras: the main groups with
/// their phi marginals, and the perturbation side embedded at order epsilon
/// (per group for the full law, as one merged group for the weak law).
/// Equality is asserted on all words up to max_len.
Report check_bprime_iff_inf_free(const Scenario& s, int max_len);

/// Checks the c-freeness equivalence for paired subalgebras B_i = A_i<F_i>
/// against a perturbation element P with Phi(P) != 0:
///   (B_i) c-free w.r.t. (phi, phi_P)  <=>  (F_i) Boolean w.r.t. phi_P,
/// together with the reduction phi_P(b_1...b_n) = phi_P(F_1...F_n) for
/// phi-centered b_j. `pairs` lists (algebra group, perturbation group).
Report check_cfree_theorem(const Scenario& s, const Poly& P,
                           const std::vector<std::pair<std::string, std::string>>& pairs,
                           int max_len);

}  // namespace ncprob
