#pragma once

#include <utility>
#include <vector>

#include "ncprob/conv.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/indep.hpp"

namespace ncprob {

/// Inverse Markov-Krein transform tau of mu, defined by G_mu' = -G_tau G_mu
/// and computed by the coefficient recursion
///   t_0 = 1,  t_n = (n+1) m_n - sum_{j<n} t_j m_{n-j}.
Dist inverse_mk_uni(const Dist& mu, int K);

/// Multivariate inverse Markov-Krein transform of a joint distribution:
/// M_n = sum over pi in NC(n) of |Kr(pi)| kappa_pi[a_{i_1},...,a_{i_n}].
Rat inverse_mk_multi(const Word& w, const MomentFunctional& f);

/// sum over pi in NC(k) of |Kr(pi)| kappa_pi[x_1,...,x_k] where each
/// argument x_i is a word (a product of letters); the cumulants of products
/// are computed by honest Moebius inversion over grouped refinements.
Rat kreweras_weighted_sum(const std::vector<Word>& args, const MomentFunctional& f);

/// Third computation path for the compressed phi' of a_1...a_n:
/// -sum over pi in NC(n+1) of |Kr(pi)| kappa_pi[1, a_1,...,a_n], with the
/// unit slot handled as an empty factor.
Rat compressed_phi_prime_unit_sum(const Word& w, const MomentFunctional& f);

/// A compression setup: jointly free single-letter groups plus an idempotent
/// perturbation letter q of unit weight (Phi(q^k) = 1), cyclic-antimonotone
/// from the main algebra. The compressed copy of a is p a p with p = 1 - q.
struct CompressionContext {
    Scenario s;
    int q = -1;
};

/// One group per entry (id, moment sequence m_0..m_K); main letters get the
/// alphabet indices 0..k-1 in order, q comes last.
CompressionContext compression_context(
    const std::vector<std::pair<std::string, std::vector<Rat>>>& marginals);

/// The free joint phi on the main algebra.
MomentFunctional main_functional(const CompressionContext& ctx);

/// phi'(p w_1 p w_2 p ... p w_k p), each factor a main word.
Rat compressed_phi_prime(const std::vector<Word>& factors, const CompressionContext& ctx);
/// phi' of the product of letterwise compressions p a_{i_1} p ... p a_{i_n} p.
Rat compressed_phi_prime(const Word& w, const CompressionContext& ctx);

/// The infinitesimal pair (psi, psi') = (phi, phi + phi') of the compressed
/// subalgebra, as a dual-valued functional on main words (a word maps to the
/// value at the product of its letterwise compressions).
MomentFunctional compressed_functional(const CompressionContext& ctx);

/// n-th infinitesimal free cumulant of the compressed letters with respect
/// to (psi, psi'); equals (1-n) kappa_n of the uncompressed letters.
Rat compressed_inf_cumulant(const Word& w, const CompressionContext& ctx);

/// Verifies, for free families (a_j) and (b_j), that the Kreweras-weighted
/// cumulant sum of the products a_j b_j equals the one of the interleaved
/// 2n-tuple. f must make the two groups free.
Report check_core_lemma(const std::vector<Word>& as, const std::vector<Word>& bs,
                        const MomentFunctional& f);

/// Checks the transform/compression propositions at truncation order K:
/// (i) the infinitesimal law of a compressed variable is (mu, mu - tau);
/// (ii) the additive version via inf_free_add (needs input orders >= K+2);
/// (iii) the multiplicative version via phi'((p a1 a2 p)^n) =
///       phi'((p a1 p a2 p)^n) and the transform of mu1 boxtimes mu2.
Report check_mk_propositions(const Dist& mu1, const Dist& mu2, int K);

/// Second transform moments (-phi'(x^2), -phi'(X^2)) for the
/// anti-commutators x = compress(a1 a2) + compress(a2 a1) and
/// X = compress(a1) compress(a2) + compress(a2) compress(a1), with free
/// standard semicircular a1, a2. The values differ: (4, 6), so the
/// compression-of-products rule does not extend to anti-commutators.
std::pair<Rat, Rat> anticommutator_counterexample();

}  // namespace ncprob
