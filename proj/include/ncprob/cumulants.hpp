#pragma once

#include <functional>
#include <vector>

#include "ncprob/ncpart.hpp"
#include "ncprob/words.hpp"

namespace ncprob {

/// Sub-word of w indexed by a block (1-based positions, increasing).
Word subword(const Word& w, const std::vector<int>& block);

/// All sigma in NC(n) with sigma <= pi (product of NC over the blocks of pi).
std::vector<NcPartition> refinements(const NcPartition& pi);

/// Multiplicative extension phi~_pi = prod over blocks of phi~ restricted to
/// the block, over the dual ring.
DualQ phi_pi(const NcPartition& pi, const Word& w, const MomentFunctional& f);

/// G-valued free cumulant kappa~_pi = sum_{sigma<=pi} phi~_sigma mu(sigma,pi).
DualQ free_cumulant(const NcPartition& pi, const Word& w, const MomentFunctional& f);

/// Full cumulant kappa~_n = free_cumulant(1_n, .).
DualQ free_cumulant_full(const Word& w, const MomentFunctional& f);

/// Cumulant specification: kappa~ on arbitrary sub-words.
using CumulantSpec = std::function<DualQ(const Word&)>;

/// phi~(w) = sum over NC(|w|) of kappa~_sigma[w]; the inverse of
/// free_cumulant.
DualQ moments_from_cumulants(const CumulantSpec& kappa, const Word& w);

/// kappa'_pi by the Leibniz route: sum over blocks V of kappa'|_V times the
/// product of kappa|_W over the other blocks. Must agree with the eps^1 part
/// of free_cumulant (independent code path).
Rat kappa_prime_leibniz(const NcPartition& pi, const Word& w, const MomentFunctional& f);

/// Single-variable transforms between moment and free-cumulant sequences,
/// index 0..K with m[0]=1, kappa[0] unused (set 0).
std::vector<Rat> cumulants_from_moment_seq(const std::vector<Rat>& m);
std::vector<Rat> moment_seq_from_cumulants(const std::vector<Rat>& kappa);

}  // namespace ncprob
