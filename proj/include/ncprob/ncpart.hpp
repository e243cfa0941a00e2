#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ncprob/rational.hpp"

namespace ncprob {

/// A noncrossing set partition of {1,...,n} in canonical form: blocks sorted
/// by minimum element, elements ascending. Immutable after construction.
class NcPartition {
public:
    /// Validates that `blocks` is a noncrossing partition of {1,...,n} and
    /// canonicalizes it. Throws std::invalid_argument otherwise.
    NcPartition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    /// Index of the block containing element i (1-based element).
    int block_of(int i) const { return block_of_[i - 1]; }

    static NcPartition minimum(int n);  // 0_n, all singletons
    static NcPartition maximum(int n);  // 1_n, one block

    friend bool operator==(const NcPartition& a, const NcPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend auto operator<=>(const NcPartition& a, const NcPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

    std::string to_string() const;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
};

struct NcInterval {
    NcPartition lower;
    NcPartition upper;
    std::vector<NcPartition> elements;
};

/// True iff `blocks` (a set partition of {1,...,n}) has no crossing quadruple.
/// Throws std::invalid_argument if `blocks` is not a partition of {1,...,n}.
bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

/// All of NC(n) in canonical form; |result| = Catalan(n). Requires 1 <= n <= 14.
std::vector<NcPartition> enumerate_nc(int n);

/// Refinement order: every block of sigma contained in a block of pi.
bool leq(const NcPartition& sigma, const NcPartition& pi);

/// Kreweras complement via the cycle identity sigma_pi * sigma_Kr(pi) = (1 2 ... n).
NcPartition kreweras(const NcPartition& pi);

/// Brute-force Kreweras oracle: the coarsest tau in NC(n) whose interleaving
/// with pi on 1,1',2,2',...,n,n' stays noncrossing. Test reference path.
NcPartition kreweras_bruteforce(const NcPartition& pi);

/// Relative Kreweras complement Kr_pi(sigma) for sigma <= pi: blockwise
/// Kreweras complement of sigma restricted to each block of pi.
NcPartition relative_kreweras(const NcPartition& sigma, const NcPartition& pi);

/// Mobius function of the NC(n) poset on the interval [sigma, pi].
/// Factorizes over the blocks of Kr_pi(sigma); the full-interval values
/// mu(0_k, 1_k) are computed from the defining sum identity and memoized.
Rat mobius(const NcPartition& sigma, const NcPartition& pi);

/// All tau with sigma <= tau <= pi.
NcInterval interval(const NcPartition& sigma, const NcPartition& pi);

/// Enumerates noncrossing partitions of an arbitrary linearly ordered point
/// set by relabeling to {1,...,k}. Blocks come back in the original labels.
std::vector<std::vector<std::vector<int>>> enumerate_nc_of(const std::vector<int>& points);

Int catalan(int n);

}  // namespace ncprob
