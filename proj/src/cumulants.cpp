#include "ncprob/cumulants.hpp"

#include <stdexcept>

namespace ncprob {

Word subword(const Word& w, const std::vector<int>& block) {
    Word out;
    out.letters.reserve(block.size());
    for (int pos : block) {
        if (pos < 1 || pos > (int)w.letters.size())
            throw std::out_of_range("subword: position out of range");
        out.letters.push_back(w.letters[pos - 1]);
    }
    return out;
}

namespace {

// Cartesian-product assembly of partitions on disjoint blocks.
std::vector<NcPartition> refinements_of_blocks(const std::vector<std::vector<int>>& blocks,
                                               int n) {
    std::vector<std::vector<std::vector<std::vector<int>>>> per_block;
    per_block.reserve(blocks.size());
    for (const auto& b : blocks) per_block.push_back(enumerate_nc_of(b));

    std::vector<NcPartition> out;
    std::vector<std::size_t> idx(blocks.size(), 0);
    for (;;) {
        std::vector<std::vector<int>> combined;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (const auto& blk : per_block[i][idx[i]]) combined.push_back(blk);
        out.emplace_back(n, combined);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == per_block[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

}  // namespace

std::vector<NcPartition> refinements(const NcPartition& pi) {
    return refinements_of_blocks(pi.blocks(), pi.n());
}

DualQ phi_pi(const NcPartition& pi, const Word& w, const MomentFunctional& f) {
    if (static_cast<std::size_t>(pi.n()) != w.letters.size())
        throw std::invalid_argument("phi_pi: partition size != word length");
    DualQ acc = DualQ{Rat(1), Rat(0)};
    for (const auto& b : pi.blocks()) acc = acc * f(subword(w, b));
    return acc;
}

DualQ free_cumulant(const NcPartition& pi, const Word& w, const MomentFunctional& f) {
    DualQ acc;
    for (const auto& sigma : refinements(pi)) {
        Rat mu = mobius(sigma, pi);
        DualQ term = phi_pi(sigma, w, f);
        acc = acc + DualQ{term.std_ * mu, term.inf_ * mu};
    }
    return acc;
}

DualQ free_cumulant_full(const Word& w, const MomentFunctional& f) {
    return free_cumulant(NcPartition::maximum(w.letters.size()), w, f);
}

DualQ moments_from_cumulants(const CumulantSpec& kappa, const Word& w) {
    DualQ acc;
    for (const auto& sigma : enumerate_nc(w.letters.size())) {
        DualQ term = DualQ{Rat(1), Rat(0)};
        for (const auto& b : sigma.blocks()) term = term * kappa(subword(w, b));
        acc = acc + term;
    }
    return acc;
}

Rat kappa_prime_leibniz(const NcPartition& pi, const Word& w, const MomentFunctional& f) {
    const auto& blocks = pi.blocks();
    Rat acc(0);
    for (std::size_t v = 0; v < blocks.size(); ++v) {
        NcPartition full_v = NcPartition::maximum(blocks[v].size());
        Rat term = free_cumulant(full_v, subword(w, blocks[v]), f).inf_;
        for (std::size_t u = 0; u < blocks.size(); ++u) {
            if (u == v) continue;
            NcPartition full_u = NcPartition::maximum(blocks[u].size());
            term *= free_cumulant(full_u, subword(w, blocks[u]), f).std_;
        }
        acc += term;
    }
    return acc;
}

std::vector<Rat> cumulants_from_moment_seq(const std::vector<Rat>& m) {
    if (m.empty() || m[0] != Rat(1))
        throw std::invalid_argument("cumulants_from_moment_seq: need m[0]=1");
    std::size_t K = m.size() - 1;
    std::vector<Rat> kappa(K + 1, Rat(0));
    // kappa_n = m_n - sum over NC(n) except 1_n of prod kappa_{|V|}
    for (std::size_t n = 1; n <= K; ++n) {
        Rat rest(0);
        for (const auto& sigma : enumerate_nc(n)) {
            if (sigma.blocks().size() == 1) continue;
            Rat term(1);
            for (const auto& b : sigma.blocks()) term *= kappa[b.size()];
            rest += term;
        }
        kappa[n] = m[n] - rest;
    }
    return kappa;
}

std::vector<Rat> moment_seq_from_cumulants(const std::vector<Rat>& kappa) {
    std::size_t K = kappa.empty() ? 0 : kappa.size() - 1;
    std::vector<Rat> m(K + 1, Rat(0));
    m[0] = 1;
    for (std::size_t n = 1; n <= K; ++n) {
        Rat acc(0);
        for (const auto& sigma : enumerate_nc(n)) {
            Rat term(1);
            for (const auto& b : sigma.blocks()) term *= kappa[b.size()];
            acc += term;
        }
        m[n] = acc;
    }
    return m;
}

}  // namespace ncprob
