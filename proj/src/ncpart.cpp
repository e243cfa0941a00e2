#include "ncprob/ncpart.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ncprob {

namespace {

void check_partition(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) throw std::invalid_argument("NcPartition: n must be positive");
    std::vector<char> seen(n, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("NcPartition: empty block");
        for (int x : b) {
            if (x < 1 || x > n) throw std::invalid_argument("NcPartition: element out of range");
            if (seen[x - 1]) throw std::invalid_argument("NcPartition: repeated element");
            seen[x - 1] = 1;
        }
    }
    for (char c : seen)
        if (!c) throw std::invalid_argument("NcPartition: blocks do not cover {1,...,n}");
}

bool crossing_free(int n, const std::vector<int>& block_of) {
    // a<b<c<d with block(a)==block(c) != block(b)==block(d)
    for (int b = 2; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c) {
            if (block_of[b - 1] == block_of[c - 1]) continue;
            // need a < b with block(a)==block(c) and d > c with block(d)==block(b)
            bool has_a = false, has_d = false;
            for (int a = 1; a < b && !has_a; ++a)
                if (block_of[a - 1] == block_of[c - 1]) has_a = true;
            if (!has_a) continue;
            for (int d = c + 1; d <= n && !has_d; ++d)
                if (block_of[d - 1] == block_of[b - 1]) has_d = true;
            if (has_d) return false;
        }
    return true;
}

std::vector<int> block_index_map(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> block_of(n, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int x : blocks[i]) block_of[x - 1] = static_cast<int>(i);
    return block_of;
}

}  // namespace

NcPartition::NcPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    check_partition(n, blocks);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    blocks_ = std::move(blocks);
    block_of_ = block_index_map(n_, blocks_);
    if (!crossing_free(n_, block_of_))
        throw std::invalid_argument("NcPartition: crossing blocks");
}

NcPartition NcPartition::minimum(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return NcPartition(n, std::move(blocks));
}

NcPartition NcPartition::maximum(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    return NcPartition(n, {all});
}

std::string NcPartition::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        s += (i ? ",{" : "{");
        for (std::size_t j = 0; j < blocks_[i].size(); ++j)
            s += (j ? "," : "") + std::to_string(blocks_[i][j]);
        s += "}";
    }
    return s + "}";
}

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
    check_partition(n, blocks);
    return crossing_free(n, block_index_map(n, blocks));
}

std::vector<std::vector<std::vector<int>>> enumerate_nc_of(const std::vector<int>& points) {
    std::vector<std::vector<std::vector<int>>> out;
    if (points.empty()) {
        out.push_back({});
        return out;
    }
    // The block of the first point splits the rest into independent gaps.
    int first = points.front();
    int m = static_cast<int>(points.size()) - 1;
    // choose subset of the remaining m points for first's block
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> block{first};
        std::vector<std::vector<int>> gaps;
        std::vector<int> gap;
        for (int i = 0; i < m; ++i) {
            if (mask & (1u << i)) {
                block.push_back(points[i + 1]);
                gaps.push_back(std::move(gap));
                gap.clear();
            } else {
                gap.push_back(points[i + 1]);
            }
        }
        gaps.push_back(std::move(gap));
        // cartesian product of NC over the gaps
        std::vector<std::vector<std::vector<int>>> partial{{block}};
        for (const auto& g : gaps) {
            if (g.empty()) continue;
            auto sub = enumerate_nc_of(g);
            std::vector<std::vector<std::vector<int>>> next;
            next.reserve(partial.size() * sub.size());
            for (const auto& p : partial)
                for (const auto& s : sub) {
                    auto q = p;
                    q.insert(q.end(), s.begin(), s.end());
                    next.push_back(std::move(q));
                }
            partial = std::move(next);
        }
        for (auto& p : partial) out.push_back(std::move(p));
    }
    return out;
}

std::vector<NcPartition> enumerate_nc(int n) {
    if (n < 1 || n > 14)
        throw std::out_of_range("enumerate_nc: n must satisfy 1 <= n <= 14");
    std::vector<int> points(n);
    std::iota(points.begin(), points.end(), 1);
    auto raw = enumerate_nc_of(points);
    std::vector<NcPartition> out;
    out.reserve(raw.size());
    for (auto& blocks : raw) out.emplace_back(n, std::move(blocks));
    std::sort(out.begin(), out.end());
    return out;
}

bool leq(const NcPartition& sigma, const NcPartition& pi) {
    if (sigma.n() != pi.n()) throw std::invalid_argument("leq: mismatched ground sets");
    for (const auto& b : sigma.blocks()) {
        int target = pi.block_of(b.front());
        for (int x : b)
            if (pi.block_of(x) != target) return false;
    }
    return true;
}

NcPartition kreweras(const NcPartition& pi) {
    int n = pi.n();
    // sigma_pi: i -> next element of its block, cyclically within the block.
    std::vector<int> next(n + 1), inv(n + 1);
    for (const auto& b : pi.blocks())
        for (std::size_t j = 0; j < b.size(); ++j)
            next[b[j]] = b[(j + 1) % b.size()];
    for (int i = 1; i <= n; ++i) inv[next[i]] = i;
    // sigma_Kr = sigma_pi^{-1} o (1 2 ... n); its cycles are the blocks.
    std::vector<char> done(n + 1, 0);
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
        if (done[i]) continue;
        std::vector<int> cycle;
        int j = i;
        while (!done[j]) {
            done[j] = 1;
            cycle.push_back(j);
            j = inv[j % n + 1];
        }
        blocks.push_back(std::move(cycle));
    }
    return NcPartition(n, std::move(blocks));
}

NcPartition kreweras_bruteforce(const NcPartition& pi) {
    int n = pi.n();
    // Interleave pi on odd positions 2i-1 and a candidate tau on even
    // positions 2i; keep candidates whose union is noncrossing on [2n].
    auto interleaved_ok = [&](const NcPartition& tau) {
        std::vector<std::vector<int>> blocks;
        for (const auto& b : pi.blocks()) {
            std::vector<int> nb;
            for (int x : b) nb.push_back(2 * x - 1);
            blocks.push_back(std::move(nb));
        }
        for (const auto& b : tau.blocks()) {
            std::vector<int> nb;
            for (int x : b) nb.push_back(2 * x);
            blocks.push_back(std::move(nb));
        }
        return is_noncrossing(2 * n, blocks);
    };
    std::vector<NcPartition> admissible;
    for (const auto& tau : enumerate_nc(n))
        if (interleaved_ok(tau)) admissible.push_back(tau);
    // The complement is the unique maximum among admissible candidates.
    for (const auto& tau : admissible) {
        bool maximal = true;
        for (const auto& other : admissible)
            if (!leq(other, tau)) { maximal = false; break; }
        if (maximal) return tau;
    }
    throw std::logic_error("kreweras_bruteforce: no maximum found");
}

NcPartition relative_kreweras(const NcPartition& sigma, const NcPartition& pi) {
    if (!leq(sigma, pi)) throw std::invalid_argument("relative_kreweras: sigma not <= pi");
    std::vector<std::vector<int>> blocks;
    for (const auto& v : pi.blocks()) {
        int k = static_cast<int>(v.size());
        // restrict sigma to v, relabel to {1,...,k}
        std::map<int, int> pos;
        for (int j = 0; j < k; ++j) pos[v[j]] = j + 1;
        std::map<int, std::vector<int>> restricted;  // sigma block index -> labels
        for (int x : v) restricted[sigma.block_of(x)].push_back(pos[x]);
        std::vector<std::vector<int>> sub;
        for (auto& [_, b] : restricted) sub.push_back(std::move(b));
        NcPartition local = kreweras(NcPartition(k, std::move(sub)));
        for (const auto& b : local.blocks()) {
            std::vector<int> orig;
            for (int x : b) orig.push_back(v[x - 1]);
            blocks.push_back(std::move(orig));
        }
    }
    return NcPartition(sigma.n(), std::move(blocks));
}

namespace {

// mu(0_k, 1_k) from the defining identity: sum over tau in NC(k) of
// mu(tau, 1_k) vanishes for k >= 2, and mu(tau, 1_k) factorizes over the
// blocks of Kr(tau), all of size < k when tau != 0_k.
Rat full_interval_mobius(int k);

Rat mobius_via_blocks(const NcPartition& kr_complement) {
    Rat r = 1;
    for (const auto& b : kr_complement.blocks())
        r *= full_interval_mobius(static_cast<int>(b.size()));
    return r;
}

Rat full_interval_mobius(int k) {
    static std::map<int, Rat> memo{{1, Rat(1)}};
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
    }
    Rat acc = 0;
    for (const auto& tau : enumerate_nc(k)) {
        if (tau == NcPartition::minimum(k)) continue;
        acc += mobius_via_blocks(kreweras(tau));
    }
    Rat val = -acc;
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(k, val);
    return val;
}

}  // namespace

Rat mobius(const NcPartition& sigma, const NcPartition& pi) {
    if (!leq(sigma, pi)) throw std::invalid_argument("mobius: sigma not <= pi");
    // [sigma, pi] is a product of full intervals NC(|W|), W running over the
    // blocks of the relative Kreweras complement.
    return mobius_via_blocks(relative_kreweras(sigma, pi));
}

NcInterval interval(const NcPartition& sigma, const NcPartition& pi) {
    if (!leq(sigma, pi)) throw std::invalid_argument("interval: sigma not <= pi");
    std::vector<NcPartition> elems;
    for (const auto& tau : enumerate_nc(sigma.n()))
        if (leq(sigma, tau) && leq(tau, pi)) elems.push_back(tau);
    return NcInterval{sigma, pi, std::move(elems)};
}

Int catalan(int n) {
    Int num = 1, den = 1;
    for (int k = 0; k < n; ++k) {
        num *= (n + k + 1);
        den *= (k + 1);
    }
    return num / den / (n + 1);
}

}  // namespace ncprob
