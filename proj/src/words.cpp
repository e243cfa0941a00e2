#include "ncprob/words.hpp"

#include <stdexcept>

#include "ncprob/ncpart.hpp"

namespace ncprob {

int Alphabet::add(Generator g) {
    if (index_.count(g.id)) throw std::invalid_argument("Alphabet: duplicate id " + g.id);
    if (g.kind == GenKind::Projection) g.idempotent = true;
    int idx = static_cast<int>(gens_.size());
    index_[g.id] = idx;
    gens_.push_back(std::move(g));
    return idx;
}

int Alphabet::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("Alphabet: unknown generator " + id);
    return it->second;
}

Word Alphabet::canonical(Word w) const {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int l : w.letters) {
        if (!out.empty() && out.back() == l && at(l).idempotent) continue;
        out.push_back(l);
    }
    return Word{std::move(out)};
}

Word Alphabet::word(std::initializer_list<std::string> ids) const {
    Word w;
    for (const auto& id : ids) w.letters.push_back(index_of(id));
    return canonical(std::move(w));
}

Word Alphabet::parse_word(const std::vector<std::string>& ids) const {
    Word w;
    for (const auto& id : ids) w.letters.push_back(index_of(id));
    return canonical(std::move(w));
}

std::string Alphabet::show(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i)
        s += (i ? " " : "") + at(w.letters[i]).id;
    return s;
}

std::vector<int> Alphabet::letters_of_group(const std::string& group) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (gens_[static_cast<std::size_t>(i)].group == group) out.push_back(i);
    return out;
}

std::vector<int> Alphabet::letters_of_kind(GenKind k) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (gens_[static_cast<std::size_t>(i)].kind == k) out.push_back(i);
    return out;
}

DPoly dpoly_add(const DPoly& a, const DPoly& b) {
    DPoly r = a;
    for (const auto& [w, c] : b) {
        auto& slot = r[w];
        slot += c;
        if (slot.is_zero()) r.erase(w);
    }
    return r;
}

DPoly dpoly_scale(const DPoly& a, const DualQ& c) {
    DPoly r;
    for (const auto& [w, x] : a) {
        DualQ v = x * c;
        if (!v.is_zero()) r[w] = v;
    }
    return r;
}

DPoly dpoly_mul(const Alphabet& alpha, const DPoly& a, const DPoly& b) {
    DPoly r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            DualQ v = ca * cb;
            if (v.is_zero()) continue;
            Word w = alpha.canonical(concat(wa, wb));
            auto& slot = r[w];
            slot += v;
            if (slot.is_zero()) r.erase(w);
        }
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [w, c] : b) {
        auto& slot = r[w];
        slot += c;
        if (slot == 0) r.erase(w);
    }
    return r;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    Poly r;
    for (const auto& [w, x] : a) {
        Rat v = x * c;
        if (v != 0) r[w] = v;
    }
    return r;
}

Poly poly_mul(const Alphabet& alpha, const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Rat v = ca * cb;
            if (v == 0) continue;
            Word w = alpha.canonical(concat(wa, wb));
            auto& slot = r[w];
            slot += v;
            if (slot == 0) r.erase(w);
        }
    return r;
}

MomentFunctional::MomentFunctional(std::function<DualQ(const Word&)> eval)
    : state_(std::make_shared<State>()) {
    state_->eval = std::move(eval);
}

DualQ MomentFunctional::operator()(const Word& w) const {
    if (!state_) throw std::logic_error("MomentFunctional: empty");
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        if (auto it = state_->memo.find(w); it != state_->memo.end()) return it->second;
    }
    DualQ v = state_->eval(w);
    std::lock_guard<std::mutex> lock(state_->mu);
    state_->memo.emplace(w, v);
    return v;
}

DualQ MomentFunctional::operator()(const DPoly& p) const {
    DualQ acc;
    for (const auto& [w, c] : p) acc += c * (*this)(w);
    return acc;
}

MomentFunctional functional_from_moments(std::vector<Rat> moments, std::vector<Rat> inf) {
    if (moments.empty() || moments[0] != 1)
        throw std::invalid_argument("functional_from_moments: m0 must be 1");
    if (!inf.empty() && inf[0] != 0)
        throw std::invalid_argument("functional_from_moments: phi'(1) must be 0");
    return MomentFunctional([moments = std::move(moments), inf = std::move(inf)](const Word& w) {
        std::size_t k = w.size();
        if (k >= moments.size())
            throw std::out_of_range("functional_from_moments: word longer than moment data");
        Rat i = (k < inf.size()) ? inf[k] : Rat(0);
        return DualQ(moments[k], i);
    });
}

MomentFunctional phi_functional_from_values(std::vector<Rat> values) {
    return MomentFunctional([values = std::move(values)](const Word& w) {
        std::size_t k = w.size();
        if (k == 0) return DualQ(Rat(0));
        if (k >= values.size())
            throw std::out_of_range("phi_functional_from_values: word too long");
        return DualQ(values[k]);
    });
}

std::vector<Rat> semicircle_moments(int K) {
    std::vector<Rat> m(K + 1, Rat(0));
    for (int n = 0; 2 * n <= K; ++n) m[2 * n] = Rat(catalan(n));
    return m;
}

std::vector<Rat> free_poisson_moments(int K) {
    // lambda = 1: m_n = |NC(n)| = Catalan(n)
    std::vector<Rat> m(K + 1);
    for (int n = 0; n <= K; ++n) m[n] = Rat(catalan(n));
    return m;
}

std::vector<Rat> point_mass_moments(const Rat& c, int K) {
    std::vector<Rat> m(K + 1);
    Rat p = 1;
    for (int n = 0; n <= K; ++n) {
        m[n] = p;
        p *= c;
    }
    return m;
}

std::vector<Rat> bernoulli_moments(const Rat& p, int K) {
    std::vector<Rat> m(K + 1, p);
    m[0] = 1;
    return m;
}

std::vector<Rat> symmetric_bernoulli_moments(int K) {
    std::vector<Rat> m(K + 1, Rat(0));
    for (int n = 0; n <= K; n += 2) m[n] = 1;
    return m;
}

std::vector<Word> words_over(const std::vector<int>& letters, int max_len) {
    std::vector<Word> out;
    std::vector<Word> frontier{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int l : letters) {
                Word v = w;
                v.letters.push_back(l);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace ncprob
