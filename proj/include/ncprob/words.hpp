#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "ncprob/dual.hpp"
#include "ncprob/rational.hpp"

namespace ncprob {

enum class GenKind { Main, Perturbation, Projection };

struct Generator {
    std::string id;
    std::string group;
    GenKind kind = GenKind::Main;
    bool idempotent = false;  // q^2 = q
};

/// Word over an alphabet; letters are generator indices. The empty word is
/// the unit.
struct Word {
    std::vector<int> letters;
    auto operator<=>(const Word&) const = default;
    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
};

inline Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

/// Registry of generators. Projection-kind generators are forced idempotent.
class Alphabet {
public:
    int add(Generator g);
    int index_of(const std::string& id) const;
    const Generator& at(int i) const { return gens_.at(static_cast<std::size_t>(i)); }
    int size() const { return static_cast<int>(gens_.size()); }

    /// Collapses adjacent equal idempotent letters.
    Word canonical(Word w) const;

    Word word(std::initializer_list<std::string> ids) const;
    Word parse_word(const std::vector<std::string>& ids) const;
    std::string show(const Word& w) const;

    std::vector<int> letters_of_group(const std::string& group) const;
    std::vector<int> letters_of_kind(GenKind k) const;

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
};

/// Polynomial = finite linear combination of words, with dual coefficients.
using DPoly = std::map<Word, DualQ>;
/// Scalar-coefficient polynomial (type-B' pair components).
using Poly = std::map<Word, Rat>;

DPoly dpoly_add(const DPoly& a, const DPoly& b);
DPoly dpoly_scale(const DPoly& a, const DualQ& c);
DPoly dpoly_mul(const Alphabet& alpha, const DPoly& a, const DPoly& b);
inline DPoly dpoly_unit() { return {{Word{}, DualQ(Rat(1))}}; }

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
Poly poly_mul(const Alphabet& alpha, const Poly& a, const Poly& b);
inline Poly poly_unit() { return {{Word{}, Rat(1)}}; }

/// Unital linear functional on words, valued in the dual ring: the std part
/// is phi, the inf part phi'. Memoizing and safe for concurrent reads.
class MomentFunctional {
public:
    MomentFunctional() = default;
    explicit MomentFunctional(std::function<DualQ(const Word&)> eval);

    DualQ operator()(const Word& w) const;
    /// Linear extension to polynomials.
    DualQ operator()(const DPoly& p) const;

    bool valid() const { return static_cast<bool>(state_); }

private:
    struct State {
        std::function<DualQ(const Word&)> eval;
        mutable std::map<Word, DualQ> memo;
        mutable std::mutex mu;
    };
    std::shared_ptr<State> state_;
};

/// Functional of a single-variable distribution: word of length k maps to
/// moments[k] + eps * inf[k] (inf optional). moments[0] must be 1.
MomentFunctional functional_from_moments(std::vector<Rat> moments,
                                         std::vector<Rat> inf = {});

/// Non-unital perturbation-side functional: length-k run maps to values[k]
/// placed in the requested layer; empty word maps to 0 in that layer.
/// By convention perturbation values sit in the std part when used as a
/// standalone capital-Phi functional.
MomentFunctional phi_functional_from_values(std::vector<Rat> values);

/// Moment sequences for stock distributions, m_0..m_K.
std::vector<Rat> semicircle_moments(int K);          // standard: m2=1, m4=2, ...
std::vector<Rat> free_poisson_moments(int K);        // lambda = 1: m_n = Catalan
std::vector<Rat> point_mass_moments(const Rat& c, int K);
std::vector<Rat> bernoulli_moments(const Rat& p, int K);  // {0,1} with P(1)=p
std::vector<Rat> symmetric_bernoulli_moments(int K);      // {-1,+1} fair

/// All words of length 1..max_len over the given letters.
std::vector<Word> words_over(const std::vector<int>& letters, int max_len);

}  // namespace ncprob
