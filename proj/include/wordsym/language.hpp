#pragma once

#include "wordsym/morphism.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace wordsym {

// Extension data of one factor inside the indexed language.
struct Extensions {
    std::set<char> left;
    std::set<char> right;
};

// Factor sets of the fixed point up to a horizon, built on a prefix long
// enough that consecutive substitution iterates agree on all lengths tracked.
class LanguageIndex {
public:
    // Indexes factors of length 0..n_max+1 (the +1 row feeds Rauzy edges).
    LanguageIndex(const Morphism& phi, int seed, int n_max);

    const Morphism& morphism() const { return phi_; }
    const Alphabet& alphabet() const { return phi_.alphabet(); }
    int seed() const { return seed_; }
    int n_max() const { return n_max_; }
    const Word& prefix() const { return prefix_; }

    // Factors of length n, sorted. Valid for 0 <= n <= n_max + 1.
    const std::vector<Word>& factors(int n) const;
    bool contains(const Word& w) const;
    const Extensions& extensions(const Word& w) const;

    size_t complexity(int n) const { return factors(n).size(); }
    long long delta_complexity(int n) const;  // C(n+1) - C(n)

    std::vector<Word> left_special(int n) const;
    std::vector<Word> right_special(int n) const;
    std::vector<Word> bispecial(int n) const;

    // Shortest bispecial factor containing w, scanning lengths |w|..n_max.
    // Empty optional encoded as empty word plus found=false.
    bool shortest_bispecial_containing(const Word& w, Word& out) const;

private:
    Morphism phi_;
    int seed_;
    int n_max_;
    Word prefix_;
    std::vector<std::vector<Word>> factors_;          // by length
    std::map<Word, Extensions> extensions_;

    void build();
};

// All occurrence positions of v in w (overlapping included).
std::vector<size_t> occurrences(const Word& v, const Word& w);

bool is_factor(const Word& v, const Word& w);

}  // namespace wordsym
