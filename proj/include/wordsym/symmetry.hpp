#pragma once

#include "wordsym/language.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wordsym {

// Letter permutation plus orientation. Action on a word: permute letterwise,
// reversing first when antimorphic.
struct Symmetry {
    std::vector<uint8_t> perm;
    bool antimorphic = false;

    bool operator==(const Symmetry& o) const = default;

    static Symmetry identity(int alphabet_size);
    bool is_identity_perm() const;
    Symmetry compose(const Symmetry& inner) const;  // this ∘ inner
    Symmetry inverse() const;
    Word apply(const Word& w) const;
    std::string to_text(const Alphabet& alphabet) const;
};

bool symmetry_less(const Symmetry& a, const Symmetry& b);  // canonical order

class SymmetryGroup {
public:
    static SymmetryGroup closure(std::vector<Symmetry> generators, int alphabet_size);

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Symmetry>& elements() const { return elements_; }
    // G^(2): involutive antimorphisms.
    const std::vector<Symmetry>& involutive_antimorphisms() const { return g2_; }
    bool contains_antimorphism() const;
    bool contains(const Symmetry& s) const;

    std::string to_text(const Alphabet& alphabet) const;

    // One generator per line: "perm: 0->1,1->0; orientation: antimorphism".
    static SymmetryGroup parse(const std::string& text, const Alphabet& alphabet);

private:
    std::vector<Symmetry> elements_;  // canonical order
    std::vector<Symmetry> g2_;
};

// Language-level queries.
bool check_invariance(const LanguageIndex& L, const SymmetryGroup& G);
size_t theta_palindromic_complexity(const LanguageIndex& L, const Symmetry& theta, int n);
std::vector<Word> theta_palindromes(const LanguageIndex& L, const Symmetry& theta, int n);

// Smallest N <= n_max with every factor of length N containing all letters.
int uniform_recurrence_N(const LanguageIndex& L);

// Weaker threshold: smallest N such that distinct same-orientation elements
// of G differ on every factor of length >= N (within the horizon).
int weaker_recurrence_N(const LanguageIndex& L, const SymmetryGroup& G);

struct PalindromeBoundCheck {
    size_t lhs = 0;
    size_t rhs = 0;
    bool holds = false;
};

// Palindrome bound: sum over antimorphic theta in G of P_theta(n)+P_theta(n+1)
// is at most deltaC(n) + #G.
PalindromeBoundCheck palindrome_bound_check(const LanguageIndex& L, const SymmetryGroup& G,
                                            int n, bool force = false);

}  // namespace wordsym
