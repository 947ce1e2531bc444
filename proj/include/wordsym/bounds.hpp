#pragma once

#include "wordsym/frequencies.hpp"
#include "wordsym/language.hpp"
#include "wordsym/rational.hpp"
#include "wordsym/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wordsym {

// Why a bound is not evaluated at a given order.
enum class Applicability {
    applicable,
    periodic,          // deltaC(n) = 0
    no_reversal,       // R not in G
    not_invariant,     // language not closed under G
    below_N,           // n < uniform recurrence N
    no_antimorphism,
};

std::string applicability_name(Applicability a);

struct BoundValue {
    Applicability status = Applicability::applicable;
    Rational value{0};   // exact, never floored
    bool attained = false;

    bool applicable() const { return status == Applicability::applicable; }
};

struct BoundReport {
    int n = 0;
    size_t complexity = 0;
    long long delta_c = 0;
    size_t x = 0;        // #BS_n
    size_t y = 0;        // #BS_n theta-palindromic for some theta in G^(2)
    size_t y_reversal = 0;  // #BS_n R-palindromic
    size_t distinct_count = 0;
    bool false_split_flag = false;
    BoundValue boshernitzan;  // 3 deltaC(n)
    BoundValue reversal;      // 2 deltaC(n) + 1 - X/2 - Y_R/2
    BoundValue group;         // (4 deltaC(n) + #G - X - Y)/#G
    bool holds() const;       // distinct <= every applicable bound
};

Rational boshernitzan_bound(const LanguageIndex& L, int n);
Rational reversal_bound(const LanguageIndex& L, const SymmetryGroup& G, int n);
Rational group_bound(const LanguageIndex& L, const SymmetryGroup& G, int n);

class BoundEvaluator {
public:
    BoundEvaluator(const LanguageIndex& L, const SymmetryGroup& G, FrequencyEngine& engine);

    BoundReport evaluate(int n) const;

    int recurrence_N() const { return recurrence_N_; }
    bool invariant() const { return invariant_; }

private:
    const LanguageIndex& L_;
    const SymmetryGroup& G_;
    FrequencyEngine& engine_;
    int recurrence_N_ = -1;
    bool invariant_ = false;
};

// Closed-form frequency-set matcher for the example word. Families 1a..1c are
// the two-element sets, 2a..2c the three-element ones; k is the scale.
struct FrequencySetForm {
    std::string family;  // "1a".."2c"
    int k = 0;
};

std::optional<FrequencySetForm> frequency_set_forms(FrequencyEngine& engine, int n);

}  // namespace wordsym
