#pragma once

#include "wordsym/language.hpp"
#include "wordsym/number_field.hpp"
#include "wordsym/spectral.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wordsym {

struct Interpretation {
    Word ancestor;
    size_t left_cut = 0;   // i < |phi(b_0)|
    size_t right_cut = 0;  // j < |phi(b_m)|

    auto operator<=>(const Interpretation&) const = default;
};

enum class FrequencyMode { exact, approx };

// One frequency in either engine. Exact values carry field coordinates,
// approx values a long double.
struct FrequencyValue {
    FrequencyMode mode = FrequencyMode::exact;
    std::optional<FieldElement> exact;
    long double approx = 0;

    long double value() const { return exact ? exact->to_long_double() : approx; }
    std::string str() const;
};

// All interpretations of v: ancestor windows scanned from the language index,
// keeping only cuts that leave a nonempty piece of the first and last images.
std::vector<Interpretation> interpretations(const Morphism& phi, const LanguageIndex& L,
                                            const Word& v);

class FrequencyEngine {
public:
    // Exact engine; phi is power-normalized internally.
    FrequencyEngine(const Morphism& phi, const LanguageIndex& L);
    // Approx engine (power iteration eigendata), same recursion in long double.
    FrequencyEngine(const Morphism& phi, const LanguageIndex& L, FrequencyMode mode);

    FrequencyMode mode() const { return mode_; }
    const FieldPtr& field() const;            // exact mode only
    const FieldElement& lambda() const;       // exact mode only
    long double lambda_approx() const { return lambda_approx_; }
    const LanguageIndex& language() const { return L_; }
    const Morphism& normalized_morphism() const { return psi_; }
    int normalization_power() const { return power_; }

    // rho(v); memoized. Throws ParseError when v is not a factor.
    FrequencyValue frequency(const Word& v);

    // Frequencies of every factor of length n (Cor. 2.1 shortcut applied).
    std::map<Word, FrequencyValue> frequency_map(int n);

    // Deduplicated values of rho over L_n, ordered by real embedding.
    // false_split set when approx mode saw two values within 1e-6 yet unequal.
    struct DistinctResult {
        std::vector<FrequencyValue> values;
        bool false_split_flag = false;
    };
    DistinctResult distinct_frequencies(int n);

    // Kirchhoff at level n; on failure returns false and fills witness.
    bool kirchhoff_check(int n, Word* witness = nullptr);

    // True when the base system had to fall back to empirical estimation.
    bool base_fallback() const { return base_fallback_; }

private:
    Morphism phi_;   // original
    Morphism psi_;   // power-normalized (all image lengths >= 2)
    int power_ = 1;  // psi = phi^power
    const LanguageIndex& L_;
    FrequencyMode mode_;
    std::optional<PerronData> perron_;          // exact mode
    std::optional<FieldElement> lambda_pow_;    // lambda^power (eigenvalue of psi)
    long double lambda_approx_ = 0;
    long double lambda_pow_approx_ = 0;
    std::vector<long double> letter_freq_approx_;
    bool base_fallback_ = false;

    std::map<Word, FieldElement> exact_memo_;
    std::map<Word, long double> approx_memo_;

    void solve_base();
    FieldElement exact_frequency(const Word& v, int depth);
    long double approx_frequency(const Word& v, int depth);
};

bool approx_equal(long double a, long double b, long double rel_tol = 1e-9L);

}  // namespace wordsym
