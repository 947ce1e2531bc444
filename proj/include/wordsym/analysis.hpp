#pragma once

#include "wordsym/bounds.hpp"
#include "wordsym/corpus.hpp"
#include "wordsym/frequencies.hpp"
#include "wordsym/language.hpp"
#include "wordsym/rauzy.hpp"
#include "wordsym/symmetry.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wordsym {

struct AnalysisConfig {
    std::string word_name;       // builtin corpus name, or
    std::string morphism_path;   // explicit files, or
    std::string group_path;
    std::string morphism_text;   // inline definitions (used by the bindings)
    std::string group_text;
    std::string seed_letter;     // default: first letter with a prolongable image
    int n_max = 40;
    FrequencyMode mode = FrequencyMode::exact;
    long double tolerance = 1e-9L;
    size_t prefix_floor = 1000000;
    std::string format = "json";  // json | csv
    std::string out_path;         // empty = stdout
};

// Owns everything needed to answer questions about one word.
class AnalysisSession {
public:
    explicit AnalysisSession(const AnalysisConfig& cfg);

    const std::string& name() const { return name_; }
    const Morphism& morphism() const { return *phi_; }
    const SymmetryGroup& group() const { return group_; }
    const LanguageIndex& language() const { return *L_; }
    FrequencyEngine& engine() { return *engine_; }
    const BoundEvaluator& evaluator() const { return *evaluator_; }
    int seed() const { return seed_; }
    int n_max() const { return cfg_.n_max; }
    const AnalysisConfig& config() const { return cfg_; }

    BoundReport report(int n) const { return evaluator_->evaluate(n); }
    std::vector<BoundReport> reports(int n_lo, int n_hi) const;

    std::string report_json(int n_lo, int n_hi);
    std::string report_csv(int n_lo, int n_hi) const;
    std::string freq_table(int n);  // text table: factor, value, empirical

    struct Verdict {
        std::string check;
        bool pass = false;
        std::string detail;
    };
    // Full invariant battery; n capped at verify_n_max for runtime.
    std::vector<Verdict> verify(int verify_n_max = 30);

private:
    AnalysisConfig cfg_;
    std::string name_;
    std::unique_ptr<Morphism> phi_;
    SymmetryGroup group_;
    int seed_ = 0;
    std::unique_ptr<LanguageIndex> L_;
    std::unique_ptr<FrequencyEngine> engine_;
    std::unique_ptr<BoundEvaluator> evaluator_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wordsym
