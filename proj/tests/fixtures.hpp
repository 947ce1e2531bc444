#pragma once

#include "wordsym/analysis.hpp"

#include <string>

namespace fixtures {

// Shared corpus sessions (n_max 32), built once per test binary run.
wordsym::AnalysisSession& example();
wordsym::AnalysisSession& fibonacci();
wordsym::AnalysisSession& thue_morse();

wordsym::Word w(const wordsym::AnalysisSession& s, const std::string& text);
std::string show(const wordsym::AnalysisSession& s, const wordsym::Word& word);

}  // namespace fixtures
