#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

namespace fixtures {

namespace {

wordsym::AnalysisSession make(const char* name) {
    wordsym::AnalysisConfig cfg;
    cfg.word_name = name;
    cfg.n_max = 32;
    return wordsym::AnalysisSession(cfg);
}

}  // namespace

wordsym::AnalysisSession& example() {
    static wordsym::AnalysisSession s = make("example");
    return s;
}

wordsym::AnalysisSession& fibonacci() {
    static wordsym::AnalysisSession s = make("fibonacci");
    return s;
}

wordsym::AnalysisSession& thue_morse() {
    static wordsym::AnalysisSession s = make("thue_morse");
    return s;
}

wordsym::Word w(const wordsym::AnalysisSession& s, const std::string& text) {
    return s.morphism().alphabet().parse(text);
}

std::string show(const wordsym::AnalysisSession& s, const wordsym::Word& word) {
    return s.morphism().alphabet().display(word);
}

}  // namespace fixtures
