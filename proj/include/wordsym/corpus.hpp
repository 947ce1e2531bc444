#pragma once

#include "wordsym/morphism.hpp"
#include "wordsym/symmetry.hpp"

#include <string>
#include <vector>

namespace wordsym {

struct CorpusEntry {
    std::string name;
    std::string morphism_text;
    std::string group_text;
    std::string seed;  // display letter
};

// Built-in corpus: "example" (Eq. 8 word), "fibonacci", "thue_morse".
// WORDSYM_CORPUS overrides the data directory; files <name>.morphism and
// <name>.group are read from there when present.
const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry& corpus_entry(const std::string& name);
std::vector<std::string> corpus_names();

struct CorpusWord {
    Morphism morphism;
    SymmetryGroup group;
    int seed = 0;
};

CorpusWord load_corpus_word(const std::string& name);

}  // namespace wordsym
