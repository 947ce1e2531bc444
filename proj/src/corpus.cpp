#include "wordsym/corpus.hpp"

#include "wordsym/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wordsym {

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"example",
         "0 -> 0130\n"
         "1 -> 1021\n"
         "2 -> 102\n"
         "3 -> 013\n",
         "perm: 0->1,1->0,2->2,3->3; orientation: antimorphism\n"
         "perm: 0->0,1->1,2->3,3->2; orientation: antimorphism\n",
         "0"},
        {"fibonacci",
         "0 -> 01\n"
         "1 -> 0\n",
         "perm: 0->0,1->1; orientation: antimorphism\n",
         "0"},
        {"thue_morse",
         "0 -> 01\n"
         "1 -> 10\n",
         "perm: 0->0,1->1; orientation: antimorphism\n"
         "perm: 0->1,1->0; orientation: morphism\n",
         "0"},
    };
    return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : builtin_corpus())
        if (e.name == name) return e;
    throw ParseError("unknown corpus word '" + name + "'");
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& e : builtin_corpus()) out.push_back(e.name);
    return out;
}

namespace {

bool read_file_if_exists(const std::filesystem::path& p, std::string& out) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

}  // namespace

CorpusWord load_corpus_word(const std::string& name) {
    const CorpusEntry& entry = corpus_entry(name);
    std::string morphism_text = entry.morphism_text;
    std::string group_text = entry.group_text;
    if (const char* dir = std::getenv("WORDSYM_CORPUS")) {
        std::filesystem::path base(dir);
        std::string t;
        if (read_file_if_exists(base / (name + ".morphism"), t)) morphism_text = t;
        if (read_file_if_exists(base / (name + ".group"), t)) group_text = t;
    }
    Morphism phi = Morphism::parse(morphism_text);
    SymmetryGroup group = SymmetryGroup::parse(group_text, phi.alphabet());
    int seed = phi.alphabet().index(entry.seed);
    return CorpusWord{std::move(phi), std::move(group), seed};
}

}  // namespace wordsym
