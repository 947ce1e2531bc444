#pragma once

#include "wordsym/frequencies.hpp"
#include "wordsym/language.hpp"
#include "wordsym/symmetry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wordsym {

// Gamma_n: vertices L_n, edges L_{n+1} (start = prefix, end = suffix).
struct RauzyGraph {
    int order = 0;
    std::vector<Word> vertices;
    std::vector<Word> edges;
    std::map<Word, FrequencyValue> labels;  // optional, keyed by edge word
};

// Edge of the reduced graph: a simple path. Endpoints are its length-n
// prefix/suffix.
struct ReducedRauzyGraph {
    int order = 0;
    std::vector<Word> vertices;  // LS ∪ RS, sorted
    std::vector<Word> edges;     // simple-path words, sorted
    std::map<Word, FrequencyValue> labels;
};

RauzyGraph build_rauzy(const LanguageIndex& L, int n);
RauzyGraph build_rauzy(const LanguageIndex& L, int n, FrequencyEngine& engine);

ReducedRauzyGraph reduce(const RauzyGraph& g, const LanguageIndex& L);
ReducedRauzyGraph reduce(const RauzyGraph& g, const LanguageIndex& L, FrequencyEngine& engine);

struct EdgeCountIdentities {
    size_t edges = 0;
    size_t rs_rext_sum = 0;     // sum of #Rext(w) over right-special vertices
    size_t ls_not_rs = 0;       // left-special vertices that are not right special
    long long delta_c = 0;
    size_t ls = 0, rs = 0, bs = 0;
    bool eq2_holds = false;     // edges == rs_rext_sum + ls_not_rs
    bool eq3_holds = false;     // edges == deltaC + #RS + #LS - #BS
    bool eq5_holds = false;     // edges <= 3 deltaC - #BS
};

EdgeCountIdentities edge_count_identities(const ReducedRauzyGraph& g, const LanguageIndex& L);

struct EdgeClassification {
    size_t theta_fixed = 0;  // A
    size_t remainder = 0;    // B
    std::vector<std::vector<Word>> orbits;
};

EdgeClassification classify_edges(const ReducedRauzyGraph& g, const SymmetryGroup& G);

struct ThetaFixedCensus {
    size_t a = 0;            // theta-fixed edge count
    size_t census = 0;       // sum P_theta(n)+P_theta(n+1) minus per-theta BS palindromes
    bool matches = false;
};

ThetaFixedCensus theta_fixed_edge_census(const ReducedRauzyGraph& g, const LanguageIndex& L,
                                         const SymmetryGroup& G);

std::string export_dot(const RauzyGraph& g, const Alphabet& alphabet, bool with_labels);
std::string export_dot(const ReducedRauzyGraph& g, const Alphabet& alphabet, bool with_labels);

}  // namespace wordsym
