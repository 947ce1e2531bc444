#include "wordsym/language.hpp"

#include "wordsym/errors.hpp"
#include "wordsym/spectral.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace wordsym {

std::vector<size_t> occurrences(const Word& v, const Word& w) {
    std::vector<size_t> pos;
    if (v.empty() || v.size() > w.size()) return pos;
    for (size_t i = 0; i + v.size() <= w.size(); ++i)
        if (w.compare(i, v.size(), v) == 0) pos.push_back(i);
    return pos;
}

bool is_factor(const Word& v, const Word& w) {
    return v.empty() || w.find(v) != Word::npos;
}

LanguageIndex::LanguageIndex(const Morphism& phi, int seed, int n_max)
    : phi_(phi), seed_(seed), n_max_(n_max) {
    if (n_max_ < 1) throw ParseError("n_max must be at least 1");
    if (phi_.alphabet_size() < 2)
        throw HypothesisError("alphabet must have at least two letters");
    if (!phi_.is_nonerasing()) throw HypothesisError("erasing morphisms are not supported");
    if (!is_primitive(phi_)) throw HypothesisError("morphism is not primitive");
    build();
}

namespace {

// Distinct factor counts per length 0..h of w.
std::vector<size_t> factor_counts(const Word& w, int h) {
    std::vector<size_t> counts(static_cast<size_t>(h) + 1);
    counts[0] = 1;
    std::string_view sv(w);
    for (int n = 1; n <= h; ++n) {
        std::unordered_set<std::string_view> seen;
        if (static_cast<size_t>(n) <= sv.size())
            for (size_t i = 0; i + n <= sv.size(); ++i) seen.insert(sv.substr(i, n));
        counts[static_cast<size_t>(n)] = seen.size();
    }
    return counts;
}

}  // namespace

void LanguageIndex::build() {
    int h = n_max_ + 1;
    const Word& seed_image = phi_.image(seed_);
    if (seed_image.size() < 2 || seed_image[0] != static_cast<char>(seed_))
        throw HypothesisError("morphism is not prolongable on the chosen letter");

    // Iterate until consecutive iterates agree on every factor set of length
    // <= n_max+1. Iterates are nested prefixes, so equal counts mean equal sets.
    Word w(1, static_cast<char>(seed_));
    std::vector<size_t> prev_counts;
    bool stabilized = false;
    for (int it = 0; it < 40; ++it) {
        w = phi_.apply(w);
        if (w.size() < static_cast<size_t>(h) + 1) continue;
        std::vector<size_t> counts = factor_counts(w, h);
        if (counts == prev_counts) {
            stabilized = true;
            break;
        }
        prev_counts = std::move(counts);
    }
    if (!stabilized)
        throw HypothesisError("factor sets did not stabilize within 40 iterations");
    prefix_ = std::move(w);

    factors_.assign(static_cast<size_t>(h) + 1, {});
    factors_[0] = {Word()};
    extensions_[Word()] = Extensions{};
    std::string_view sv(prefix_);
    for (int n = 1; n <= h; ++n) {
        std::unordered_set<std::string_view> seen;
        for (size_t i = 0; i + n <= sv.size(); ++i) seen.insert(sv.substr(i, n));
        auto& row = factors_[static_cast<size_t>(n)];
        row.assign(seen.begin(), seen.end());
        std::sort(row.begin(), row.end());
        for (const Word& f : row) extensions_[f] = Extensions{};
    }
    // ε extends by every letter that occurs.
    for (const Word& f : factors_[1]) {
        extensions_[Word()].left.insert(f[0]);
        extensions_[Word()].right.insert(f[0]);
    }
    std::unordered_map<std::string_view, Extensions*> by_view;
    for (auto& [f, ext] : extensions_)
        if (!f.empty()) by_view.emplace(std::string_view(f), &ext);
    for (int n = 1; n <= h; ++n) {
        for (size_t i = 0; i + n <= sv.size(); ++i) {
            Extensions* e = by_view.at(sv.substr(i, n));
            if (i > 0) e->left.insert(prefix_[i - 1]);
            if (i + n < sv.size()) e->right.insert(prefix_[i + n]);
        }
    }
}

const std::vector<Word>& LanguageIndex::factors(int n) const {
    if (n < 0 || n > n_max_ + 1) throw ParseError("factor length out of indexed range");
    return factors_[static_cast<size_t>(n)];
}

bool LanguageIndex::contains(const Word& w) const {
    if (w.size() > static_cast<size_t>(n_max_) + 1) return false;
    return extensions_.count(w) != 0;
}

const Extensions& LanguageIndex::extensions(const Word& w) const {
    auto it = extensions_.find(w);
    if (it == extensions_.end()) throw ParseError("word is not an indexed factor");
    return it->second;
}

long long LanguageIndex::delta_complexity(int n) const {
    if (n < 0 || n > n_max_) throw ParseError("order out of range for delta complexity");
    return static_cast<long long>(complexity(n + 1)) - static_cast<long long>(complexity(n));
}

std::vector<Word> LanguageIndex::left_special(int n) const {
    std::vector<Word> out;
    for (const Word& w : factors(n))
        if (extensions(w).left.size() >= 2) out.push_back(w);
    return out;
}

std::vector<Word> LanguageIndex::right_special(int n) const {
    std::vector<Word> out;
    for (const Word& w : factors(n))
        if (extensions(w).right.size() >= 2) out.push_back(w);
    return out;
}

std::vector<Word> LanguageIndex::bispecial(int n) const {
    std::vector<Word> out;
    for (const Word& w : factors(n)) {
        const Extensions& e = extensions(w);
        if (e.left.size() >= 2 && e.right.size() >= 2) out.push_back(w);
    }
    return out;
}

bool LanguageIndex::shortest_bispecial_containing(const Word& w, Word& out) const {
    for (int n = static_cast<int>(w.size()); n <= n_max_; ++n) {
        std::vector<Word> best;
        for (const Word& b : bispecial(n))
            if (is_factor(w, b)) best.push_back(b);
        if (!best.empty()) {
            out = best.front();
            return true;
        }
    }
    return false;
}

}  // namespace wordsym
