#include "wordsym/symmetry.hpp"

#include "wordsym/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wordsym {

Symmetry Symmetry::identity(int alphabet_size) {
    Symmetry s;
    s.perm.resize(static_cast<size_t>(alphabet_size));
    for (int i = 0; i < alphabet_size; ++i) s.perm[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
    return s;
}

bool Symmetry::is_identity_perm() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

Symmetry Symmetry::compose(const Symmetry& inner) const {
    if (perm.size() != inner.perm.size())
        throw InvariantError("composing symmetries over different alphabets");
    Symmetry out;
    out.perm.resize(perm.size());
    // Action on words composes; on letters the permutations compose directly.
    for (size_t i = 0; i < perm.size(); ++i) out.perm[i] = perm[inner.perm[i]];
    out.antimorphic = antimorphic != inner.antimorphic;
    return out;
}

Symmetry Symmetry::inverse() const {
    Symmetry out;
    out.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = static_cast<uint8_t>(i);
    out.antimorphic = antimorphic;
    return out;
}

Word Symmetry::apply(const Word& w) const {
    Word out;
    out.reserve(w.size());
    if (antimorphic) {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            out.push_back(static_cast<char>(perm[static_cast<unsigned char>(*it)]));
    } else {
        for (char c : w) out.push_back(static_cast<char>(perm[static_cast<unsigned char>(c)]));
    }
    return out;
}

std::string Symmetry::to_text(const Alphabet& alphabet) const {
    std::ostringstream os;
    os << "perm: ";
    for (size_t i = 0; i < perm.size(); ++i) {
        if (i) os << ",";
        os << alphabet.letter(static_cast<int>(i)) << "->" << alphabet.letter(perm[i]);
    }
    os << "; orientation: " << (antimorphic ? "antimorphism" : "morphism");
    return os.str();
}

bool symmetry_less(const Symmetry& a, const Symmetry& b) {
    if (a.antimorphic != b.antimorphic) return !a.antimorphic;  // morphic first
    return a.perm < b.perm;
}

SymmetryGroup SymmetryGroup::closure(std::vector<Symmetry> generators, int alphabet_size) {
    for (const Symmetry& g : generators) {
        if (static_cast<int>(g.perm.size()) != alphabet_size)
            throw ParseError("symmetry permutation size does not match the alphabet");
        std::vector<bool> seen(g.perm.size(), false);
        for (uint8_t v : g.perm) {
            if (v >= g.perm.size() || seen[v]) throw ParseError("permutation is not a bijection");
            seen[v] = true;
        }
    }
    auto cmp = [](const Symmetry& a, const Symmetry& b) { return symmetry_less(a, b); };
    std::set<Symmetry, decltype(cmp)> elems(cmp);
    elems.insert(Symmetry::identity(alphabet_size));
    for (const auto& g : generators) elems.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Symmetry> cur(elems.begin(), elems.end());
        for (const auto& a : cur)
            for (const auto& b : cur)
                if (elems.insert(a.compose(b)).second) grew = true;
    }
    SymmetryGroup G;
    G.elements_.assign(elems.begin(), elems.end());
    for (const auto& s : G.elements_)
        if (s.antimorphic && s.compose(s).is_identity_perm()) G.g2_.push_back(s);
    return G;
}

bool SymmetryGroup::contains_antimorphism() const {
    for (const auto& s : elements_)
        if (s.antimorphic) return true;
    return false;
}

bool SymmetryGroup::contains(const Symmetry& s) const {
    return std::find(elements_.begin(), elements_.end(), s) != elements_.end();
}

std::string SymmetryGroup::to_text(const Alphabet& alphabet) const {
    std::ostringstream os;
    for (const auto& s : elements_) os << s.to_text(alphabet) << "\n";
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

SymmetryGroup SymmetryGroup::parse(const std::string& text, const Alphabet& alphabet) {
    std::vector<Symmetry> gens;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        size_t semi = line.find(';');
        if (semi == std::string::npos)
            throw ParseError("group line needs 'perm: ...; orientation: ...': " + line);
        std::string perm_part = strip(line.substr(0, semi));
        std::string orient_part = strip(line.substr(semi + 1));
        if (perm_part.rfind("perm:", 0) != 0) throw ParseError("group line must start with 'perm:'");
        if (orient_part.rfind("orientation:", 0) != 0)
            throw ParseError("group line needs an 'orientation:' field");
        std::string orient = strip(orient_part.substr(12));
        Symmetry s;
        if (orient == "antimorphism" || orient == "antimorphic")
            s.antimorphic = true;
        else if (orient == "morphism" || orient == "morphic")
            s.antimorphic = false;
        else
            throw ParseError("unknown orientation '" + orient + "'");
        s.perm.assign(static_cast<size_t>(alphabet.size()), 255);
        std::istringstream pairs(strip(perm_part.substr(5)));
        std::string item;
        while (std::getline(pairs, item, ',')) {
            item = strip(item);
            if (item.empty()) continue;
            size_t arrow = item.find("->");
            if (arrow == std::string::npos) throw ParseError("permutation entry needs '->': " + item);
            int from = alphabet.index(strip(item.substr(0, arrow)));
            int to = alphabet.index(strip(item.substr(arrow + 2)));
            if (s.perm[static_cast<size_t>(from)] != 255)
                throw ParseError("duplicate permutation entry for a letter");
            s.perm[static_cast<size_t>(from)] = static_cast<uint8_t>(to);
        }
        for (size_t i = 0; i < s.perm.size(); ++i)
            if (s.perm[i] == 255) s.perm[i] = static_cast<uint8_t>(i);  // unlisted letters fixed
        gens.push_back(std::move(s));
    }
    if (gens.empty()) throw ParseError("empty group file");
    return closure(std::move(gens), alphabet.size());
}

bool check_invariance(const LanguageIndex& L, const SymmetryGroup& G) {
    for (int n = 1; n <= L.n_max(); ++n) {
        const auto& fs = L.factors(n);
        for (const Symmetry& s : G.elements()) {
            if (s.is_identity_perm() && !s.antimorphic) continue;
            for (const Word& w : fs)
                if (!L.contains(s.apply(w))) return false;
        }
    }
    return true;
}

size_t theta_palindromic_complexity(const LanguageIndex& L, const Symmetry& theta, int n) {
    return theta_palindromes(L, theta, n).size();
}

std::vector<Word> theta_palindromes(const LanguageIndex& L, const Symmetry& theta, int n) {
    if (!theta.antimorphic) throw HypothesisError("palindromic complexity needs an antimorphism");
    std::vector<Word> out;
    for (const Word& w : L.factors(n))
        if (theta.apply(w) == w) out.push_back(w);
    return out;
}

int uniform_recurrence_N(const LanguageIndex& L) {
    int k = L.alphabet().size();
    for (int n = 1; n <= L.n_max(); ++n) {
        bool ok = true;
        for (const Word& w : L.factors(n)) {
            std::set<char> letters(w.begin(), w.end());
            if (static_cast<int>(letters.size()) < k) {
                ok = false;
                break;
            }
        }
        if (ok) return n;
    }
    throw HypothesisError("no length within the horizon has all letters in every factor");
}

int weaker_recurrence_N(const LanguageIndex& L, const SymmetryGroup& G) {
    // Smallest N such that for every n >= N (within the horizon) distinct
    // same-orientation elements differ on every factor of length n.
    // Equivalently: no factor of length >= N is fixed letterwise by a
    // nonidentity permutation arising as a quotient of two group elements.
    std::vector<std::vector<uint8_t>> perms;
    for (const auto& a : G.elements())
        for (const auto& b : G.elements()) {
            if (a.antimorphic != b.antimorphic) continue;
            Symmetry q = a.inverse().compose(b);
            if (!q.is_identity_perm()) perms.push_back(q.perm);
        }
    if (perms.empty()) return 0;  // no distinct same-orientation pairs at all
    // ε is fixed by everything, so N is at least 1.
    int bad_max = 0;
    for (int n = 1; n <= L.n_max(); ++n) {
        for (const Word& w : L.factors(n)) {
            for (const auto& p : perms) {
                bool fixed = true;
                for (char c : w)
                    if (p[static_cast<unsigned char>(c)] != static_cast<uint8_t>(c)) {
                        fixed = false;
                        break;
                    }
                if (fixed) {
                    bad_max = n;
                    break;
                }
            }
            if (bad_max == n) break;
        }
    }
    return bad_max + 1;
}

PalindromeBoundCheck palindrome_bound_check(const LanguageIndex& L, const SymmetryGroup& G,
                                            int n, bool force) {
    if (!G.contains_antimorphism())
        throw HypothesisError("palindrome bound needs an antimorphism in the group");
    if (n < 1 || n > L.n_max() - 1) throw ParseError("order out of range for palindrome bound");
    if (!force && n < uniform_recurrence_N(L))
        throw HypothesisError("order below the uniform recurrence length N");
    PalindromeBoundCheck out;
    for (const Symmetry& theta : G.involutive_antimorphisms())
        out.lhs += theta_palindromic_complexity(L, theta, n) +
                   theta_palindromic_complexity(L, theta, n + 1);
    out.rhs = static_cast<size_t>(L.delta_complexity(n)) + static_cast<size_t>(G.order());
    out.holds = out.lhs <= out.rhs;
    return out;
}

}  // namespace wordsym
