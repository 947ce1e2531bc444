#include "wordsym/rauzy.hpp"

#include "wordsym/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wordsym {

namespace {

void check_order(const LanguageIndex& L, int n) {
    if (n < 1) throw ParseError("graph order must be at least 1");
    if (n > L.n_max()) throw ParseError("graph order exceeds the indexed horizon");
}

bool is_special(const LanguageIndex& L, const Word& w) {
    const Extensions& e = L.extensions(w);
    return e.left.size() >= 2 || e.right.size() >= 2;
}

}  // namespace

RauzyGraph build_rauzy(const LanguageIndex& L, int n) {
    check_order(L, n);
    RauzyGraph g;
    g.order = n;
    g.vertices = L.factors(n);
    g.edges = L.factors(n + 1);
    return g;
}

RauzyGraph build_rauzy(const LanguageIndex& L, int n, FrequencyEngine& engine) {
    RauzyGraph g = build_rauzy(L, n);
    for (const Word& e : g.edges) g.labels.emplace(e, engine.frequency(e));
    return g;
}

ReducedRauzyGraph reduce(const RauzyGraph& g, const LanguageIndex& L) {
    int n = g.order;
    std::vector<Word> ls = L.left_special(n);
    std::vector<Word> rs = L.right_special(n);
    if (ls.empty() && rs.empty())
        throw HypothesisError("no special factors at this order (periodic word)");

    ReducedRauzyGraph out;
    out.order = n;
    std::set<Word> verts(ls.begin(), ls.end());
    verts.insert(rs.begin(), rs.end());
    out.vertices.assign(verts.begin(), verts.end());

    size_t step_cap = L.factors(n + 1).size() + 1;
    for (const Word& v : out.vertices) {
        for (char a : L.extensions(v).right) {
            Word path = v + Word(1, a);
            size_t steps = 0;
            while (true) {
                Word tail = path.substr(path.size() - static_cast<size_t>(n));
                if (is_special(L, tail)) break;
                const Extensions& e = L.extensions(tail);
                if (e.right.size() != 1)
                    throw InvariantError("non-special vertex without a unique extension");
                path.push_back(*e.right.begin());
                if (++steps > step_cap)
                    throw HypothesisError("simple path does not close; word looks periodic");
            }
            out.edges.push_back(std::move(path));
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

ReducedRauzyGraph reduce(const RauzyGraph& g, const LanguageIndex& L, FrequencyEngine& engine) {
    ReducedRauzyGraph out = reduce(g, L);
    // Interior vertices of a simple path extend uniquely, so every window
    // along it shares one frequency: label with the leading edge of Gamma_n.
    for (const Word& e : out.edges)
        out.labels.emplace(e, engine.frequency(e.substr(0, static_cast<size_t>(out.order) + 1)));
    return out;
}

EdgeCountIdentities edge_count_identities(const ReducedRauzyGraph& g, const LanguageIndex& L) {
    int n = g.order;
    EdgeCountIdentities id;
    id.edges = g.edges.size();
    std::vector<Word> ls = L.left_special(n);
    std::vector<Word> rs = L.right_special(n);
    std::vector<Word> bs = L.bispecial(n);
    id.ls = ls.size();
    id.rs = rs.size();
    id.bs = bs.size();
    id.delta_c = L.delta_complexity(n);
    for (const Word& w : rs) id.rs_rext_sum += L.extensions(w).right.size();
    std::set<Word> rset(rs.begin(), rs.end());
    for (const Word& w : ls)
        if (!rset.count(w)) ++id.ls_not_rs;
    id.eq2_holds = id.edges == id.rs_rext_sum + id.ls_not_rs;
    long long rhs3 = id.delta_c + static_cast<long long>(id.rs) + static_cast<long long>(id.ls) -
                     static_cast<long long>(id.bs);
    id.eq3_holds = static_cast<long long>(id.edges) == rhs3;
    id.eq5_holds = static_cast<long long>(id.edges) <=
                   3 * id.delta_c - static_cast<long long>(id.bs);
    return id;
}

EdgeClassification classify_edges(const ReducedRauzyGraph& g, const SymmetryGroup& G) {
    EdgeClassification out;
    std::set<Word> edge_set(g.edges.begin(), g.edges.end());
    for (const Word& e : g.edges) {
        bool fixed = false;
        for (const Symmetry& s : G.elements()) {
            Word im = s.apply(e);
            if (!edge_set.count(im))
                throw InvariantError("symmetry does not map the reduced graph onto itself");
            if (s.antimorphic && im == e) fixed = true;
        }
        if (fixed)
            ++out.theta_fixed;
        else
            ++out.remainder;
    }
    std::set<Word> seen;
    for (const Word& e : g.edges) {
        if (seen.count(e)) continue;
        std::set<Word> orbit;
        for (const Symmetry& s : G.elements()) orbit.insert(s.apply(e));
        out.orbits.emplace_back(orbit.begin(), orbit.end());
        seen.insert(orbit.begin(), orbit.end());
    }
    return out;
}

ThetaFixedCensus theta_fixed_edge_census(const ReducedRauzyGraph& g, const LanguageIndex& L,
                                         const SymmetryGroup& G) {
    ThetaFixedCensus out;
    EdgeClassification cls = classify_edges(g, G);
    out.a = cls.theta_fixed;
    int n = g.order;
    std::vector<Word> bs = L.bispecial(n);
    long long census = 0;
    for (const Symmetry& theta : G.involutive_antimorphisms()) {
        census += static_cast<long long>(theta_palindromic_complexity(L, theta, n));
        census += static_cast<long long>(theta_palindromic_complexity(L, theta, n + 1));
        for (const Word& b : bs)
            if (theta.apply(b) == b) --census;
    }
    out.census = static_cast<size_t>(census);
    out.matches = out.a == out.census;
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

template <typename Graph>
std::string export_dot_impl(const Graph& g, const Alphabet& alphabet, bool with_labels,
                            const char* name) {
    std::ostringstream os;
    os << "digraph \"" << name << "_" << g.order << "\" {\n";
    os << "  rankdir=\"LR\";\n";
    size_t nn = static_cast<size_t>(g.order);
    for (const Word& v : g.vertices)
        os << "  \"" << dot_escape(alphabet.display(v)) << "\";\n";
    for (const Word& e : g.edges) {
        Word from = e.substr(0, nn);
        Word to = e.substr(e.size() - nn);
        os << "  \"" << dot_escape(alphabet.display(from)) << "\" -> \""
           << dot_escape(alphabet.display(to)) << "\" [word=\""
           << dot_escape(alphabet.display(e)) << "\"";
        if (with_labels) {
            auto it = g.labels.find(e);
            if (it != g.labels.end())
                os << ", label=\"" << dot_escape(it->second.str()) << "\"";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string export_dot(const RauzyGraph& g, const Alphabet& alphabet, bool with_labels) {
    return export_dot_impl(g, alphabet, with_labels, "rauzy");
}

std::string export_dot(const ReducedRauzyGraph& g, const Alphabet& alphabet, bool with_labels) {
    return export_dot_impl(g, alphabet, with_labels, "reduced_rauzy");
}

}  // namespace wordsym
