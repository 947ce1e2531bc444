#include "doctest.h"

#include "fixtures.hpp"
#include "wordsym/errors.hpp"
#include "wordsym/rauzy.hpp"

#include <algorithm>
#include <map>

using namespace wordsym;
using fixtures::w;

TEST_SUITE("rauzy") {

TEST_CASE("graph shapes") {
    auto& fib = fixtures::fibonacci();
    RauzyGraph g1 = build_rauzy(fib.language(), 1);
    CHECK(g1.vertices.size() == 2);
    CHECK(g1.edges.size() == 3);

    auto& ex = fixtures::example();
    RauzyGraph e1 = build_rauzy(ex.language(), 1);
    CHECK(e1.vertices.size() == 4);
    CHECK(e1.edges.size() == 6);
    RauzyGraph e2 = build_rauzy(ex.language(), 2);
    CHECK(e2.vertices.size() == 6);
    CHECK(e2.edges.size() == 8);

    CHECK_THROWS_AS(build_rauzy(ex.language(), 0), ParseError);
    CHECK_THROWS_AS(build_rauzy(ex.language(), ex.language().n_max() + 1), ParseError);
}

TEST_CASE("edges connect overlapping vertices") {
    auto& s = fixtures::thue_morse();
    RauzyGraph g = build_rauzy(s.language(), 4);
    for (const Word& e : g.edges) {
        Word from = e.substr(0, 4);
        Word to = e.substr(1);
        CHECK(std::binary_search(g.vertices.begin(), g.vertices.end(), from));
        CHECK(std::binary_search(g.vertices.begin(), g.vertices.end(), to));
    }
}

TEST_CASE("reduction keeps exactly the special vertices") {
    auto& s = fixtures::example();
    for (int n : {1, 2, 3, 5, 8}) {
        RauzyGraph g = build_rauzy(s.language(), n);
        ReducedRauzyGraph r = reduce(g, s.language());
        std::vector<Word> want = s.language().left_special(n);
        for (const Word& v : s.language().right_special(n)) want.push_back(v);
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CHECK(r.vertices == want);
        // each simple path runs from a right special vertex to a left special one
        for (const Word& e : r.edges) {
            CHECK(e.size() > static_cast<size_t>(n));
            Word from = e.substr(0, static_cast<size_t>(n));
            Word to = e.substr(e.size() - static_cast<size_t>(n));
            CHECK(std::binary_search(r.vertices.begin(), r.vertices.end(), from));
            CHECK(std::binary_search(r.vertices.begin(), r.vertices.end(), to));
        }
    }
}

TEST_CASE("reduced graph of the example word at order 2") {
    auto& s = fixtures::example();
    ReducedRauzyGraph r = reduce(build_rauzy(s.language(), 2, s.engine()), s.language(),
                                 s.engine());
    CHECK(r.vertices == std::vector<Word>{w(s, "01"), w(s, "10")});
    CHECK(r.edges ==
          std::vector<Word>{w(s, "010"), w(s, "01301"), w(s, "101"), w(s, "10210")});
    // a path label is the frequency of its leading length-3 window
    for (const Word& e : r.edges)
        CHECK(*r.labels.at(e).exact == *s.engine().frequency(e.substr(0, 3)).exact);
}

TEST_CASE("contraction preserves the frequency content") {
    auto& s = fixtures::example();
    for (int n : {1, 2, 5}) {
        RauzyGraph g = build_rauzy(s.language(), n, s.engine());
        ReducedRauzyGraph r = reduce(g, s.language(), s.engine());
        // multiset of length-(n+1) windows over all simple paths = edge set of Gamma_n
        std::map<Word, int> windows;
        for (const Word& e : r.edges)
            for (size_t i = 0; i + n + 1 <= e.size(); ++i)
                ++windows[e.substr(i, static_cast<size_t>(n) + 1)];
        CHECK(windows.size() == g.edges.size());
        for (const auto& [word, count] : windows) {
            CHECK(count == 1);
            CHECK(std::binary_search(g.edges.begin(), g.edges.end(), word));
        }
    }
}

TEST_CASE("edge count identities") {
    for (auto* s : {&fixtures::example(), &fixtures::fibonacci(), &fixtures::thue_morse()}) {
        for (int n = 1; n <= 20; ++n) {
            ReducedRauzyGraph r = reduce(build_rauzy(s->language(), n), s->language());
            EdgeCountIdentities id = edge_count_identities(r, s->language());
            CHECK(id.eq2_holds);
            CHECK(id.eq3_holds);
            CHECK(id.eq5_holds);
            CHECK(id.edges == r.edges.size());
        }
    }
}

TEST_CASE("reduced edge counts for the example word") {
    auto& s = fixtures::example();
    // deltaC = 2 and LS = RS = 2 at every order; BS present only at special orders
    for (int n : {1, 2, 5, 9, 13}) {
        EdgeCountIdentities id =
            edge_count_identities(reduce(build_rauzy(s.language(), n), s.language()),
                                  s.language());
        CHECK(id.bs == 2);
        CHECK(id.edges == 4);  // deltaC + LS + RS - BS = 2 + 2 + 2 - 2
    }
    for (int n : {3, 4, 6, 7}) {
        EdgeCountIdentities id =
            edge_count_identities(reduce(build_rauzy(s.language(), n), s.language()),
                                  s.language());
        CHECK(id.bs == 0);
        CHECK(id.edges == 6);
    }
}

TEST_CASE("symmetry action on reduced edges") {
    auto& s = fixtures::example();
    ReducedRauzyGraph r = reduce(build_rauzy(s.language(), 1), s.language());
    EdgeClassification cls = classify_edges(r, s.group());
    CHECK(cls.theta_fixed == 4);  // 01, 10, 021, 130 are all theta1-fixed
    CHECK(cls.remainder == 0);
    CHECK(cls.orbits.size() == 2);  // {01,10} and {021,130} under the full group
    for (const auto& orbit : cls.orbits) CHECK(orbit.size() == 2);
}

TEST_CASE("theta-fixed census identity") {
    auto& ex = fixtures::example();
    for (int n = 1; n <= 15; ++n) {
        ReducedRauzyGraph r = reduce(build_rauzy(ex.language(), n), ex.language());
        ThetaFixedCensus c = theta_fixed_edge_census(r, ex.language(), ex.group());
        CHECK(c.matches);
        CHECK(c.census == (ex.language().bispecial(n).empty() ? 6u : 4u));
    }
    auto& fib = fixtures::fibonacci();
    for (int n = 1; n <= 15; ++n) {
        ReducedRauzyGraph r = reduce(build_rauzy(fib.language(), n), fib.language());
        ThetaFixedCensus c = theta_fixed_edge_census(r, fib.language(), fib.group());
        CHECK(c.matches);
        CHECK(c.census == (fib.language().bispecial(n).empty() ? 3u : 2u));
    }
    auto& tm = fixtures::thue_morse();
    for (int n = 1; n <= 15; ++n) {
        ReducedRauzyGraph r = reduce(build_rauzy(tm.language(), n), tm.language());
        CHECK(theta_fixed_edge_census(r, tm.language(), tm.group()).matches);
    }
}

TEST_CASE("dot export is deterministic") {
    auto& fib = fixtures::fibonacci();
    RauzyGraph g = build_rauzy(fib.language(), 1, fib.engine());
    std::string labeled = export_dot(g, fib.morphism().alphabet(), true);
    CHECK(labeled ==
          "digraph \"rauzy_1\" {\n"
          "  rankdir=\"LR\";\n"
          "  \"0\";\n"
          "  \"1\";\n"
          "  \"0\" -> \"0\" [word=\"00\", label=\"sqrt(5) - 2\"];\n"
          "  \"0\" -> \"1\" [word=\"01\", label=\"(3 - sqrt(5))/2\"];\n"
          "  \"1\" -> \"0\" [word=\"10\", label=\"(3 - sqrt(5))/2\"];\n"
          "}\n");
    CHECK(export_dot(g, fib.morphism().alphabet(), true) == labeled);

    std::string bare = export_dot(build_rauzy(fib.language(), 1), fib.morphism().alphabet(),
                                  false);
    CHECK(bare.find("label=") == std::string::npos);
    CHECK(bare.find("[word=\"00\"]") != std::string::npos);
}

TEST_CASE("reduction needs a special vertex") {
    // periodic-style language with no special factors is rejected upstream,
    // so emulate by asking for a reduction where specials exist but the walk
    // is cycle-guarded: all corpus graphs reduce fine up to the horizon.
    auto& s = fixtures::thue_morse();
    for (int n = 1; n <= 20; ++n)
        CHECK_NOTHROW(reduce(build_rauzy(s.language(), n), s.language()));
}

}  // TEST_SUITE
