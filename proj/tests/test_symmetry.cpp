#include "doctest.h"

#include "fixtures.hpp"
#include "wordsym/errors.hpp"
#include "wordsym/symmetry.hpp"

#include <vector>

using namespace wordsym;
using fixtures::w;

namespace {

Symmetry anti(std::vector<uint8_t> perm) { return Symmetry{std::move(perm), true}; }
Symmetry morph(std::vector<uint8_t> perm) { return Symmetry{std::move(perm), false}; }

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("action on words") {
    Alphabet a({"0", "1", "2", "3"});
    Symmetry t1 = anti({1, 0, 2, 3});
    Symmetry t2 = anti({0, 1, 3, 2});
    Symmetry rev = anti({0, 1, 2, 3});

    CHECK(a.display(t1.apply(a.parse("01"))) == "01");  // theta1-palindrome
    CHECK(a.display(t1.apply(a.parse("0123"))) == "3201");
    CHECK(a.display(rev.apply(a.parse("0123"))) == "3210");
    CHECK(a.display(t2.apply(a.parse("23"))) == "23");
    CHECK(morph({1, 0, 2, 3}).apply(a.parse("01")) == a.parse("10"));
    CHECK(Symmetry::identity(4).apply(a.parse("0123")) == a.parse("0123"));
}

TEST_CASE("composition and inversion") {
    Symmetry t1 = anti({1, 0, 2, 3});
    Symmetry t2 = anti({0, 1, 3, 2});

    Symmetry c = t1.compose(t2);
    CHECK(!c.antimorphic);  // antimorphism of antimorphism is a morphism
    CHECK(c.perm == std::vector<uint8_t>{1, 0, 3, 2});

    CHECK(t1.compose(t1) == Symmetry::identity(4));  // involutive
    CHECK(t1.inverse() == t1);
    CHECK(c.compose(c.inverse()) == Symmetry::identity(4));

    Alphabet a({"0", "1", "2", "3"});
    Word v = a.parse("0213");
    CHECK(t1.compose(t2).apply(v) == t1.apply(t2.apply(v)));
}

TEST_CASE("group closure") {
    SymmetryGroup g = fixtures::example().group();
    CHECK(g.order() == 4);
    CHECK(g.contains_antimorphism());
    CHECK(g.involutive_antimorphisms().size() == 2);
    CHECK(g.contains(Symmetry::identity(4)));
    CHECK(g.contains(anti({1, 0, 2, 3})));
    CHECK(g.contains(morph({1, 0, 3, 2})));  // theta1 . theta2
    CHECK(!g.contains(anti({0, 1, 2, 3})));  // plain reversal is absent

    SymmetryGroup tm = fixtures::thue_morse().group();
    CHECK(tm.order() == 4);
    CHECK(tm.involutive_antimorphisms().size() == 2);
    CHECK(tm.contains(anti({0, 1})));
    CHECK(tm.contains(morph({1, 0})));
    CHECK(tm.contains(anti({1, 0})));

    CHECK(fixtures::fibonacci().group().order() == 2);
}

TEST_CASE("group parsing") {
    Alphabet a({"0", "1"});
    SymmetryGroup g = SymmetryGroup::parse(
        "# reversal only\n"
        "perm: 0->0,1->1; orientation: antimorphism\n",
        a);
    CHECK(g.order() == 2);

    // unlisted letters stay fixed
    SymmetryGroup h = SymmetryGroup::parse("perm: 0->1,1->0; orientation: morphism\n", a);
    CHECK(h.order() == 2);
    CHECK(h.contains(morph({1, 0})));
    CHECK(!h.contains_antimorphism());

    CHECK_THROWS_AS(SymmetryGroup::parse("", a), ParseError);
    CHECK_THROWS_AS(SymmetryGroup::parse("perm: 0->1,0->0; orientation: morphism\n", a),
                    ParseError);
    CHECK_THROWS_AS(SymmetryGroup::parse("perm: 0->7; orientation: morphism\n", a), ParseError);
    CHECK_THROWS_AS(SymmetryGroup::parse("perm: 0->1,1->0; orientation: sideways\n", a),
                    ParseError);
    // non-injective letter map
    CHECK_THROWS_AS(SymmetryGroup::parse("perm: 0->1,1->1; orientation: morphism\n", a),
                    ParseError);
}

TEST_CASE("group text roundtrip") {
    const auto& s = fixtures::example();
    const Alphabet& a = s.morphism().alphabet();
    SymmetryGroup g = s.group();
    SymmetryGroup again = SymmetryGroup::parse(g.to_text(a), a);
    CHECK(again.order() == g.order());
    for (const Symmetry& e : g.elements()) CHECK(again.contains(e));
}

TEST_CASE("invariance of the corpus languages") {
    CHECK(check_invariance(fixtures::example().language(), fixtures::example().group()));
    CHECK(check_invariance(fixtures::fibonacci().language(), fixtures::fibonacci().group()));
    CHECK(check_invariance(fixtures::thue_morse().language(), fixtures::thue_morse().group()));

    // the fibonacci language contains 00 but not 11: letter swap is not a symmetry
    SymmetryGroup swap = SymmetryGroup::closure({morph({1, 0})}, 2);
    CHECK(!check_invariance(fixtures::fibonacci().language(), swap));
}

TEST_CASE("palindromic complexity tables") {
    const auto& ex = fixtures::example();
    Symmetry t1 = anti({1, 0, 2, 3});
    Symmetry t2 = anti({0, 1, 3, 2});
    for (int n = 0; n <= 30; ++n) {
        CHECK(theta_palindromic_complexity(ex.language(), t1, n) == (n == 0 ? 1 : 2));
        CHECK(theta_palindromic_complexity(ex.language(), t2, n) ==
              (n == 0 ? 1 : (n % 2 == 1 ? 2 : 0)));
    }

    const auto& fib = fixtures::fibonacci();
    Symmetry rev2 = anti({0, 1});
    for (int n = 0; n <= 30; ++n)
        CHECK(theta_palindromic_complexity(fib.language(), rev2, n) ==
              (n % 2 == 0 ? 1 : 2));

    // brute-force oracle tables, n = 0..30
    const auto& tm = fixtures::thue_morse();
    Symmetry psir = anti({1, 0});
    const std::vector<size_t> pr = {1, 2, 2, 2, 2, 0, 4, 0, 4, 0, 4, 0, 4, 0, 2, 0,
                                    2, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4};
    const std::vector<size_t> ppsir = {1, 0, 2, 0, 4, 0, 4, 0, 2, 0, 4, 0, 4, 0, 4, 0,
                                       4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 2, 0, 2, 0, 2};
    for (int n = 0; n <= 30; ++n) {
        CHECK(theta_palindromic_complexity(tm.language(), rev2, n) == pr[static_cast<size_t>(n)]);
        CHECK(theta_palindromic_complexity(tm.language(), psir, n) ==
              ppsir[static_cast<size_t>(n)]);
    }

    CHECK_THROWS_AS(theta_palindromic_complexity(ex.language(), morph({1, 0, 2, 3}), 1),
                    HypothesisError);
}

TEST_CASE("theta palindrome lists") {
    const auto& s = fixtures::example();
    Symmetry t1 = anti({1, 0, 2, 3});
    auto pals = theta_palindromes(s.language(), t1, 2);
    CHECK(pals == std::vector<Word>{w(s, "01"), w(s, "10")});
    for (const Word& p : pals) CHECK(t1.apply(p) == p);
}

TEST_CASE("recurrence thresholds") {
    CHECK(uniform_recurrence_N(fixtures::example().language()) == 11);
    CHECK(uniform_recurrence_N(fixtures::fibonacci().language()) == 3);
    CHECK(uniform_recurrence_N(fixtures::thue_morse().language()) == 3);

    CHECK(weaker_recurrence_N(fixtures::fibonacci().language(), fixtures::fibonacci().group()) ==
          0);
    CHECK(weaker_recurrence_N(fixtures::example().language(), fixtures::example().group()) == 1);
    CHECK(weaker_recurrence_N(fixtures::thue_morse().language(), fixtures::thue_morse().group()) ==
          1);
}

TEST_CASE("palindrome complexity bound") {
    // the palindrome bound holds with equality on all three corpus words
    const auto& ex = fixtures::example();
    for (int n = 11; n <= 30; ++n) {
        auto c = palindrome_bound_check(ex.language(), ex.group(), n);
        CHECK(c.holds);
        CHECK(c.lhs == 6);
        CHECK(c.rhs == 6);
    }
    const auto& fib = fixtures::fibonacci();
    for (int n = 3; n <= 30; ++n) {
        auto c = palindrome_bound_check(fib.language(), fib.group(), n);
        CHECK(c.holds);
        CHECK(c.lhs == 3);
        CHECK(c.rhs == 3);
    }
    const auto& tm = fixtures::thue_morse();
    for (int n = 3; n <= 30; ++n) {
        auto c = palindrome_bound_check(tm.language(), tm.group(), n);
        CHECK(c.holds);
        CHECK(c.lhs == c.rhs);  // tight at every order
    }

    // below the recurrence threshold the check is gated unless forced
    CHECK_THROWS_AS(palindrome_bound_check(ex.language(), ex.group(), 5), HypothesisError);
    auto forced = palindrome_bound_check(ex.language(), ex.group(), 5, true);
    CHECK(forced.lhs == 6);
}

}  // TEST_SUITE
