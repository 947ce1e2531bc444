// Acceptance battery. Each criterion prints exactly one PASS/FAIL line;
// the exit code is the number of failing criteria.
//
// Usage: acceptance [--criterion K]   (no argument runs all ten)

#include "wordsym/analysis.hpp"
#include "wordsym/errors.hpp"
#include "wordsym/rauzy.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace wordsym;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& what) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

AnalysisSession& session(const std::string& name, int n_max) {
    static std::map<std::string, std::unique_ptr<AnalysisSession>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        AnalysisConfig cfg;
        cfg.word_name = name;
        cfg.n_max = n_max;
        it = cache.emplace(name, std::make_unique<AnalysisSession>(cfg)).first;
    }
    return *it->second;
}

AnalysisSession& example() { return session("example", 61); }
AnalysisSession& fibonacci() { return session("fibonacci", 32); }
AnalysisSession& thue_morse() { return session("thue_morse", 32); }

// Occurrence counts of every length-n window in one sweep.
std::map<Word, long long> window_counts(const Word& text, int n) {
    std::map<Word, long long> counts;
    if (n < 1 || text.size() < static_cast<size_t>(n)) return counts;
    for (size_t i = 0; i + n <= text.size(); ++i)
        ++counts[text.substr(i, static_cast<size_t>(n))];
    return counts;
}

std::string list_orders(const std::vector<int>& ns) {
    std::ostringstream os;
    for (size_t i = 0; i < ns.size() && i < 8; ++i) os << (i ? "," : "") << ns[i];
    if (ns.size() > 8) os << ",...";
    return os.str();
}

// 1. deltaC(n) = 2 for 1 <= n <= 60 and C(1) = 4 on the example word.
Outcome criterion1() {
    Outcome out;
    auto& L = example().language();
    if (L.complexity(1) != 4) out.fail("C(1) != 4");
    std::vector<int> bad;
    for (int n = 1; n <= 60; ++n)
        if (L.delta_complexity(n) != 2) bad.push_back(n);
    if (!bad.empty()) out.fail("deltaC != 2 at n = " + list_orders(bad));
    return out;
}

// 2. lambda = 2 + sqrt(3) with minimal polynomial x^2 - 4x + 1; letter
//    frequencies ((sqrt(3)-1)/2, ..., (2-sqrt(3))/2) exactly.
Outcome criterion2() {
    Outcome out;
    auto& s = example();
    const FieldPtr& F = s.engine().field();
    Poly expected{Rational(1), Rational(-4), Rational(1)};
    if (F->minimal_polynomial() != expected)
        out.fail("minimal polynomial is " + F->minpoly_string());
    const FieldElement& lam = s.engine().lambda();
    if (std::abs(lam.to_long_double() - 3.732050807568877293L) > 1e-15L)
        out.fail("lambda embeds to " + std::to_string(static_cast<double>(lam.to_long_double())));

    FieldElement s3 = lam - F->from_int(2);
    FieldElement half = F->from_rational(Rational(1, 2));
    FieldElement freq01 = (s3 - F->one()) * half;
    FieldElement freq23 = (F->from_int(2) - s3) * half;
    const Alphabet& a = s.morphism().alphabet();
    for (int i = 0; i < 4; ++i) {
        FieldElement want = i < 2 ? freq01 : freq23;
        FrequencyValue got = s.engine().frequency(a.parse(a.letter(i)));
        if (!(*got.exact == want))
            out.fail("rho(" + a.letter(i) + ") = " + got.str());
    }
    return out;
}

// 3. distinct = (4 deltaC + 4 - X - Y)/4 for 1 <= n <= 40; 2 at BS orders, 3 otherwise.
Outcome criterion3() {
    Outcome out;
    auto& s = example();
    std::vector<int> bad_formula, bad_value;
    for (int n = 1; n <= 40; ++n) {
        BoundReport r = s.report(n);
        Rational formula =
            (Rational(4 * r.delta_c + 4) - Rational(r.x) - Rational(r.y)) / 4;
        if (Rational(r.distinct_count) != formula) bad_formula.push_back(n);
        bool bs = !s.language().bispecial(n).empty();
        if (r.distinct_count != (bs ? 2u : 3u)) bad_value.push_back(n);
    }
    if (!bad_formula.empty()) out.fail("formula off at n = " + list_orders(bad_formula));
    if (!bad_value.empty()) out.fail("count off at n = " + list_orders(bad_value));
    return out;
}

// 4. Closed-form frequencies from the order-1, 2, 5 reduced graphs.
Outcome criterion4() {
    Outcome out;
    auto& s = example();
    const FieldPtr& F = s.engine().field();
    const Alphabet& a = s.morphism().alphabet();
    FieldElement lam = s.engine().lambda();
    FieldElement s3 = lam - F->from_int(2);
    FieldElement inv2lam = (F->from_int(2) * lam).inverse();

    auto check = [&](const std::string& w, const FieldElement& want) {
        FrequencyValue got = s.engine().frequency(a.parse(w));
        if (!(*got.exact == want)) out.fail("rho(" + w + ") = " + got.str());
    };
    check("01", s3 * inv2lam);
    check("130", inv2lam);
    check("010", (s3 - F->one()) * inv2lam);
    check("01301", inv2lam);
    check("01301301", inv2lam / lam);
    return out;
}

// 5. rho(phi(w) p) = rho(w)/lambda for every BS factor w with |phi(w) p| <= 40.
Outcome criterion5() {
    Outcome out;
    auto& s = example();
    const Alphabet& a = s.morphism().alphabet();
    Word p02 = a.parse("10210");
    Word p13 = a.parse("01301");
    FieldElement lam = s.engine().lambda();
    int checked = 0;
    for (int n = 1; n <= 11; ++n) {
        for (const Word& w : s.language().bispecial(n)) {
            Word image = s.morphism().apply(w);
            char last = w.back();
            const Word& p = (last == 1 || last == 3) ? p13 : p02;
            Word v = image + p;
            if (v.size() > 40) continue;
            ++checked;
            if (!s.language().contains(v)) {
                out.fail(a.display(v) + " not a factor");
                continue;
            }
            FieldElement want = *s.engine().frequency(w).exact / lam;
            if (!(*s.engine().frequency(v).exact == want))
                out.fail("rho(" + a.display(v) + ") != rho(" + a.display(w) + ")/lambda");
        }
    }
    if (checked != 8) out.fail("expected 8 scaling pairs, saw " + std::to_string(checked));
    return out;
}

// 6. Palindromic complexity bound with rhs = deltaC(n) + 4 from the uniform
//    recurrence threshold up to n = 40.
Outcome criterion6() {
    Outcome out;
    auto& s = example();
    int N = uniform_recurrence_N(s.language());
    std::vector<int> bad;
    for (int n = N; n <= 40; ++n) {
        PalindromeBoundCheck c = palindrome_bound_check(s.language(), s.group(), n);
        if (!c.holds || c.rhs != static_cast<size_t>(s.language().delta_complexity(n) + 4))
            bad.push_back(n);
    }
    if (!bad.empty()) out.fail("violated at n = " + list_orders(bad));
    return out;
}

// 7. Thue-Morse: distinct = 1 at BS orders, 2 otherwise, for 1 <= n <= 30;
//    the group bound lands in {2,4} at BS orders, {3,5} otherwise, never attained.
Outcome criterion7() {
    Outcome out;
    auto& s = thue_morse();
    std::vector<int> bad_distinct, bad_value, attained;
    for (int n = 1; n <= 30; ++n) {
        BoundReport r = s.report(n);
        bool bs = !s.language().bispecial(n).empty();
        if (r.distinct_count != (bs ? 1u : 2u)) bad_distinct.push_back(n);
        bool in_set = bs ? (r.group.value == Rational(2) || r.group.value == Rational(4))
                         : (r.group.value == Rational(3) || r.group.value == Rational(5));
        if (!in_set) bad_value.push_back(n);
        if (r.group.attained) attained.push_back(n);
    }
    if (!bad_distinct.empty())
        out.fail("distinct count deviates at n = " + list_orders(bad_distinct));
    if (!bad_value.empty()) out.fail("bound value off at n = " + list_orders(bad_value));
    if (!attained.empty()) out.fail("bound attained at n = " + list_orders(attained));
    return out;
}

// 8. Fibonacci with {Id, R}: distinct <= 3 = 3 deltaC and distinct equals
//    2 deltaC + 1 - X/2 - Y/2 for 1 <= n <= 30.
Outcome criterion8() {
    Outcome out;
    auto& s = fibonacci();
    std::vector<int> bad_bosh, bad_rev;
    for (int n = 1; n <= 30; ++n) {
        BoundReport r = s.report(n);
        if (r.distinct_count > 3 || Rational(3 * r.delta_c) != Rational(3))
            bad_bosh.push_back(n);
        Rational rev = Rational(2 * r.delta_c + 1) - Rational(r.x) / 2 -
                       Rational(r.y_reversal) / 2;
        if (Rational(r.distinct_count) != rev) bad_rev.push_back(n);
    }
    if (!bad_bosh.empty()) out.fail("3 deltaC side off at n = " + list_orders(bad_bosh));
    if (!bad_rev.empty()) out.fail("bound not met with equality at n = " + list_orders(bad_rev));
    return out;
}

// 9. Kirchhoff, normalization, symmetry invariance, edge-count identities,
//    and empirical agreement on all three corpus words.
Outcome criterion9() {
    Outcome out;
    for (AnalysisSession* sp : {&example(), &fibonacci(), &thue_morse()}) {
        AnalysisSession& s = *sp;
        auto& L = s.language();
        auto& eng = s.engine();
        const FieldPtr& F = eng.field();
        const std::string tag = s.name() + ": ";

        for (int n = 1; n <= 30; ++n) {
            Word witness;
            if (!eng.kirchhoff_check(n, &witness)) {
                out.fail(tag + "kirchhoff fails at n = " + std::to_string(n));
                break;
            }
        }
        for (int n = 1; n <= 30; ++n) {
            FieldElement sum = F->zero();
            for (const Word& w : L.factors(n)) sum = sum + *eng.frequency(w).exact;
            if (!(sum == F->one())) {
                out.fail(tag + "sum rho != 1 at n = " + std::to_string(n));
                break;
            }
        }
        {
            bool ok = true;
            for (int n = 1; n <= 30 && ok; ++n)
                for (const Word& w : L.factors(n)) {
                    for (const Symmetry& theta : s.group().elements())
                        if (!(*eng.frequency(theta.apply(w)).exact == *eng.frequency(w).exact)) {
                            out.fail(tag + "symmetry breaks frequency at n = " +
                                     std::to_string(n));
                            ok = false;
                            break;
                        }
                    if (!ok) break;
                }
        }
        for (int n = 1; n <= 30; ++n) {
            long long rext = 0, lext = 0;
            for (const Word& w : L.right_special(n))
                rext += static_cast<long long>(L.extensions(w).right.size()) - 1;
            for (const Word& w : L.left_special(n))
                lext += static_cast<long long>(L.extensions(w).left.size()) - 1;
            long long dc = L.delta_complexity(n);
            if (rext != dc || lext != dc) {
                out.fail(tag + "extension identity fails at n = " + std::to_string(n));
                break;
            }
        }
        for (int n = 1; n <= 30; ++n) {
            auto ids = edge_count_identities(reduce(build_rauzy(L, n), L), L);
            if (!ids.eq2_holds || !ids.eq3_holds) {
                out.fail(tag + "edge-count identity fails at n = " + std::to_string(n));
                break;
            }
        }
        {
            Word prefix = s.morphism().fixed_point_prefix(s.seed(), 1000000);
            bool ok = true;
            for (int n = 1; n <= 12 && ok; ++n) {
                auto counts = window_counts(prefix, n);
                long double windows =
                    static_cast<long double>(prefix.size()) - n + 1;
                for (const Word& w : L.factors(n)) {
                    long double emp = static_cast<long double>(counts[w]) / windows;
                    if (std::abs(emp - eng.frequency(w).value()) > 1e-3L) {
                        out.fail(tag + "empirical gap at n = " + std::to_string(n));
                        ok = false;
                        break;
                    }
                }
            }
        }
    }
    return out;
}

// 10. Frequencies match an independent extrapolated estimator built from
//     occurrence counts on phi^k and phi^{k+1} prefixes.
Outcome criterion10() {
    Outcome out;
    for (AnalysisSession* sp : {&example(), &fibonacci(), &thue_morse()}) {
        AnalysisSession& s = *sp;
        const Morphism& phi = s.morphism();
        Word pk(1, static_cast<char>(s.seed()));
        while (pk.size() < 1000000) pk = phi.apply(pk);
        Word pk1 = phi.apply(pk);
        long double lam = static_cast<long double>(pk1.size()) / pk.size();

        bool ok = true;
        for (int n = 1; n <= 10 && ok; ++n) {
            auto ck = window_counts(pk, n);
            auto ck1 = window_counts(pk1, n);
            long double wk = static_cast<long double>(pk.size()) - n + 1;
            long double wk1 = static_cast<long double>(pk1.size()) - n + 1;
            for (const Word& w : s.language().factors(n)) {
                long double ek = static_cast<long double>(ck[w]) / wk;
                long double ek1 = static_cast<long double>(ck1[w]) / wk1;
                long double est = (lam * ek1 - ek) / (lam - 1);
                if (std::abs(est - s.engine().frequency(w).value()) > 1e-4L) {
                    out.fail(s.name() + ": estimator gap at n = " + std::to_string(n));
                    ok = false;
                    break;
                }
            }
        }
    }
    return out;
}

struct Criterion {
    int id;
    const char* label;
    Outcome (*run)();
};

const Criterion criteria[] = {
    {1, "example word: deltaC = 2 through n = 60, C(1) = 4", criterion1},
    {2, "example word: eigenvalue and letter frequencies in Q(sqrt(3))", criterion2},
    {3, "example word: distinct counts match the group bound exactly", criterion3},
    {4, "example word: closed-form factor frequencies", criterion4},
    {5, "example word: bispecial scaling rho(phi(w)p) = rho(w)/lambda", criterion5},
    {6, "example word: palindromic complexity bound, rhs = deltaC + 4", criterion6},
    {7, "thue-morse: distinct counts and never-attained bound", criterion7},
    {8, "fibonacci: reversal-closed bound met with equality", criterion8},
    {9, "all words: kirchhoff, normalization, symmetry, edge counts, empirical", criterion9},
    {10, "all words: independent extrapolated frequency estimator", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
            if (only < 1 || only > 10) {
                std::cerr << "criterion must be 1..10\n";
                return 2;
            }
        } else {
            std::cerr << "usage: acceptance [--criterion K]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only && c.id != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (o.pass) {
            std::cout << "PASS criterion " << c.id << ": " << c.label << "\n";
        } else {
            std::cout << "FAIL criterion " << c.id << ": " << c.label << " (" << o.detail
                      << ")\n";
            ++failures;
        }
    }
    return failures;
}
