#include "wordsym/bounds.hpp"

#include "wordsym/errors.hpp"

#include <algorithm>

namespace wordsym {

namespace {

size_t bs_count(const LanguageIndex& L, int n) { return L.bispecial(n).size(); }

bool is_reversal(const Symmetry& s) { return s.antimorphic && s.is_identity_perm(); }

// BS factors of length n fixed by some antimorphism of G (each counted once).
size_t theta_pal_bs_count(const LanguageIndex& L, const SymmetryGroup& G, int n) {
    size_t y = 0;
    for (const Word& b : L.bispecial(n))
        for (const Symmetry& s : G.elements())
            if (s.antimorphic && s.apply(b) == b) {
                ++y;
                break;
            }
    return y;
}

size_t reversal_pal_bs_count(const LanguageIndex& L, int n) {
    size_t y = 0;
    for (const Word& b : L.bispecial(n)) {
        Word r(b.rbegin(), b.rend());
        if (r == b) ++y;
    }
    return y;
}

}  // namespace

std::string applicability_name(Applicability a) {
    switch (a) {
        case Applicability::applicable: return "applicable";
        case Applicability::periodic: return "periodic";
        case Applicability::no_reversal: return "no_reversal";
        case Applicability::not_invariant: return "not_invariant";
        case Applicability::below_N: return "below_N";
        case Applicability::no_antimorphism: return "no_antimorphism";
    }
    return "unknown";
}

Rational boshernitzan_bound(const LanguageIndex& L, int n) {
    long long dc = L.delta_complexity(n);
    if (dc < 1) throw HypothesisError("word is periodic at this order (deltaC = 0)");
    return Rational(3 * dc);
}

Rational reversal_bound(const LanguageIndex& L, const SymmetryGroup& G, int n) {
    bool has_r = false;
    for (const Symmetry& s : G.elements())
        if (is_reversal(s)) has_r = true;
    if (!has_r) throw HypothesisError("reversal bound needs R in the group");
    long long dc = L.delta_complexity(n);
    Rational x(bs_count(L, n));
    Rational y(reversal_pal_bs_count(L, n));
    return Rational(2 * dc + 1) - x / 2 - y / 2;
}

Rational group_bound(const LanguageIndex& L, const SymmetryGroup& G, int n) {
    if (!G.contains_antimorphism())
        throw HypothesisError("group bound needs an antimorphism in the group");
    long long dc = L.delta_complexity(n);
    Rational x(bs_count(L, n));
    Rational y(theta_pal_bs_count(L, G, n));
    return (Rational(4 * dc) + Rational(G.order()) - x - y) / Rational(G.order());
}

bool BoundReport::holds() const {
    Rational d(distinct_count);
    if (boshernitzan.applicable() && d > boshernitzan.value) return false;
    if (reversal.applicable() && d > reversal.value) return false;
    if (group.applicable() && d > group.value) return false;
    return true;
}

BoundEvaluator::BoundEvaluator(const LanguageIndex& L, const SymmetryGroup& G,
                               FrequencyEngine& engine)
    : L_(L), G_(G), engine_(engine) {
    try {
        recurrence_N_ = uniform_recurrence_N(L_);
    } catch (const HypothesisError&) {
        recurrence_N_ = L_.n_max() + 1;  // group bound never certified
    }
    invariant_ = check_invariance(L_, G_);
}

BoundReport BoundEvaluator::evaluate(int n) const {
    if (n < 1 || n > L_.n_max() - 1)
        throw ParseError("order out of range for bound evaluation");
    BoundReport r;
    r.n = n;
    r.complexity = L_.complexity(n);
    r.delta_c = L_.delta_complexity(n);
    r.x = bs_count(L_, n);
    r.y = theta_pal_bs_count(L_, G_, n);
    r.y_reversal = reversal_pal_bs_count(L_, n);

    auto distinct = engine_.distinct_frequencies(n + 1);
    r.distinct_count = distinct.values.size();
    r.false_split_flag = distinct.false_split_flag;
    Rational d(r.distinct_count);

    if (r.delta_c < 1) {
        r.boshernitzan.status = Applicability::periodic;
    } else {
        r.boshernitzan.status = Applicability::applicable;
        r.boshernitzan.value = Rational(3 * r.delta_c);
        r.boshernitzan.attained = d == r.boshernitzan.value;
    }

    bool has_r = false;
    for (const Symmetry& s : G_.elements())
        if (is_reversal(s)) has_r = true;
    if (!has_r) {
        r.reversal.status = Applicability::no_reversal;
    } else {
        r.reversal.value =
            Rational(2 * r.delta_c + 1) - Rational(r.x) / 2 - Rational(r.y_reversal) / 2;
        r.reversal.attained = d == r.reversal.value;
        r.reversal.status = invariant_ ? Applicability::applicable : Applicability::not_invariant;
    }

    if (!G_.contains_antimorphism()) {
        r.group.status = Applicability::no_antimorphism;
    } else {
        r.group.value = (Rational(4 * r.delta_c) + Rational(G_.order()) - Rational(r.x) -
                         Rational(r.y)) /
                        Rational(G_.order());
        r.group.attained = d == r.group.value;
        if (!invariant_)
            r.group.status = Applicability::not_invariant;
        else if (n < recurrence_N_)
            r.group.status = Applicability::below_N;
        else
            r.group.status = Applicability::applicable;
    }
    return r;
}

std::optional<FrequencySetForm> frequency_set_forms(FrequencyEngine& engine, int n) {
    if (engine.mode() != FrequencyMode::exact) return std::nullopt;
    const FieldPtr& F = engine.field();
    // The closed forms are specific to the example word, lambda = 2 + sqrt(3).
    Poly expected{Rational(1), Rational(-4), Rational(1)};
    if (F->minimal_polynomial() != expected) return std::nullopt;

    auto distinct = engine.distinct_frequencies(n + 1);
    std::vector<FieldElement> set;
    for (const auto& fv : distinct.values) set.push_back(*fv.exact);

    FieldElement lam = F->generator();
    FieldElement s3 = lam - F->from_int(2);   // sqrt(3)
    FieldElement s3m1 = s3 - F->one();        // sqrt(3) - 1
    FieldElement half = F->from_rational(Rational(1, 2));
    FieldElement one = F->one();

    auto matches = [&](std::vector<FieldElement> target) {
        std::sort(target.begin(), target.end(), FieldElement::less);
        if (target.size() != set.size()) return false;
        for (size_t i = 0; i < set.size(); ++i)
            if (!(target[i] == set[i])) return false;
        return true;
    };

    for (int k = 0; k <= engine.language().n_max(); ++k) {
        FieldElement p1 = lam.pow(static_cast<unsigned>(k)).inverse() * half;  // 1/(2 lambda^k)
        FieldElement p2 = p1 / lam;   // 1/(2 lambda^{k+1})
        FieldElement p3 = p2 / lam;   // 1/(2 lambda^{k+2})
        if (matches({p2, s3 * p2})) return FrequencySetForm{"1a", k};
        if (matches({p2, s3m1 * p2})) return FrequencySetForm{"1b", k};
        if (matches({s3m1 * p2, p3})) return FrequencySetForm{"1c", k};
        if (matches({s3m1 * p1, p2, s3 * p2})) return FrequencySetForm{"2a", k};
        if (matches({s3 * p2, p2, s3m1 * p2})) return FrequencySetForm{"2b", k};
        if (matches({p2, s3m1 * p2, p3})) return FrequencySetForm{"2c", k};
    }
    return std::nullopt;
}

}  // namespace wordsym
