#include "wordsym/analysis.hpp"

#include "wordsym/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace wordsym {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << content;
}

AnalysisSession::AnalysisSession(const AnalysisConfig& cfg) : cfg_(cfg) {
    if (cfg_.n_max < 1) throw ParseError("n_max must be at least 1");
    if (cfg_.tolerance <= 0) throw ParseError("tolerance must be positive");

    if (!cfg_.word_name.empty()) {
        CorpusWord w = load_corpus_word(cfg_.word_name);
        name_ = cfg_.word_name;
        phi_ = std::make_unique<Morphism>(std::move(w.morphism));
        group_ = std::move(w.group);
        seed_ = w.seed;
    } else {
        std::string morphism_text = cfg_.morphism_text;
        if (morphism_text.empty()) {
            if (cfg_.morphism_path.empty())
                throw ParseError("either a corpus word or a morphism is required");
            morphism_text = read_text_file(cfg_.morphism_path);
            name_ = std::filesystem::path(cfg_.morphism_path).stem().string();
        } else {
            name_ = "custom";
        }
        phi_ = std::make_unique<Morphism>(Morphism::parse(morphism_text));
        std::string group_text = cfg_.group_text;
        if (group_text.empty() && !cfg_.group_path.empty())
            group_text = read_text_file(cfg_.group_path);
        if (!group_text.empty())
            group_ = SymmetryGroup::parse(group_text, phi_->alphabet());
        else
            group_ = SymmetryGroup::closure({Symmetry::identity(phi_->alphabet_size())},
                                            phi_->alphabet_size());
        seed_ = -1;
    }
    if (!cfg_.seed_letter.empty()) seed_ = phi_->alphabet().index(cfg_.seed_letter);
    if (seed_ < 0) {
        auto seeds = phi_->fixed_point_seeds();
        if (seeds.empty())
            throw HypothesisError("morphism has no prolongable letter; pass --seed");
        seed_ = seeds.front();
    }
    L_ = std::make_unique<LanguageIndex>(*phi_, seed_, cfg_.n_max);
    engine_ = std::make_unique<FrequencyEngine>(*phi_, *L_, cfg_.mode);
    evaluator_ = std::make_unique<BoundEvaluator>(*L_, group_, *engine_);
}

std::vector<BoundReport> AnalysisSession::reports(int n_lo, int n_hi) const {
    std::vector<BoundReport> out;
    for (int n = n_lo; n <= n_hi; ++n) out.push_back(evaluator_->evaluate(n));
    return out;
}

namespace {

json bound_to_json(const BoundValue& b) {
    json j;
    j["status"] = applicability_name(b.status);
    if (b.status != Applicability::no_reversal && b.status != Applicability::no_antimorphism &&
        b.status != Applicability::periodic) {
        j["value"] = to_string(b.value);
        j["attained"] = b.attained;
    }
    return j;
}

std::string csv_bound(const BoundValue& b) {
    if (b.status == Applicability::no_reversal || b.status == Applicability::no_antimorphism ||
        b.status == Applicability::periodic)
        return "na";
    return to_string(b.value);
}

// Tightest applicable bound, if any.
// Tightest bound with a meaningful value; below-N values count (the formula is
// still evaluated there), hypothesis failures do not.
std::optional<Rational> tightest(const BoundReport& r) {
    std::optional<Rational> best;
    for (const BoundValue* b : {&r.boshernitzan, &r.reversal, &r.group}) {
        bool has_value = b->applicable() || b->status == Applicability::below_N;
        if (has_value && (!best || b->value < *best)) best = b->value;
    }
    return best;
}

}  // namespace

std::string AnalysisSession::report_json(int n_lo, int n_hi) {
    json rows = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        BoundReport r = evaluator_->evaluate(n);
        json row;
        row["word"] = name_;
        row["n"] = n;
        row["complexity"] = r.complexity;
        row["delta_c"] = r.delta_c;

        json special;
        auto names = [&](const std::vector<Word>& ws) {
            json arr = json::array();
            for (const Word& w : ws) arr.push_back(phi_->alphabet().display(w));
            return arr;
        };
        special["ls"] = names(L_->left_special(n));
        special["rs"] = names(L_->right_special(n));
        special["bs"] = names(L_->bispecial(n));
        row["special"] = special;

        json pal;
        for (const Symmetry& theta : group_.involutive_antimorphisms())
            pal[theta.to_text(phi_->alphabet())] = theta_palindromic_complexity(*L_, theta, n);
        row["palindromes"] = pal;

        json freqs;
        for (const Word& w : L_->factors(n))
            freqs[phi_->alphabet().display(w)] = engine_->frequency(w).str();
        row["frequencies"] = freqs;

        json bounds;
        bounds["distinct"] = r.distinct_count;
        bounds["x"] = r.x;
        bounds["y"] = r.y;
        bounds["y_reversal"] = r.y_reversal;
        bounds["boshernitzan"] = bound_to_json(r.boshernitzan);
        bounds["reversal"] = bound_to_json(r.reversal);
        bounds["group"] = bound_to_json(r.group);
        row["bounds"] = bounds;

        json verdicts;
        verdicts["holds"] = r.holds();
        verdicts["false_split"] = r.false_split_flag;
        auto t = tightest(r);
        verdicts["attained"] = t && Rational(r.distinct_count) == *t;
        row["verdicts"] = verdicts;
        rows.push_back(std::move(row));
    }
    json top;
    top["word"] = name_;
    top["mode"] = cfg_.mode == FrequencyMode::exact ? "exact" : "approx";
    top["n_max"] = cfg_.n_max;
    top["recurrence_N"] = evaluator_->recurrence_N();
    top["invariant"] = evaluator_->invariant();
    top["rows"] = std::move(rows);
    return top.dump(2) + "\n";
}

std::string AnalysisSession::report_csv(int n_lo, int n_hi) const {
    std::ostringstream os;
    os << "n,C,deltaC,X,Y,distinct,b_bosh,b_rev,b_group,attained\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        BoundReport r = evaluator_->evaluate(n);
        auto t = tightest(r);
        bool attained = t && Rational(r.distinct_count) == *t;
        os << n << "," << r.complexity << "," << r.delta_c << "," << r.x << "," << r.y << ","
           << r.distinct_count << "," << csv_bound(r.boshernitzan) << "," << csv_bound(r.reversal)
           << "," << csv_bound(r.group) << "," << (attained ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string AnalysisSession::freq_table(int n) {
    if (n < 0 || n > cfg_.n_max) throw ParseError("length out of range");
    std::ostringstream os;
    os << "factor\tfrequency\tempirical\n";
    if (n == 0) {
        os << "ε\t1\t1\n";
        return os.str();
    }
    Word prefix = phi_->fixed_point_prefix(seed_, cfg_.prefix_floor);
    long double windows = static_cast<long double>(prefix.size() - static_cast<size_t>(n) + 1);
    for (const Word& w : L_->factors(n)) {
        long double emp = static_cast<long double>(occurrences(w, prefix).size()) / windows;
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.9Lg", emp);
        os << phi_->alphabet().display(w) << "\t" << engine_->frequency(w).str() << "\t" << buf
           << "\n";
    }
    return os.str();
}

std::vector<AnalysisSession::Verdict> AnalysisSession::verify(int verify_n_max) {
    std::vector<Verdict> out;
    int cap = std::min(verify_n_max, cfg_.n_max - 1);
    const Alphabet& ab = phi_->alphabet();
    auto add = [&](const std::string& check, bool pass, std::string detail = "") {
        out.push_back({check, pass, std::move(detail)});
    };

    // Language identities.
    {
        bool eq1 = true, eq4 = true, closure = true;
        std::string detail;
        for (int n = 0; n <= cap && eq1; ++n) {
            long long rext = 0, lext = 0;
            for (const Word& w : L_->factors(n)) {
                rext += static_cast<long long>(L_->extensions(w).right.size()) - 1;
                lext += static_cast<long long>(L_->extensions(w).left.size()) - 1;
            }
            long long dc = L_->delta_complexity(n);
            if (rext != dc || lext != dc) {
                eq1 = false;
                detail = "n=" + std::to_string(n);
            }
            if (n >= 1) {
                if (static_cast<long long>(L_->right_special(n).size()) > dc ||
                    static_cast<long long>(L_->left_special(n).size()) > dc)
                    eq4 = false;
            }
        }
        for (int n = 1; n <= cap && closure; ++n)
            for (const Word& w : L_->factors(n + 1))
                if (!L_->contains(w.substr(0, w.size() - 1)) || !L_->contains(w.substr(1))) {
                    closure = false;
                    break;
                }
        add("eq1_extension_sums", eq1, detail);
        add("eq4_special_bounds", eq4);
        add("downward_closure", closure && L_->complexity(0) == 1);
        bool recur = true;
        for (int n = 1; n <= cap && recur; ++n)
            for (const Word& w : L_->factors(n))
                if (occurrences(w, L_->prefix()).size() < 2) {
                    recur = false;
                    break;
                }
        add("recurrence_witness", recur);
        bool aperiodic = true;
        for (int n = 1; n <= cap; ++n)
            if (L_->delta_complexity(n) < 1) aperiodic = false;
        add("aperiodicity_witness", aperiodic, aperiodic ? "" : "deltaC hit 0; bounds are gated");
    }

    // Symmetry properties.
    {
        std::mt19937 rng(20240811u);
        bool length_ok = true, occ_ok = true;
        for (int trial = 0; trial < 64; ++trial) {
            int nv = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, cap)));
            const auto& fs = L_->factors(nv);
            const Word& v = fs[rng() % fs.size()];
            int nw = 1 + static_cast<int>(rng() % static_cast<unsigned>(nv));
            const auto& ws = L_->factors(nw);
            const Word& w = ws[rng() % ws.size()];
            for (const Symmetry& s : group_.elements()) {
                if (s.apply(w).size() != w.size()) length_ok = false;
                if (occurrences(w, v).size() != occurrences(s.apply(w), s.apply(v)).size())
                    occ_ok = false;
            }
        }
        add("symmetry_length_preservation", length_ok);
        add("symmetry_occurrence_counts", occ_ok);

        bool orient = true;
        for (const Symmetry& a : group_.elements())
            for (const Symmetry& b : group_.elements())
                if (a.compose(b).antimorphic != (a.antimorphic != b.antimorphic)) orient = false;
        if (group_.contains_antimorphism() && group_.order() % 2 != 0) orient = false;
        add("orientation_algebra", orient);

        add("group_invariance", evaluator_->invariant());

        int N = evaluator_->recurrence_N();
        bool inject = true;
        if (N <= cap) {
            for (int n = N; n <= cap; ++n)
                for (const Word& w : L_->factors(n))
                    for (size_t i = 0; i < group_.elements().size() && inject; ++i)
                        for (size_t j = i + 1; j < group_.elements().size(); ++j) {
                            const Symmetry& a = group_.elements()[i];
                            const Symmetry& b = group_.elements()[j];
                            if (a.antimorphic != b.antimorphic) continue;
                            if (a.apply(w) == b.apply(w)) {
                                inject = false;
                                break;
                            }
                        }
        }
        add("injectivity_beyond_N", inject, "N=" + std::to_string(N));

        bool pal_bound = true;
        std::string detail;
        if (group_.contains_antimorphism()) {
            for (int n = N; n <= cap; ++n) {
                auto c = palindrome_bound_check(*L_, group_, n);
                if (!c.holds) {
                    pal_bound = false;
                    detail = "n=" + std::to_string(n);
                    break;
                }
            }
        } else {
            detail = "no antimorphism; not applicable";
        }
        add("palindrome_complexity_bound", pal_bound, detail);
    }

    // Frequency properties.
    {
        bool kirchhoff = true, norm = true, sym_pres = true;
        std::string detail;
        for (int n = 1; n <= cap && kirchhoff; ++n) {
            Word witness;
            if (!engine_->kirchhoff_check(n, &witness)) {
                kirchhoff = false;
                detail = "n=" + std::to_string(n) + " w=" + ab.display(witness);
            }
        }
        add("kirchhoff", kirchhoff, detail);
        for (int n = 1; n <= cap + 1 && norm; ++n) {
            if (engine_->mode() == FrequencyMode::exact) {
                FieldElement sum = engine_->field()->zero();
                for (const Word& w : L_->factors(n)) sum = sum + *engine_->frequency(w).exact;
                if (!(sum == engine_->field()->one())) norm = false;
            } else {
                long double sum = 0;
                for (const Word& w : L_->factors(n)) sum += engine_->frequency(w).approx;
                if (!approx_equal(sum, 1.0L, 1e-7L)) norm = false;
            }
        }
        add("normalization", norm);
        for (int n = 1; n <= cap && sym_pres; ++n)
            for (const Word& w : L_->factors(n))
                for (const Symmetry& s : group_.elements()) {
                    Word im = s.apply(w);
                    if (!L_->contains(im)) continue;  // reported by group_invariance
                    if (engine_->mode() == FrequencyMode::exact) {
                        if (!(*engine_->frequency(w).exact == *engine_->frequency(im).exact)) {
                            sym_pres = false;
                            break;
                        }
                    } else if (!approx_equal(engine_->frequency(w).approx,
                                             engine_->frequency(im).approx)) {
                        sym_pres = false;
                        break;
                    }
                }
        add("frequency_symmetry_invariance", sym_pres);

        // Frid consistency, recomputed from scratch at every length.
        bool frid = true;
        std::string fdetail;
        const Morphism& psi = engine_->normalized_morphism();
        for (int n = 3; n <= cap && frid; ++n)
            for (const Word& v : L_->factors(n)) {
                auto interp = interpretations(psi, *L_, v);
                if (engine_->mode() == FrequencyMode::exact) {
                    FieldElement sum = engine_->field()->zero();
                    for (const auto& s : interp) sum = sum + *engine_->frequency(s.ancestor).exact;
                    FieldElement lhs =
                        *engine_->frequency(v).exact *
                        engine_->lambda().pow(static_cast<unsigned>(engine_->normalization_power()));
                    if (!(lhs == sum)) {
                        frid = false;
                        fdetail = "v=" + ab.display(v);
                        break;
                    }
                } else {
                    long double sum = 0;
                    for (const auto& s : interp) sum += engine_->frequency(s.ancestor).approx;
                    long double lamt = std::pow(engine_->lambda_approx(),
                                                static_cast<long double>(engine_->normalization_power()));
                    if (!approx_equal(engine_->frequency(v).approx * lamt, sum, 1e-7L)) {
                        frid = false;
                        fdetail = "v=" + ab.display(v);
                        break;
                    }
                }
            }
        add("frid_consistency", frid, fdetail);

        // Aperiodic case: extensions are forced until both sides branch, so a
        // factor's frequency equals that of its shortest bispecial extension.
        bool bs_prop = true;
        std::string bdetail;
        for (int n = 1; n <= cap && bs_prop; ++n)
            for (const Word& w : L_->factors(n)) {
                Word bs;
                if (!L_->shortest_bispecial_containing(w, bs)) continue;
                if (bs == w) continue;
                if (engine_->mode() == FrequencyMode::exact) {
                    if (!(*engine_->frequency(w).exact == *engine_->frequency(bs).exact)) {
                        bs_prop = false;
                        bdetail = "w=" + ab.display(w);
                        break;
                    }
                } else if (!approx_equal(engine_->frequency(w).approx,
                                         engine_->frequency(bs).approx)) {
                    bs_prop = false;
                    bdetail = "w=" + ab.display(w);
                    break;
                }
            }
        add("bs_propagation", bs_prop, bdetail);

        // Letter frequencies against a long prefix.
        Word prefix = phi_->fixed_point_prefix(seed_, std::max<size_t>(cfg_.prefix_floor, 1000000));
        bool letters_ok = true;
        for (const Word& a : L_->factors(1)) {
            long double emp = static_cast<long double>(occurrences(a, prefix).size()) /
                              static_cast<long double>(prefix.size());
            if (std::abs(emp - engine_->frequency(a).value()) > 5e-3L) letters_ok = false;
        }
        add("letter_frequency_empirical", letters_ok);

        bool emp_ok = true;
        std::string edetail;
        for (int n = 1; n <= std::min(cap, 12) && emp_ok; ++n) {
            long double windows = static_cast<long double>(prefix.size() - static_cast<size_t>(n) + 1);
            for (const Word& w : L_->factors(n)) {
                long double emp = static_cast<long double>(occurrences(w, prefix).size()) / windows;
                if (std::abs(emp - engine_->frequency(w).value()) > 1e-3L) {
                    emp_ok = false;
                    edetail = "w=" + ab.display(w);
                    break;
                }
            }
        }
        add("factor_frequency_empirical", emp_ok, edetail);
    }

    // Rauzy graph properties.
    {
        bool eqs = true, labels_match = true, contraction = true, automorphism = true,
             census = true;
        std::string detail;
        for (int n = 1; n <= cap && eqs; ++n) {
            RauzyGraph g = build_rauzy(*L_, n, *engine_);
            ReducedRauzyGraph rg;
            try {
                rg = reduce(g, *L_, *engine_);
            } catch (const HypothesisError&) {
                detail = "n=" + std::to_string(n) + " periodic-like; skipped";
                continue;
            }
            auto id = edge_count_identities(rg, *L_);
            if (!id.eq2_holds || !id.eq3_holds || !id.eq5_holds) {
                eqs = false;
                detail = "n=" + std::to_string(n);
            }

            auto value_set = [&](const std::map<Word, FrequencyValue>& m) {
                std::set<std::string> s;
                for (const auto& [k, v] : m) s.insert(v.str());
                return s;
            };
            if (value_set(g.labels) != value_set(rg.labels)) labels_match = false;

            std::multiset<Word> covered;
            for (const Word& e : rg.edges)
                for (size_t i = 0; i + static_cast<size_t>(n) + 1 <= e.size(); ++i)
                    covered.insert(e.substr(i, static_cast<size_t>(n) + 1));
            std::multiset<Word> expected(g.edges.begin(), g.edges.end());
            if (covered != expected) contraction = false;

            std::set<Word> vset(rg.vertices.begin(), rg.vertices.end());
            std::set<Word> eset(rg.edges.begin(), rg.edges.end());
            for (const Symmetry& s : group_.elements()) {
                for (const Word& v : rg.vertices)
                    if (!vset.count(s.apply(v))) automorphism = false;
                for (const Word& e : rg.edges)
                    if (!eset.count(s.apply(e))) automorphism = false;
            }

            if (group_.contains_antimorphism()) {
                auto c = theta_fixed_edge_census(rg, *L_, group_);
                if (!c.matches) census = false;
            }
        }
        add("eq2_eq3_eq5_edge_counts", eqs, detail);
        add("label_set_equality", labels_match);
        add("contraction_soundness", contraction);
        add("graph_automorphism_action", automorphism);
        add("theta_fixed_census", census);
    }

    // Bound verdicts.
    {
        bool holds = true, xy_consistent = true;
        std::string detail;
        for (int n = 1; n <= cap; ++n) {
            BoundReport r = evaluator_->evaluate(n);
            if (!r.holds()) {
                holds = false;
                detail = "n=" + std::to_string(n);
            }
            if (r.x != L_->bispecial(n).size()) xy_consistent = false;
            if (r.y > r.x || r.y_reversal > r.x) xy_consistent = false;
        }
        add("bounds_hold", holds, detail);
        add("bounds_xy_consistency", xy_consistent);
    }

    return out;
}

}  // namespace wordsym
