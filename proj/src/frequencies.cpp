#include "wordsym/frequencies.hpp"

#include "wordsym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wordsym {

namespace {

std::string format_long_double(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15Lg", v);
    return buf;
}

}  // namespace

std::string FrequencyValue::str() const {
    if (!exact) return format_long_double(approx);
    return exact->str();
}

bool approx_equal(long double a, long double b, long double rel_tol) {
    long double scale = std::max<long double>({1.0L, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= rel_tol * scale;
}

std::vector<Interpretation> interpretations(const Morphism& phi, const LanguageIndex& L,
                                            const Word& v) {
    if (!L.contains(v)) throw ParseError("word is not a factor of the indexed language");
    std::vector<Interpretation> out;
    if (v.empty()) return out;
    size_t max_im = phi.max_image_length();
    size_t min_im = phi.min_image_length();
    size_t window = (v.size() + 2 * max_im + min_im - 1) / min_im;
    size_t cap = std::min(window, static_cast<size_t>(L.n_max()) + 1);
    for (size_t len = 1; len <= cap; ++len) {
        for (const Word& anc : L.factors(static_cast<int>(len))) {
            Word img = phi.apply(anc);
            if (img.size() < v.size()) continue;
            size_t first_len = phi.image(static_cast<unsigned char>(anc.front())).size();
            size_t last_len = phi.image(static_cast<unsigned char>(anc.back())).size();
            for (size_t i : occurrences(v, img)) {
                if (i >= first_len) continue;                      // cut inside phi(b_0)
                if (i + v.size() <= img.size() - last_len) continue;  // ends inside phi(b_m)
                out.push_back({anc, i, img.size() - i - v.size()});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FrequencyEngine::FrequencyEngine(const Morphism& phi, const LanguageIndex& L)
    : FrequencyEngine(phi, L, FrequencyMode::exact) {}

FrequencyEngine::FrequencyEngine(const Morphism& phi, const LanguageIndex& L, FrequencyMode mode)
    : phi_(phi), psi_(phi), L_(L), mode_(mode) {
    auto [t, psi] = phi_.power_normalize();
    power_ = t;
    psi_ = std::move(psi);

    auto M = incidence_matrix(phi_);
    perron_approx(M, lambda_approx_, letter_freq_approx_);
    lambda_pow_approx_ = std::pow(lambda_approx_, static_cast<long double>(power_));

    if (mode_ == FrequencyMode::exact) {
        perron_ = perron_data(phi_);
        lambda_pow_ = perron_->lambda.pow(static_cast<unsigned>(power_));
    }
    solve_base();
}

const FieldPtr& FrequencyEngine::field() const {
    if (!perron_) throw HypothesisError("exact field unavailable in approx mode");
    return perron_->field;
}

const FieldElement& FrequencyEngine::lambda() const {
    if (!perron_) throw HypothesisError("exact field unavailable in approx mode");
    return perron_->lambda;
}

void FrequencyEngine::solve_base() {
    const auto& l1 = L_.factors(1);
    const auto& l2 = L_.factors(2);
    size_t m = l2.size();
    std::vector<std::vector<Interpretation>> interp;
    interp.reserve(m);
    for (const Word& v : l2) interp.push_back(interpretations(psi_, L_, v));
    auto col_of = [&](const Word& w) {
        return static_cast<size_t>(std::lower_bound(l2.begin(), l2.end(), w) - l2.begin());
    };

    if (mode_ == FrequencyMode::exact) {
        const FieldPtr& F = perron_->field;
        for (size_t a = 0; a < l1.size(); ++a)
            exact_memo_[l1[a]] = perron_->frequencies[static_cast<unsigned char>(l1[a][0])];
        // Rows: lambda^t * x_v - sum over length-2 ancestors = sum letter terms.
        std::vector<std::vector<FieldElement>> rows;
        for (size_t r = 0; r < m; ++r) {
            std::vector<FieldElement> row(m + 1, F->zero());
            row[r] = *lambda_pow_;
            for (const auto& s : interp[r]) {
                if (s.ancestor.size() == 1)
                    row[m] = row[m] + exact_memo_.at(s.ancestor);
                else if (s.ancestor.size() == 2)
                    row[col_of(s.ancestor)] = row[col_of(s.ancestor)] - F->one();
                else
                    throw InvariantError("base ancestor longer than 2 after normalization");
            }
            rows.push_back(std::move(row));
        }
        std::vector<FieldElement> sum_row(m + 1, F->one());
        rows.push_back(std::move(sum_row));  // sum of all length-2 frequencies is 1

        // Gaussian elimination on the (m+1) x (m+1) augmented system.
        size_t rank = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < m && rank < rows.size(); ++col) {
            size_t piv = rank;
            while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            FieldElement inv = rows[rank][col].inverse();
            for (size_t j = col; j <= m; ++j) rows[rank][j] = rows[rank][j] * inv;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                FieldElement f = rows[r][col];
                for (size_t j = col; j <= m; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        bool singular = rank < m;
        for (size_t r = rank; r < rows.size() && !singular; ++r)
            if (!rows[r][m].is_zero()) singular = true;  // inconsistent
        if (singular) {
            // Fall back to empirical estimation on a long prefix.
            base_fallback_ = true;
            mode_ = FrequencyMode::approx;
            exact_memo_.clear();
        } else {
            for (size_t r = 0; r < rank; ++r) exact_memo_[l2[pivot_col[r]]] = rows[r][m];
            return;
        }
    }

    // Approx path (native approx mode, or exact fallback).
    bool solved = false;
    {
        for (size_t a = 0; a < l1.size(); ++a)
            approx_memo_[l1[a]] = letter_freq_approx_[static_cast<unsigned char>(l1[a][0])];
        std::vector<std::vector<long double>> rows;
        for (size_t r = 0; r < m; ++r) {
            std::vector<long double> row(m + 1, 0.0L);
            row[r] = lambda_pow_approx_;
            for (const auto& s : interp[r]) {
                if (s.ancestor.size() == 1)
                    row[m] += approx_memo_.at(s.ancestor);
                else
                    row[col_of(s.ancestor)] -= 1.0L;
            }
            rows.push_back(std::move(row));
        }
        rows.emplace_back(m + 1, 1.0L);
        size_t rank = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < m && rank < rows.size(); ++col) {
            size_t piv = rank;
            for (size_t r = rank + 1; r < rows.size(); ++r)
                if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
            if (std::abs(rows[piv][col]) < 1e-12L) continue;
            std::swap(rows[piv], rows[rank]);
            long double inv = 1.0L / rows[rank][col];
            for (size_t j = col; j <= m; ++j) rows[rank][j] *= inv;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                long double f = rows[r][col];
                for (size_t j = col; j <= m; ++j) rows[r][j] -= f * rows[rank][j];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        if (rank == m) {
            for (size_t r = 0; r < rank; ++r) approx_memo_[l2[pivot_col[r]]] = rows[r][m];
            solved = true;
        }
    }
    if (!solved) {
        base_fallback_ = true;
        Word prefix = phi_.fixed_point_prefix(L_.seed(), 1000000);
        for (int n = 1; n <= 2; ++n)
            for (const Word& v : L_.factors(n))
                approx_memo_[v] = static_cast<long double>(occurrences(v, prefix).size()) /
                                  static_cast<long double>(prefix.size() - v.size() + 1);
    }
}

FieldElement FrequencyEngine::exact_frequency(const Word& v, int depth) {
    if (depth > 512) throw InvariantError("frequency recursion did not terminate");
    if (v.empty()) return perron_->field->one();
    auto it = exact_memo_.find(v);
    if (it != exact_memo_.end()) return it->second;
    if (!L_.contains(v)) throw ParseError("word is not a factor of the indexed language");
    if (v.size() <= 2) throw InvariantError("base frequency missing from the solved system");

    // A unique right extension occurs exactly where its base does and
    // inherits the frequency.
    Word p = v.substr(0, v.size() - 1);
    if (L_.extensions(p).right.size() == 1) {
        FieldElement r = exact_frequency(p, depth + 1);
        exact_memo_.emplace(v, r);
        return r;
    }
    Word s = v.substr(1);
    if (L_.extensions(s).left.size() == 1) {
        FieldElement r = exact_frequency(s, depth + 1);
        exact_memo_.emplace(v, r);
        return r;
    }

    // Frid recursion over interpretations.
    FieldElement sum = perron_->field->zero();
    auto interp = interpretations(psi_, L_, v);
    if (interp.empty()) throw InvariantError("factor admits no interpretation");
    for (const auto& sI : interp) {
        if (sI.ancestor.size() >= v.size())
            throw InvariantError("ancestors do not shrink; normalization power misconfigured");
        sum = sum + exact_frequency(sI.ancestor, depth + 1);
    }
    FieldElement r = sum / *lambda_pow_;
    exact_memo_.emplace(v, r);
    return r;
}

long double FrequencyEngine::approx_frequency(const Word& v, int depth) {
    if (depth > 512) throw InvariantError("frequency recursion did not terminate");
    if (v.empty()) return 1.0L;
    auto it = approx_memo_.find(v);
    if (it != approx_memo_.end()) return it->second;
    if (!L_.contains(v)) throw ParseError("word is not a factor of the indexed language");
    if (v.size() <= 2) throw InvariantError("base frequency missing from the solved system");

    Word p = v.substr(0, v.size() - 1);
    if (L_.extensions(p).right.size() == 1) {
        long double r = approx_frequency(p, depth + 1);
        approx_memo_.emplace(v, r);
        return r;
    }
    Word s = v.substr(1);
    if (L_.extensions(s).left.size() == 1) {
        long double r = approx_frequency(s, depth + 1);
        approx_memo_.emplace(v, r);
        return r;
    }

    long double sum = 0;
    auto interp = interpretations(psi_, L_, v);
    if (interp.empty()) throw InvariantError("factor admits no interpretation");
    for (const auto& sI : interp) {
        if (sI.ancestor.size() >= v.size())
            throw InvariantError("ancestors do not shrink; normalization power misconfigured");
        sum += approx_frequency(sI.ancestor, depth + 1);
    }
    long double r = sum / lambda_pow_approx_;
    approx_memo_.emplace(v, r);
    return r;
}

FrequencyValue FrequencyEngine::frequency(const Word& v) {
    FrequencyValue out;
    out.mode = mode_;
    if (mode_ == FrequencyMode::exact) {
        out.exact = exact_frequency(v, 0);
        out.approx = out.exact->to_long_double();
    } else {
        out.approx = approx_frequency(v, 0);
    }
    return out;
}

std::map<Word, FrequencyValue> FrequencyEngine::frequency_map(int n) {
    std::map<Word, FrequencyValue> out;
    for (const Word& v : L_.factors(n)) out.emplace(v, frequency(v));
    return out;
}

FrequencyEngine::DistinctResult FrequencyEngine::distinct_frequencies(int n) {
    DistinctResult out;
    if (mode_ == FrequencyMode::exact) {
        std::vector<FieldElement> vals;
        for (const Word& v : L_.factors(n)) vals.push_back(exact_frequency(v, 0));
        std::sort(vals.begin(), vals.end(), FieldElement::less);
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (const auto& e : vals) {
            FrequencyValue fv;
            fv.mode = FrequencyMode::exact;
            fv.exact = e;
            fv.approx = e.to_long_double();
            out.values.push_back(std::move(fv));
        }
        return out;
    }
    std::vector<long double> vals;
    for (const Word& v : L_.factors(n)) vals.push_back(approx_frequency(v, 0));
    std::sort(vals.begin(), vals.end());
    std::vector<long double> reps;
    for (long double x : vals)
        if (reps.empty() || !approx_equal(reps.back(), x)) reps.push_back(x);
    for (size_t i = 0; i + 1 < reps.size(); ++i)
        if (approx_equal(reps[i], reps[i + 1], 1e-6L)) out.false_split_flag = true;
    for (long double x : reps) {
        FrequencyValue fv;
        fv.mode = FrequencyMode::approx;
        fv.approx = x;
        out.values.push_back(std::move(fv));
    }
    return out;
}

bool FrequencyEngine::kirchhoff_check(int n, Word* witness) {
    for (const Word& w : L_.factors(n)) {
        const Extensions& e = L_.extensions(w);
        if (mode_ == FrequencyMode::exact) {
            FieldElement self = exact_frequency(w, 0);
            FieldElement lsum = perron_->field->zero();
            for (char a : e.left) lsum = lsum + exact_frequency(Word(1, a) + w, 0);
            FieldElement rsum = perron_->field->zero();
            for (char a : e.right) rsum = rsum + exact_frequency(w + Word(1, a), 0);
            if (!(self == lsum) || !(self == rsum)) {
                if (witness) *witness = w;
                return false;
            }
        } else {
            long double self = approx_frequency(w, 0);
            long double lsum = 0, rsum = 0;
            for (char a : e.left) lsum += approx_frequency(Word(1, a) + w, 0);
            for (char a : e.right) rsum += approx_frequency(w + Word(1, a), 0);
            if (!approx_equal(self, lsum, 1e-7L) || !approx_equal(self, rsum, 1e-7L)) {
                if (witness) *witness = w;
                return false;
            }
        }
    }
    return true;
}

}  // namespace wordsym
