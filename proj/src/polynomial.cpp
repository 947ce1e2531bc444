#include "wordsym/polynomial.hpp"

#include "wordsym/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace wordsym {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw InvariantError("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    int db = poly_degree(b);
    if (poly_degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
    while (poly_degree(rem) >= db) {
        int k = poly_degree(rem) - db;
        Rational c = rem.back() / b.back();
        quot[k] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[k + i] -= c * b[i];
        rem = poly_trim(std::move(rem));
    }
    return {poly_trim(std::move(quot)), rem};
}

bool poly_divides(const Poly& d, const Poly& a) {
    if (d.empty()) return a.empty();
    return poly_divmod(a, d).second.empty();
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<int>(i));
    return r;
}

Poly poly_monic(const Poly& p) {
    if (p.empty()) return p;
    Poly r = p;
    Rational lead = r.back();
    for (auto& c : r) c /= lead;
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return poly_monic(a);
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double poly_eval(const Poly& p, long double x) {
    long double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_long_double(*it);
    return acc;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = poly_degree(p); k >= 0; --k) {
        const Rational& c = p[k];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && k > 0;
        if (!unit) os << to_string(a);
        if (k > 0) {
            if (!unit) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

Poly squarefree_part(const Poly& p) {
    Poly g = poly_gcd(p, poly_derivative(p));
    if (g.size() <= 1) return poly_monic(p);
    return poly_monic(poly_divmod(p, g).first);
}

namespace {

// Scale a rational polynomial to a primitive integer polynomial with positive
// leading coefficient.
std::vector<BigInt> primitive_integer(const Poly& p) {
    BigInt l(1);
    for (const auto& c : p) l = boost::multiprecision::lcm(l, den(c));
    std::vector<BigInt> w(p.size());
    BigInt g(0);
    for (size_t i = 0; i < p.size(); ++i) {
        w[i] = num(p[i]) * (l / den(p[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g == 0) return w;
    if (w.back() < 0) g = -g;
    for (auto& c : w) c /= g;
    return w;
}

std::vector<BigInt> divisors_signed(const BigInt& v) {
    BigInt a = boost::multiprecision::abs(v);
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        out.push_back(-d);
        BigInt e = a / d;
        if (e != d) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lagrange interpolation through integer points (xs[i], ys[i]).
Poly interpolate(const std::vector<long long>& xs, const std::vector<BigInt>& ys) {
    Poly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly term{Rational(ys[i])};
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            Poly lin{Rational(-xs[j]), Rational(1)};
            term = poly_mul(term, lin);
            term = poly_scale(term, Rational(1) / Rational(xs[i] - xs[j]));
        }
        acc = poly_add(acc, term);
    }
    return acc;
}

// Kronecker search: a monic factor of degree t of the (integer, rational-root
// free) polynomial p, or empty when none exists.
Poly kronecker_factor(const Poly& p, int t) {
    std::vector<long long> xs;
    for (long long v : {0LL, 1LL, -1LL, 2LL, -2LL, 3LL, -3LL}) {
        if (static_cast<int>(xs.size()) == t + 1) break;
        xs.push_back(v);
    }
    std::vector<std::vector<BigInt>> choices;
    for (long long x : xs) {
        Rational v = poly_eval(p, Rational(x));
        if (v == 0) return {};  // rational root: callers strip these first
        choices.push_back(divisors_signed(num(v)));
    }
    std::vector<size_t> idx(xs.size(), 0);
    while (true) {
        std::vector<BigInt> ys(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) ys[i] = choices[i][idx[i]];
        Poly cand = poly_trim(interpolate(xs, ys));
        if (poly_degree(cand) == t) {
            cand = poly_monic(cand);
            bool integral = true;
            for (const auto& c : cand)
                if (!is_integer(c)) integral = false;
            if (integral && poly_divides(cand, p)) return cand;
        }
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) return {};
    }
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> roots;
    auto w = primitive_integer(p);
    if (w.empty()) return roots;
    size_t low = 0;
    while (low < w.size() && w[low] == 0) ++low;
    if (low == w.size()) return roots;
    if (low > 0) roots.push_back(Rational(0));
    for (const BigInt& pn : divisors_signed(w[low])) {
        for (const BigInt& qd : divisors_signed(w.back())) {
            if (qd <= 0) continue;
            Rational cand(pn, qd);
            if (poly_eval(p, cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Poly minimal_polynomial_at(const Poly& charpoly, long double x0, int max_degree) {
    Poly sf = squarefree_part(charpoly);
    x0 = refine_root(sf, x0);

    // Peel rational roots; if lambda is one of them we are done.
    for (const Rational& r : rational_roots(sf)) {
        if (std::abs(to_long_double(r) - x0) < 1e-6L * (1 + std::abs(x0)))
            return Poly{-r, Rational(1)};
        Poly lin{-r, Rational(1)};
        sf = poly_divmod(sf, lin).first;
    }

    // Split off proper factors until the piece containing x0 is irreducible.
    while (true) {
        int d = poly_degree(sf);
        if (d <= 0) throw InvariantError("dominant root not located in characteristic polynomial");
        if (d > max_degree) {
            // A smaller factor may still contain x0.
            bool split = false;
            for (int t = 2; t <= max_degree && !split; ++t) {
                Poly f = kronecker_factor(sf, t);
                if (f.empty()) continue;
                Poly rest = poly_divmod(sf, f).first;
                sf = std::abs(poly_eval(f, x0)) < std::abs(poly_eval(rest, x0)) ? f : rest;
                split = true;
            }
            if (!split)
                throw FieldDegreeError("minimal polynomial degree exceeds 4; exact mode unavailable");
            continue;
        }
        bool split = false;
        for (int t = 2; t <= d / 2 && !split; ++t) {
            Poly f = kronecker_factor(sf, t);
            if (f.empty()) continue;
            Poly rest = poly_divmod(sf, f).first;
            sf = std::abs(poly_eval(f, x0)) < std::abs(poly_eval(rest, x0)) ? f : rest;
            split = true;
        }
        if (!split) {
            if (d > max_degree)
                throw FieldDegreeError("minimal polynomial degree exceeds 4; exact mode unavailable");
            if (std::abs(poly_eval(sf, x0)) > 1e-6L)
                throw InvariantError("dominant root does not satisfy the extracted factor");
            return poly_monic(sf);
        }
    }
}

long double refine_root(const Poly& p, long double x0) {
    Poly dp = poly_derivative(p);
    long double x = x0;
    for (int i = 0; i < 200; ++i) {
        long double f = poly_eval(p, x);
        long double d = poly_eval(dp, x);
        if (d == 0) break;
        long double nx = x - f / d;
        if (std::abs(nx - x) <= 1e-19L * std::max<long double>(1, std::abs(x))) {
            x = nx;
            break;
        }
        x = nx;
    }
    return x;
}

}  // namespace wordsym
