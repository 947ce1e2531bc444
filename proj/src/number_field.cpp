#include "wordsym/number_field.hpp"

#include "wordsym/errors.hpp"

#include <cmath>
#include <sstream>

namespace wordsym {

NumberField::NumberField(Poly mp, long double root)
    : minpoly_(std::move(mp)), degree_(poly_degree(minpoly_)), root_(root) {
    // power_table_[k] = x^(degree+k) reduced mod minpoly, k = 0..degree-2.
    int d = degree_;
    Poly cur(d, Rational(0));
    for (int i = 0; i < d; ++i) cur[i] = -minpoly_[i];  // x^d
    for (int k = 0; k + 1 < d; ++k) {
        power_table_.push_back(cur);
        Poly next(d, Rational(0));
        Rational top = cur[d - 1];
        for (int i = d - 1; i > 0; --i) next[i] = cur[i - 1];
        if (top != 0)
            for (int i = 0; i < d; ++i) next[i] += top * power_table_.front()[i];
        cur = std::move(next);
    }
}

FieldPtr NumberField::make(Poly monic_minpoly, long double root) {
    Poly mp = poly_monic(poly_trim(std::move(monic_minpoly)));
    if (poly_degree(mp) < 1)
        throw InvariantError("number field needs a nonconstant minimal polynomial");
    long double refined = refine_root(mp, root);
    return std::shared_ptr<const NumberField>(new NumberField(std::move(mp), refined));
}

FieldPtr NumberField::rationals(const Rational& lambda) {
    return make(Poly{-lambda, Rational(1)}, to_long_double(lambda));
}

FieldElement NumberField::zero() const {
    return element(std::vector<Rational>(static_cast<size_t>(degree_), Rational(0)));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
    c[0] = r;
    return element(std::move(c));
}

FieldElement NumberField::from_int(long long v) const { return from_rational(Rational(v)); }

FieldElement NumberField::generator() const {
    if (degree_ == 1) return from_rational(-minpoly_[0]);
    std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
    c[1] = 1;
    return element(std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) != degree_)
        throw InvariantError("field element coordinate size mismatch");
    return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || a.field().get() != b.field().get())
        throw InvariantError("field elements belong to different fields");
}

}  // namespace

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw InvariantError("field element is not rational");
    return coords_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(*this, o);
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(*this, o);
    std::vector<Rational> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c = coords_;
    for (auto& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(*this, o);
    int d = field_->degree_;
    std::vector<Rational> full(static_cast<size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (coords_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
            full[static_cast<size_t>(i + j)] +=
                coords_[static_cast<size_t>(i)] * o.coords_[static_cast<size_t>(j)];
    }
    std::vector<Rational> out(full.begin(), full.begin() + d);
    for (int k = d; k < 2 * d - 1; ++k) {
        if (full[static_cast<size_t>(k)] == 0) continue;
        const auto& rep = field_->power_table_[static_cast<size_t>(k - d)];
        for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] += full[static_cast<size_t>(k)] * rep[static_cast<size_t>(i)];
    }
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::inverse() const {
    if (!field_) throw InvariantError("inverse of an uninitialized field element");
    if (is_zero()) throw InvariantError("inverse of zero field element");
    // Extended Euclid: s*a + t*minpoly = gcd = constant.
    Poly a = poly_trim(coords_);
    Poly r0 = field_->minpoly_, r1 = a;
    Poly s0 = {}, s1 = {Rational(1)};
    while (poly_degree(r1) > 0) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty())
        throw InvariantError("field element not invertible (reducible modulus)");
    Poly inv = poly_scale(s1, Rational(1) / r1[0]);
    inv.resize(static_cast<size_t>(field_->degree_), Rational(0));
    return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(unsigned k) const {
    FieldElement acc = field_->one();
    FieldElement base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(*this, o);
    return coords_ == o.coords_;
}

long double FieldElement::to_long_double() const {
    long double x = field_->root_;
    long double acc = 0;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it)
        acc = acc * x + wordsym::to_long_double(*it);
    return acc;
}

namespace {

// Largest square factor: d0 = s^2 * d with d squarefree.
void extract_square(const BigInt& d0, BigInt& s, BigInt& d) {
    s = 1;
    d = d0;
    for (BigInt p = 2; p * p <= d; ++p)
        while (d % (p * p) == 0) {
            d /= p * p;
            s *= p;
        }
}

// Element of a real quadratic field as "(p + q*sqrt(D))/r".
std::string quadratic_string(const Poly& minpoly, const std::vector<Rational>& coords) {
    Rational B = minpoly[1], C = minpoly[0];
    BigInt d0 = num(B * B - Rational(4) * C);  // integer: monic integer minpoly
    BigInt s, d;
    extract_square(d0, s, d);
    // u + v*lambda with lambda = (-B + s*sqrt(d))/2.
    const Rational& u = coords[0];
    const Rational& v = coords[1];
    Rational alpha = u - v * B / Rational(2);
    Rational beta = v * Rational(s) / Rational(2);
    BigInt r = boost::multiprecision::lcm(den(alpha), den(beta));
    BigInt p = num(alpha) * (r / den(alpha));
    BigInt q = num(beta) * (r / den(beta));
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(BigInt(abs(p)), BigInt(abs(q))), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    auto sqrt_term = [&](const BigInt& coef) {
        std::string out;
        BigInt a(abs(coef));
        if (a != 1) out += a.str() + "*";
        out += "sqrt(" + d.str() + ")";
        return out;
    };
    std::string numer;
    bool two_terms = p != 0;
    if (p == 0)
        numer = (q < 0 ? "-" : "") + sqrt_term(q);
    else if (q > 0 && p < 0)
        numer = sqrt_term(q) + " - " + BigInt(abs(p)).str();
    else
        numer = p.str() + (q < 0 ? " - " : " + ") + sqrt_term(q);
    if (r == 1) return numer;
    if (two_terms) return "(" + numer + ")/" + r.str();
    return numer + "/" + r.str();
}

}  // namespace

std::string FieldElement::str() const {
    if (!field_) return "0";
    if (field_->degree_ == 1 || is_rational()) return to_string(coords_[0]);
    if (field_->degree_ == 2) return quadratic_string(field_->minpoly_, coords_);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(coords_[i]);
    }
    os << "] over " << field_->minpoly_string();
    return os.str();
}

bool FieldElement::less(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    if (a.coords_ == b.coords_) return false;
    long double xa = a.to_long_double(), xb = b.to_long_double();
    if (xa != xb) return xa < xb;
    return a.coords_ < b.coords_;
}

}  // namespace wordsym
