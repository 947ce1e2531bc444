#pragma once

#include "wordsym/polynomial.hpp"
#include "wordsym/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wordsym {

class FieldElement;

// Q(lambda) = Q[x]/(minpoly), minpoly monic irreducible of degree <= 4.
// Elements are rational coordinate vectors in the power basis 1, x, ..,
// x^{d-1}. The embedding stores the distinguished real root so elements can
// be ordered and printed numerically.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static std::shared_ptr<const NumberField> make(Poly monic_minpoly, long double root);
    // Degree-1 field for a rational lambda.
    static std::shared_ptr<const NumberField> rationals(const Rational& lambda);

    int degree() const { return degree_; }
    const Poly& minimal_polynomial() const { return minpoly_; }
    long double embedding() const { return root_; }
    std::string minpoly_string() const { return poly_to_string(minpoly_); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_int(long long v) const;
    FieldElement generator() const;  // lambda
    FieldElement element(std::vector<Rational> coords) const;

  private:
    NumberField(Poly mp, long double root);
    friend class FieldElement;

    Poly minpoly_;
    int degree_;
    long double root_;
    // x^k mod minpoly for k in [degree, 2*degree-2].
    std::vector<std::vector<Rational>> power_table_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(unsigned k) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    long double to_long_double() const;
    // Canonical serialization: plain rationals for degree-1 values,
    // "(p + q*sqrt(D))/r" for quadratic irrationals, coordinate tuples with
    // the minimal polynomial for degrees 3 and 4.
    std::string str() const;
    // Deterministic total order: by embedding, ties broken by coordinates.
    static bool less(const FieldElement& a, const FieldElement& b);

  private:
    FieldPtr field_;
    std::vector<Rational> coords_;
};

}  // namespace wordsym
