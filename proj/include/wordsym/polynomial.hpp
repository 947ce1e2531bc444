#pragma once

#include "wordsym/rational.hpp"

#include <string>
#include <vector>

namespace wordsym {

// Dense univariate polynomial over Q, coefficients in ascending degree order.
// The zero polynomial is the empty vector; otherwise the leading coefficient
// is nonzero.
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
// Division in Q[x]; divisor nonzero. Returns {quotient, remainder}.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);
Poly poly_derivative(const Poly& p);
Poly poly_monic(const Poly& p);
// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
Rational poly_eval(const Poly& p, const Rational& x);
long double poly_eval(const Poly& p, long double x);
std::string poly_to_string(const Poly& p);  // "x^2 - 4*x + 1"

// Product of the distinct irreducible factors (monic).
Poly squarefree_part(const Poly& p);

// All rational roots (for monic integer input these are integers).
std::vector<Rational> rational_roots(const Poly& p);

// Smallest-degree monic irreducible factor containing the real root
// approximated by x0, for factors of degree <= max_degree. Uses rational-root
// stripping plus a Kronecker divisor search. Throws FieldDegreeError when the
// factor's degree exceeds max_degree.
Poly minimal_polynomial_at(const Poly& charpoly, long double x0, int max_degree = 4);

// Largest real root of p, refined by bisection + Newton to long double
// precision. p must change sign; callers pass squarefree inputs.
long double refine_root(const Poly& p, long double x0);

}  // namespace wordsym
