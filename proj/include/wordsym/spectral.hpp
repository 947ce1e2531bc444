#pragma once

#include "wordsym/morphism.hpp"
#include "wordsym/number_field.hpp"

#include <vector>

namespace wordsym {

// Incidence matrix M[i][j] = number of occurrences of letter i in phi(a_j).
std::vector<std::vector<BigInt>> incidence_matrix(const Morphism& phi);

// Primitivity via the Wielandt bound: some power up to (m-1)^2 + 1 positive.
bool is_primitive(const Morphism& phi);

struct PerronData {
    FieldPtr field;                       // Q(lambda)
    FieldElement lambda;                  // dominant eigenvalue as generator image
    std::vector<FieldElement> frequencies;  // letter frequencies, sum 1
    long double lambda_approx = 0;
    std::vector<long double> frequencies_approx;
};

// Exact Perron data: characteristic polynomial by Faddeev-LeVerrier, minimal
// polynomial of the dominant root (degree <= 4, else FieldDegreeError), then
// the normalized kernel of (M - lambda I) over Q(lambda).
PerronData perron_data(const Morphism& phi);

// Numeric-only variant (power iteration), used by the approx engine.
void perron_approx(const std::vector<std::vector<BigInt>>& m, long double& lambda,
                   std::vector<long double>& freq);

}  // namespace wordsym
