#include "wordsym/spectral.hpp"

#include "wordsym/errors.hpp"

#include <cmath>

namespace wordsym {

std::vector<std::vector<BigInt>> incidence_matrix(const Morphism& phi) {
    int m = phi.alphabet_size();
    std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(m, BigInt(0)));
    for (int j = 0; j < m; ++j)
        for (char c : phi.image(j)) M[static_cast<unsigned char>(c)][j] += 1;
    return M;
}

bool is_primitive(const Morphism& phi) {
    int m = phi.alphabet_size();
    auto M = incidence_matrix(phi);
    // Work on the boolean adjacency; Wielandt: primitive iff some power up to
    // (m-1)^2 + 1 is positive.
    std::vector<std::vector<bool>> B(m, std::vector<bool>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) B[i][j] = M[i][j] > 0;
    int cap = (m - 1) * (m - 1) + 1;
    auto positive = [&](const std::vector<std::vector<bool>>& A) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!A[i][j]) return false;
        return true;
    };
    std::vector<std::vector<bool>> P = B;
    for (int k = 1; k <= cap; ++k) {
        if (positive(P)) return true;
        std::vector<std::vector<bool>> N(m, std::vector<bool>(m, false));
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < m; ++l)
                if (P[i][l])
                    for (int j = 0; j < m; ++j)
                        if (B[l][j]) N[i][j] = true;
        P = std::move(N);
    }
    return false;
}

namespace {

// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
Poly characteristic_polynomial(const std::vector<std::vector<BigInt>>& M) {
    int m = static_cast<int>(M.size());
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A[i][j] = Rational(M[i][j]);

    Poly coeffs(m + 1, Rational(0));
    coeffs[m] = 1;
    std::vector<std::vector<Rational>> N(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i) N[i][i] = 1;  // N_1 = I
    Rational c;
    std::vector<std::vector<Rational>> AN(m, std::vector<Rational>(m));
    for (int k = 1; k <= m; ++k) {
        // AN = A * N
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Rational s(0);
                for (int l = 0; l < m; ++l) s += A[i][l] * N[l][j];
                AN[i][j] = s;
            }
        Rational tr(0);
        for (int i = 0; i < m; ++i) tr += AN[i][i];
        c = -tr / Rational(k);
        coeffs[m - k] = c;
        if (k < m) {
            N = AN;
            for (int i = 0; i < m; ++i) N[i][i] += c;
        }
    }
    return coeffs;
}

// Solve (M - lambda I) f = 0 over Q(lambda), normalized to sum 1.
std::vector<FieldElement> exact_kernel(const std::vector<std::vector<BigInt>>& M,
                                       const FieldPtr& field, const FieldElement& lambda) {
    int m = static_cast<int>(M.size());
    std::vector<std::vector<FieldElement>> A;
    A.reserve(m);
    for (int i = 0; i < m; ++i) {
        std::vector<FieldElement> row;
        row.reserve(m);
        for (int j = 0; j < m; ++j) {
            FieldElement e = field->from_rational(Rational(M[i][j]));
            if (i == j) e = e - lambda;
            row.push_back(std::move(e));
        }
        A.push_back(std::move(row));
    }
    // Gaussian elimination with partial structural pivoting.
    std::vector<int> pivot_col(m, -1);
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (!A[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[piv], A[rank]);
        FieldElement inv = A[rank][col].inverse();
        for (int j = col; j < m; ++j) A[rank][j] = A[rank][j] * inv;
        for (int r = 0; r < m; ++r) {
            if (r == rank || A[r][col].is_zero()) continue;
            FieldElement f = A[r][col];
            for (int j = col; j < m; ++j) A[r][j] = A[r][j] - f * A[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    if (rank != m - 1)
        throw InvariantError("Perron eigenspace is not one-dimensional");
    int free_col = -1;
    for (int col = 0, r = 0; col < m; ++col) {
        if (r < rank && pivot_col[r] == col)
            ++r;
        else
            free_col = col;
    }
    std::vector<FieldElement> f(m, field->zero());
    f[free_col] = field->one();
    for (int r = 0; r < rank; ++r) f[pivot_col[r]] = -A[r][free_col];
    FieldElement total = field->zero();
    for (const auto& e : f) total = total + e;
    FieldElement inv_total = total.inverse();
    for (auto& e : f) e = e * inv_total;
    return f;
}

}  // namespace

void perron_approx(const std::vector<std::vector<BigInt>>& M, long double& lambda,
                   std::vector<long double>& freq) {
    int m = static_cast<int>(M.size());
    std::vector<std::vector<long double>> A(m, std::vector<long double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A[i][j] = static_cast<long double>(M[i][j]);
    std::vector<long double> v(m, 1.0L / m);
    lambda = 0;
    for (int it = 0; it < 100000; ++it) {
        std::vector<long double> w(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) w[i] += A[i][j] * v[j];
        long double norm = 0;
        for (long double x : w) norm += x;
        for (auto& x : w) x /= norm;
        long double diff = 0;
        for (int i = 0; i < m; ++i) diff = std::max(diff, std::abs(w[i] - v[i]));
        v = std::move(w);
        lambda = norm;
        if (diff < 1e-14L && it > 3) break;
    }
    // Residual check: ||Av - lambda v||_inf small.
    long double resid = 0;
    for (int i = 0; i < m; ++i) {
        long double s = 0;
        for (int j = 0; j < m; ++j) s += A[i][j] * v[j];
        resid = std::max(resid, std::abs(s - lambda * v[i]));
    }
    if (resid > 1e-12L * std::max<long double>(1, lambda))
        throw HypothesisError("power iteration did not converge");
    freq = std::move(v);
}

PerronData perron_data(const Morphism& phi) {
    if (!is_primitive(phi)) throw HypothesisError("morphism is not primitive");
    auto M = incidence_matrix(phi);

    PerronData out;
    perron_approx(M, out.lambda_approx, out.frequencies_approx);

    Poly charpoly = characteristic_polynomial(M);
    Poly minpoly = minimal_polynomial_at(charpoly, out.lambda_approx, 4);
    out.field = NumberField::make(minpoly, out.lambda_approx);
    out.lambda = out.field->generator();
    out.frequencies = exact_kernel(M, out.field, out.lambda);
    return out;
}

}  // namespace wordsym
