#pragma once

#include <vector>

#include "bergman/laurent.hpp"
#include "bergman/norms.hpp"

namespace bergman {

// Bergman projection of the conjugate of a Laurent polynomial f on the
// domain of `norms`:
//
//     coefficient at alpha = c_0^2 conj(f_{-alpha}) / c_alpha^2,
//
// zero when -alpha is outside the support of f or alpha is inadmissible
// (c_alpha^2 = +inf). Throws std::invalid_argument when f carries an
// inadmissible index.
LaurentSeries project_conjugate(const NormTable& norms, const LaurentSeries& f);

// Independent cross-check: computes <conj(f), z^alpha> / ||z^alpha||^2 for
// every admissible alpha with ||alpha||_inf <= degree_cap by numerical
// integration (trapezoidal angular sums, Gauss-Legendre radial moments).
// Exists solely as an oracle for project_conjugate.
LaurentSeries project_conjugate_by_quadrature(const ReinhardtDomain& domain,
                                              const LaurentSeries& f, int degree_cap);

struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> data;  // row-major

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Complex(0, 0)) {}
    Complex& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Matrix of the Friedrichs operator on the orthonormal monomial basis
// restricted to an index window: entry (alpha, beta) is
// <conj(z^beta / c_beta), z^alpha / c_alpha> = c_0^2 / (c_alpha c_beta) when
// beta = -alpha and 0 otherwise. Window indices must be admissible.
ComplexMatrix friedrichs_matrix(const NormTable& norms, const std::vector<MultiIndex>& window);

// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace bergman
