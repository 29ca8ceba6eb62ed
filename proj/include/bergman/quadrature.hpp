#pragma once

#include <functional>
#include <vector>

#include "bergman/domains.hpp"

namespace bergman {

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre polynomial. Cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

// Integral of f over [a, b] with an n-point rule.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order);

// Integral of f over [a, b] on dyadic panels accumulating toward the endpoint
// `toward` (a or b). Handles integrable endpoint behaviour of power-law type.
double gauss_integrate_dyadic(const std::function<double(double)>& f, double a, double b,
                              double toward, int order, int levels);

// ---------------------------------------------------------------------------
// Region quadrature for monomial norms on a log-profile domain:
//
//     I(alpha) = integral over {rho < 0} of exp(sum_k e_k t_k) dt,
//     e_k = 2 alpha_k + 2,
//
// evaluated by recursive box classification. Boxes entirely inside {rho < 0}
// are integrated with tensor Gauss-Legendre; boxes crossing the boundary are
// split until small, then resolved by per-column root finding along the
// locally transversal coordinate. The exponential factor is rescaled by its
// maximum over the bounding box so large |alpha| cannot overflow.
// ---------------------------------------------------------------------------
struct RegionQuadratureOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-11;
    int max_depth = 24;
    int column_depth = 6;      // depth at which boundary boxes switch to column resolve
    int gauss_order = 16;
    int column_scan_points = 33;  // sign-change scan resolution along a column
};

struct RegionQuadratureResult {
    double value = 0.0;          // includes the rescaling factor
    double log_scale = 0.0;      // value = raw * exp(log_scale) internally; already applied
    double error_estimate = 0.0;
    bool converged = true;
};

RegionQuadratureResult integrate_exponential_over_profile(
    const LogProfile& profile, const LogBox& bounding_box, const std::vector<double>& exponents,
    const RegionQuadratureOptions& options = {});

}  // namespace bergman
