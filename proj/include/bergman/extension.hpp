#pragma once

#include <map>
#include <vector>

#include "bergman/friedrichs.hpp"
#include "bergman/laurent.hpp"
#include "bergman/norms.hpp"

namespace bergman {

// Per-coordinate window (r^2/R, R^2/r) of admissible extension radii around
// an annulus A(r, R), with the chosen radii of the extension annulus.
struct ExtensionWindow {
    std::vector<double> window_lo;  // r_k^2 / R_k
    std::vector<double> window_hi;  // R_k^2 / r_k
    std::vector<std::pair<double, double>> chosen;
};

struct ExtensionResult {
    AnnulusProduct extended;  // P'
    ExtensionWindow window;
};

// Extension annulus product with log-midpoint radii:
//   log r' = (log(r^2/R) + log r)/2,  log R' = (log R + log(R^2/r))/2.
// Throws when some inner radius is 0 (closure meets the coordinate axes and
// the extension guarantee fails, as the Hartogs example shows).
ExtensionResult extension_product(const AnnulusProduct& P);

// Dispatch form; rejects Hartogs domains and punctured annulus products with
// a domain-touches-axes error, and non-product domains outright.
ExtensionResult extension_product(const ReinhardtDomain& domain);

// e_alpha^2 / (d_alpha^4 d_{-alpha}^2) with e over P' and d over P; the
// square of the comparison criterion. Finite for any P' off the axes; no
// window precondition so that violating configurations can be swept.
double comp_estimate_ratio(const NormTable& p_norms, const NormTable& ext_norms,
                           const MultiIndex& alpha);

struct ExtensionCertificate {
    bool pass = false;
    double sup_ratio = 0.0;
    MultiIndex argmax;
    double tail_slope = 0.0;  // log of the estimated geometric base of the shell maxima
    double tail_base = 0.0;
    int degree_cap = 0;
    AnnulusProduct domain{std::vector<std::pair<double, double>>{{0.5, 1.0}}};
    AnnulusProduct extended{std::vector<std::pair<double, double>>{{0.5, 1.0}}};
    std::vector<double> shell_max;  // shell_max[m] = max ratio over ||alpha||_inf = m
};

// Sweeps comp_estimate_ratio over ||alpha||_inf <= degree_cap and estimates
// the geometric tail. The polynomial prefactor (2m+2)(2m-2) of the shell
// maxima is divided out before differencing, so the estimated base converges
// to the true one at the rate of the exponentially small correction terms.
// Passes iff the sweep is finite and the tail decays (tail_slope < 0).
ExtensionCertificate certify_extension(const AnnulusProduct& P, const AnnulusProduct& P_ext,
                                       int degree_cap);

// Closed-form geometric bases of the 1-D ratio sequence:
//   j -> +inf: (R' r / R^2)^2,   j -> -inf: (r^2 / (r' R))^2.
// Both are < 1 exactly when the chosen radii are inside the open window;
// this is the rigorous backstop behind the finite sweep.
struct TailAnalysis {
    double base_plus;
    double base_minus;
    double base;  // max of the two
};
TailAnalysis extension_tail_base_1d(double r, double R, double r_ext, double R_ext);

// Terms c_0^4 |f_{-alpha}|^2 e_alpha^2 / c_alpha^4 of the L2(P') bound on the
// projection, keyed by alpha (only alphas contributing nonzero terms).
std::map<MultiIndex, double> extension_bound_terms(const NormTable& domain_norms,
                                                   const NormTable& ext_norms,
                                                   const LaurentSeries& f);

struct ProjectExtendResult {
    LaurentSeries projection;  // convergence_hint = P'
    AnnulusProduct extended;
    ExtensionCertificate certificate;
    double l2_bound;  // sum of extension_bound_terms over the support
};

// Projects conj(f) on `domain` and certifies square integrability of the
// result on the extension P' of P. Requires closure(P) inside the domain
// (checked by membership sampling) and P off the axes.
ProjectExtendResult project_and_extend(const ReinhardtDomain& domain, const AnnulusProduct& P,
                                       const LaurentSeries& f, int certificate_cap = 60);

}  // namespace bergman
