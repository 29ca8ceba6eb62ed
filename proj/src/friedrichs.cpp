#include "bergman/friedrichs.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "bergman/quadrature.hpp"
#include "bergman/util.hpp"

namespace bergman {

LaurentSeries project_conjugate(const NormTable& norms, const LaurentSeries& f) {
    if (f.dim() != norms.dim()) throw std::invalid_argument("project_conjugate: dimension mismatch");
    for (const auto& [beta, c] : f.coefficients())
        if (!norms.admissible(beta))
            throw std::invalid_argument("project_conjugate: f has inadmissible support at " +
                                        beta.to_string());
    const double c0_sq = norms.volume();
    LaurentSeries out(f.dim());
    for (const auto& [beta, f_beta] : f.coefficients()) {
        MultiIndex alpha = beta.negated();
        if (!norms.admissible(alpha)) continue;
        double c_alpha_sq = norms.norm_sq(alpha);
        out.set_coefficient(alpha, c0_sq * std::conj(f_beta) / c_alpha_sq);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadrature oracle
// ---------------------------------------------------------------------------

namespace {

// trapezoidal angular integral of e^{-i m theta} over [0, 2 pi]; exact
// (0 or 2 pi) once the node count exceeds the frequency, up to roundoff
Complex angular_trapezoid(int m, int nodes) {
    Complex sum(0.0, 0.0);
    for (int j = 0; j < nodes; ++j) {
        double theta = 2.0 * M_PI * j / nodes;
        sum += Complex(std::cos(m * theta), -std::sin(m * theta));
    }
    return sum * (2.0 * M_PI / nodes);
}

// integral over the radial profile of prod_k s_k^{nu_k + 1} ds
class RadialMomentEngine {
public:
    explicit RadialMomentEngine(const ReinhardtDomain& domain) : domain_(domain) {}

    double moment(const MultiIndex& nu) {
        auto it = cache_.find(nu);
        if (it != cache_.end()) return it->second;
        double value = compute(nu);
        cache_.emplace(nu, value);
        return value;
    }

private:
    double compute(const MultiIndex& nu) const {
        if (const auto* annuli = std::get_if<AnnulusProduct>(&domain_)) {
            double product = 1.0;
            for (std::size_t k = 0; k < annuli->dim(); ++k) {
                int e = nu[k] + 1;
                double r = annuli->inner(k), R = annuli->outer(k);
                auto f = [&](double s) { return std::pow(s, e); };
                double integral;
                if (r == 0.0) {
                    if (e < 0)
                        throw std::invalid_argument(
                            "radial moment diverges at the puncture; inadmissible pair");
                    integral = gauss_integrate_dyadic(f, 0.0, R, 0.0, 32, 48);
                } else {
                    // analytic integrand on a compact interval: panel-split GL
                    integral = 0.0;
                    const int panels = 4;
                    for (int p = 0; p < panels; ++p) {
                        double lo = r + (R - r) * p / panels;
                        double hi = r + (R - r) * (p + 1) / panels;
                        integral += gauss_integrate(f, lo, hi, 48);
                    }
                }
                product *= integral;
            }
            return product;
        }
        if (const auto* hartogs = std::get_if<HartogsDomain>(&domain_)) {
            const double gamma = hartogs->gamma();
            const int ez = nu[0] + 1;
            const int ew = nu[1] + 1;
            if (ez < 0)
                throw std::invalid_argument(
                    "radial moment diverges in the z coordinate; inadmissible pair");
            // iterated integral over {s^gamma < t < 1}: outer in t with dyadic
            // panels toward 0, inner polynomial in s
            auto inner = [&](double t) {
                double s_max = std::pow(t, 1.0 / gamma);
                return gauss_integrate([&](double s) { return std::pow(s, ez); }, 0.0, s_max, 32);
            };
            return gauss_integrate_dyadic([&](double t) { return std::pow(t, ew) * inner(t); },
                                          0.0, 1.0, 0.0, 32, 52);
        }
        const auto& dom = std::get<LogProfileDomain>(domain_);
        std::vector<double> exponents(dom.dim());
        for (std::size_t k = 0; k < dom.dim(); ++k) exponents[k] = nu[k] + 2.0;
        auto result =
            integrate_exponential_over_profile(dom.profile(), dom.bounding_box(), exponents);
        if (!result.converged)
            throw std::runtime_error("radial moment quadrature did not converge");
        return result.value;
    }

    const ReinhardtDomain& domain_;
    std::map<MultiIndex, double> cache_;
};

}  // namespace

LaurentSeries project_conjugate_by_quadrature(const ReinhardtDomain& domain,
                                              const LaurentSeries& f, int degree_cap) {
    const std::size_t n = domain_dim(domain);
    if (f.dim() != n)
        throw std::invalid_argument("project_conjugate_by_quadrature: dimension mismatch");
    if (degree_cap < 0)
        throw std::invalid_argument("project_conjugate_by_quadrature: degree_cap must be >= 0");
    for (const auto& [beta, c] : f.coefficients())
        if (!admissible(domain, beta))
            throw std::invalid_argument(
                "project_conjugate_by_quadrature: f has inadmissible support at " +
                beta.to_string());

    int support_cap = 0;
    for (const auto& [beta, c] : f.coefficients())
        support_cap = std::max(support_cap, beta.max_abs());
    const int max_freq = 2 * degree_cap + 2 * support_cap;
    const int angular_nodes = 2 * max_freq + 3;

    std::map<int, Complex> angular_cache;
    auto angular = [&](int m) {
        auto it = angular_cache.find(m);
        if (it == angular_cache.end())
            it = angular_cache.emplace(m, angular_trapezoid(m, angular_nodes)).first;
        return it->second;
    };

    RadialMomentEngine radial(domain);
    LaurentSeries out(n);
    for (const auto& alpha : index_window(n, degree_cap)) {
        if (!admissible(domain, alpha)) continue;
        // denominator: quadrature of ||z^alpha||^2
        MultiIndex two_alpha = alpha;
        for (std::size_t k = 0; k < n; ++k) two_alpha[k] = 2 * alpha[k];
        Complex denom = radial.moment(two_alpha);
        for (std::size_t k = 0; k < n; ++k) denom *= angular(0);
        // numerator: <conj(f), z^alpha> = sum_beta conj(f_beta) int conj(z^{alpha+beta}) dV
        Complex numer(0.0, 0.0);
        for (const auto& [beta, f_beta] : f.coefficients()) {
            Complex angular_factor(1.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) angular_factor *= angular(alpha[k] + beta[k]);
            if (std::abs(angular_factor) < 1e-9) continue;  // angularly orthogonal term
            MultiIndex numoment = alpha;
            for (std::size_t k = 0; k < n; ++k) numoment[k] = alpha[k] + beta[k];
            numer += std::conj(f_beta) * std::conj(angular_factor) * radial.moment(numoment);
        }
        out.set_coefficient(alpha, numer / denom);
    }
    return out;
}

ComplexMatrix friedrichs_matrix(const NormTable& norms, const std::vector<MultiIndex>& window) {
    for (const auto& alpha : window)
        if (!norms.admissible(alpha))
            throw std::invalid_argument("friedrichs_matrix: window index " + alpha.to_string() +
                                        " is inadmissible");
    const double c0_sq = norms.volume();
    ComplexMatrix m(window.size(), window.size());
    std::map<MultiIndex, std::size_t> position;
    for (std::size_t i = 0; i < window.size(); ++i) position.emplace(window[i], i);
    for (std::size_t i = 0; i < window.size(); ++i) {
        auto it = position.find(window[i].negated());
        if (it == position.end()) continue;
        std::size_t j = it->second;
        double c_alpha = std::sqrt(norms.norm_sq(window[i]));
        double c_beta = std::sqrt(norms.norm_sq(window[j]));
        m.at(i, j) = Complex(c0_sq / (c_alpha * c_beta), 0.0);
    }
    return m;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    Eigen::MatrixXcd em(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) em(static_cast<Eigen::Index>(i),
                                                    static_cast<Eigen::Index>(j)) = m.at(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
    std::vector<double> sv(svd.singularValues().data(),
                           svd.singularValues().data() + svd.singularValues().size());
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

}  // namespace bergman
