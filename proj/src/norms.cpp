#include "bergman/norms.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bergman/util.hpp"

namespace bergman {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxQuadratureIndex = 500;

double hartogs_norm_sq(double gamma, int j, int k) {
    // iterated radial integral over {s^gamma < t < 1}:
    //   (2 pi)^2 / (2j+2) * int_0^1 t^{2k+1 + (2j+2)/gamma} dt
    // finite iff j >= 0 and (2j+2) + gamma (2k+2) > 0
    if (j < 0) return kInf;
    double tail = (2.0 * j + 2.0) + gamma * (2.0 * k + 2.0);
    if (!(tail > 0.0)) return kInf;
    return sq(2.0 * M_PI) * gamma / ((2.0 * j + 2.0) * tail);
}

bool hartogs_admissible(double gamma, int j, int k) {
    return j >= 0 && (2.0 * j + 2.0) + gamma * (2.0 * k + 2.0) > 0.0;
}

double log_profile_norm_sq(const LogProfileDomain& domain, const MultiIndex& alpha) {
    if (alpha.max_abs() > kMaxQuadratureIndex)
        throw std::invalid_argument("norm_sq: |alpha_k| > 500 refused in quadrature mode");
    std::vector<double> exponents(domain.dim());
    for (std::size_t k = 0; k < domain.dim(); ++k) exponents[k] = 2.0 * alpha[k] + 2.0;
    auto result = integrate_exponential_over_profile(domain.profile(), domain.bounding_box(),
                                                     exponents);
    if (!result.converged) {
        std::ostringstream os;
        os << "norm_sq: region quadrature did not converge for alpha=" << alpha.to_string()
           << " (error estimate " << result.error_estimate << ")";
        throw std::runtime_error(os.str());
    }
    double angular = std::pow(2.0 * M_PI, static_cast<double>(domain.dim()));
    return angular * result.value;
}

}  // namespace

double norm_sq_annulus_1d(int j, double r, double R) {
    if (!(r >= 0.0) || !(R > r)) throw std::invalid_argument("norm_sq_annulus_1d: need 0 <= r < R");
    if (r == 0.0 && j <= -1) return kInf;
    if (j == -1) return 2.0 * M_PI * std::log(R / r);
    double e = 2.0 * j + 2.0;
    return 2.0 * M_PI * (std::pow(R, e) - std::pow(r, e)) / e;
}

double norm_sq(const ReinhardtDomain& domain, const MultiIndex& alpha) {
    if (alpha.dim() != domain_dim(domain)) throw std::invalid_argument("norm_sq: dimension mismatch");
    if (const auto* annuli = std::get_if<AnnulusProduct>(&domain)) {
        double product = 1.0;
        for (std::size_t k = 0; k < annuli->dim(); ++k) {
            double factor = norm_sq_annulus_1d(alpha[k], annuli->inner(k), annuli->outer(k));
            if (factor == kInf) return kInf;
            product *= factor;
        }
        return product;
    }
    if (const auto* hartogs = std::get_if<HartogsDomain>(&domain))
        return hartogs_norm_sq(hartogs->gamma(), alpha[0], alpha[1]);
    return log_profile_norm_sq(std::get<LogProfileDomain>(domain), alpha);
}

bool admissible(const ReinhardtDomain& domain, const MultiIndex& alpha) {
    if (alpha.dim() != domain_dim(domain))
        throw std::invalid_argument("admissible: dimension mismatch");
    if (const auto* annuli = std::get_if<AnnulusProduct>(&domain)) {
        for (std::size_t k = 0; k < annuli->dim(); ++k)
            if (annuli->inner(k) == 0.0 && alpha[k] < 0) return false;
        return true;
    }
    if (const auto* hartogs = std::get_if<HartogsDomain>(&domain))
        return hartogs_admissible(hartogs->gamma(), alpha[0], alpha[1]);
    return true;  // log-profile closure avoids the axes, every alpha in Z^n is L2
}

NormTable::NormTable(ReinhardtDomain domain) : domain_(std::move(domain)) {}

const NormTable::Entry& NormTable::lookup(const MultiIndex& alpha) const {
    if (alpha.dim() != dim()) throw std::invalid_argument("NormTable: dimension mismatch");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = table_.find(alpha);
        if (it != table_.end()) return it->second;
    }
    Entry entry;
    entry.method = std::holds_alternative<LogProfileDomain>(domain_) ? NormMethod::quadrature
                                                                     : NormMethod::closed_form;
    entry.value = bergman::norm_sq(domain_, alpha);
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(alpha, entry).first->second;
}

double NormTable::norm_sq(const MultiIndex& alpha) const { return lookup(alpha).value; }

bool NormTable::admissible(const MultiIndex& alpha) const {
    return bergman::admissible(domain_, alpha);
}

NormMethod NormTable::method(const MultiIndex& alpha) const { return lookup(alpha).method; }

void NormTable::export_csv(std::ostream& os, const std::vector<MultiIndex>& window) const {
    const std::size_t n = dim();
    for (std::size_t k = 0; k < n; ++k) os << "alpha_" << (k + 1) << ",";
    os << "norm_sq,method\n";
    std::ostringstream num;
    num.precision(17);
    for (const auto& alpha : window) {
        for (std::size_t k = 0; k < n; ++k) os << alpha[k] << ",";
        double v = norm_sq(alpha);
        if (v == std::numeric_limits<double>::infinity()) {
            os << "inf";
        } else {
            num.str("");
            num << v;
            os << num.str();
        }
        os << "," << (method(alpha) == NormMethod::closed_form ? "closed-form" : "quadrature")
           << "\n";
    }
}

}  // namespace bergman
