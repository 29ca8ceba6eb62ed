#include "bergman/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bergman/util.hpp"

namespace bergman {

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string format_vector(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += format_double(v[k]);
    }
    return s + "]";
}

}  // namespace

bool LogBox::contains(const std::vector<double>& t, double margin) const {
    if (t.size() != lo.size()) throw std::invalid_argument("LogBox::contains: dimension mismatch");
    for (std::size_t k = 0; k < lo.size(); ++k)
        if (t[k] <= lo[k] + margin || t[k] >= hi[k] - margin) return false;
    return true;
}

double LogBox::min_margin(const std::vector<double>& t) const {
    if (t.size() != lo.size()) throw std::invalid_argument("LogBox::min_margin: dimension mismatch");
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < lo.size(); ++k)
        m = std::min(m, std::min(t[k] - lo[k], hi[k] - t[k]));
    return m;
}

// ----------------------------------------------------------------- profiles

LogBallProfile::LogBallProfile(std::vector<double> center, double radius)
    : center_(std::move(center)), radius_(radius) {
    if (center_.empty()) throw std::invalid_argument("LogBallProfile: dimension must be >= 1");
    if (!(radius_ > 0.0)) throw std::invalid_argument("LogBallProfile: radius must be positive");
}

double LogBallProfile::value(const std::vector<double>& t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < center_.size(); ++k) s += sq(t[k] - center_[k]);
    return s - sq(radius_);
}

std::vector<double> LogBallProfile::gradient(const std::vector<double>& t) const {
    std::vector<double> g(center_.size());
    for (std::size_t k = 0; k < center_.size(); ++k) g[k] = 2.0 * (t[k] - center_[k]);
    return g;
}

double LogBallProfile::min_over_box(const LogBox& box) const {
    // separable quadratic: minimize each (t_k - c_k)^2 by clamping c_k to the box
    double s = 0.0;
    for (std::size_t k = 0; k < center_.size(); ++k) {
        double c = std::clamp(center_[k], box.lo[k], box.hi[k]);
        s += sq(c - center_[k]);
    }
    return s - sq(radius_);
}

double LogBallProfile::max_over_box(const LogBox& box) const {
    double s = 0.0;
    for (std::size_t k = 0; k < center_.size(); ++k)
        s += std::max(sq(box.lo[k] - center_[k]), sq(box.hi[k] - center_[k]));
    return s - sq(radius_);
}

std::string LogBallProfile::describe() const {
    return "log_ball(center=" + format_vector(center_) + ",radius=" + format_double(radius_) + ")";
}

LogEllipsoidProfile::LogEllipsoidProfile(std::vector<double> center, std::vector<double> semi_axes)
    : center_(std::move(center)), semi_axes_(std::move(semi_axes)) {
    if (center_.empty() || center_.size() != semi_axes_.size())
        throw std::invalid_argument("LogEllipsoidProfile: center/semi_axes size mismatch");
    for (double a : semi_axes_)
        if (!(a > 0.0)) throw std::invalid_argument("LogEllipsoidProfile: semi-axes must be positive");
}

double LogEllipsoidProfile::value(const std::vector<double>& t) const {
    double s = 0.0;
    for (std::size_t k = 0; k < center_.size(); ++k) s += sq((t[k] - center_[k]) / semi_axes_[k]);
    return s - 1.0;
}

std::vector<double> LogEllipsoidProfile::gradient(const std::vector<double>& t) const {
    std::vector<double> g(center_.size());
    for (std::size_t k = 0; k < center_.size(); ++k)
        g[k] = 2.0 * (t[k] - center_[k]) / sq(semi_axes_[k]);
    return g;
}

double LogEllipsoidProfile::min_over_box(const LogBox& box) const {
    double s = 0.0;
    for (std::size_t k = 0; k < center_.size(); ++k) {
        double c = std::clamp(center_[k], box.lo[k], box.hi[k]);
        s += sq((c - center_[k]) / semi_axes_[k]);
    }
    return s - 1.0;
}

double LogEllipsoidProfile::max_over_box(const LogBox& box) const {
    double s = 0.0;
    for (std::size_t k = 0; k < center_.size(); ++k)
        s += std::max(sq((box.lo[k] - center_[k]) / semi_axes_[k]),
                      sq((box.hi[k] - center_[k]) / semi_axes_[k]));
    return s - 1.0;
}

std::string LogEllipsoidProfile::describe() const {
    return "log_ellipsoid(center=" + format_vector(center_) + ",semi_axes=" +
           format_vector(semi_axes_) + ")";
}

LogBoxProfile::LogBoxProfile(LogBox box) : box_(std::move(box)) {
    if (box_.dim() == 0) throw std::invalid_argument("LogBoxProfile: dimension must be >= 1");
    for (std::size_t k = 0; k < box_.dim(); ++k)
        if (!(box_.lo[k] < box_.hi[k])) throw std::invalid_argument("LogBoxProfile: empty box");
}

double LogBoxProfile::value(const std::vector<double>& t) const {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < box_.dim(); ++k)
        m = std::max(m, std::max(box_.lo[k] - t[k], t[k] - box_.hi[k]));
    return m;
}

std::vector<double> LogBoxProfile::gradient(const std::vector<double>& t) const {
    // gradient of the active face term; ties resolved toward the lowest index
    std::size_t best_k = 0;
    double best = -std::numeric_limits<double>::infinity();
    double sign = 1.0;
    for (std::size_t k = 0; k < box_.dim(); ++k) {
        double lo_term = box_.lo[k] - t[k];
        double hi_term = t[k] - box_.hi[k];
        if (lo_term > best) {
            best = lo_term;
            best_k = k;
            sign = -1.0;
        }
        if (hi_term > best) {
            best = hi_term;
            best_k = k;
            sign = 1.0;
        }
    }
    std::vector<double> g(box_.dim(), 0.0);
    g[best_k] = sign;
    return g;
}

double LogBoxProfile::min_over_box(const LogBox& box) const {
    // value is max_k g_k(t_k) with each g_k V-shaped about the face midpoint;
    // the separable minimum is exact
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < box_.dim(); ++k) {
        double x = std::clamp(0.5 * (box_.lo[k] + box_.hi[k]), box.lo[k], box.hi[k]);
        m = std::max(m, std::max(box_.lo[k] - x, x - box_.hi[k]));
    }
    return m;
}

double LogBoxProfile::max_over_box(const LogBox& box) const {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < box_.dim(); ++k) {
        double worst = -std::numeric_limits<double>::infinity();
        for (double x : {box.lo[k], box.hi[k]})
            worst = std::max(worst, std::max(box_.lo[k] - x, x - box_.hi[k]));
        m = std::max(m, worst);
    }
    return m;
}

std::string LogBoxProfile::describe() const {
    return "log_box(lo=" + format_vector(box_.lo) + ",hi=" + format_vector(box_.hi) + ")";
}

// ------------------------------------------------------------ domain types

AnnulusProduct::AnnulusProduct(std::vector<std::pair<double, double>> radii)
    : radii_(std::move(radii)) {
    if (radii_.empty()) throw std::invalid_argument("AnnulusProduct: dimension must be >= 1");
    for (const auto& [r, R] : radii_) {
        if (!(r >= 0.0) || !(R > r) || !std::isfinite(R))
            throw std::invalid_argument("AnnulusProduct: need 0 <= r < R < inf");
    }
}

bool AnnulusProduct::off_axes() const {
    return std::all_of(radii_.begin(), radii_.end(), [](const auto& p) { return p.first > 0.0; });
}

bool AnnulusProduct::contains_moduli(const std::vector<double>& moduli) const {
    if (moduli.size() != radii_.size())
        throw std::invalid_argument("AnnulusProduct: dimension mismatch");
    for (std::size_t k = 0; k < radii_.size(); ++k)
        if (!(radii_[k].first < moduli[k] && moduli[k] < radii_[k].second)) return false;
    return true;
}

LogBox AnnulusProduct::log_box() const {
    if (!off_axes())
        throw std::invalid_argument("AnnulusProduct::log_box: requires all inner radii > 0");
    LogBox box;
    for (const auto& [r, R] : radii_) {
        box.lo.push_back(std::log(r));
        box.hi.push_back(std::log(R));
    }
    return box;
}

AnnulusProduct AnnulusProduct::scaled(double lambda) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("AnnulusProduct::scaled: lambda must be > 0");
    auto radii = radii_;
    for (auto& [r, R] : radii) {
        r *= lambda;
        R *= lambda;
    }
    return AnnulusProduct(std::move(radii));
}

std::string AnnulusProduct::describe() const {
    std::string s = "annulus_product(";
    for (std::size_t k = 0; k < radii_.size(); ++k) {
        if (k) s += ",";
        s += "[" + format_double(radii_[k].first) + "," + format_double(radii_[k].second) + "]";
    }
    return s + ")";
}

HartogsDomain::HartogsDomain(double gamma) : gamma_(gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("HartogsDomain: gamma must be positive");
}

bool HartogsDomain::contains_moduli(const std::vector<double>& moduli) const {
    if (moduli.size() != 2) throw std::invalid_argument("HartogsDomain: dimension mismatch");
    return std::pow(moduli[0], gamma_) < moduli[1] && moduli[1] < 1.0;
}

std::string HartogsDomain::describe() const {
    return "hartogs(gamma=" + format_double(gamma_) + ")";
}

LogProfileDomain::LogProfileDomain(std::shared_ptr<const LogProfile> profile, LogBox bounding_box,
                                   std::vector<double> interior_point)
    : profile_(std::move(profile)),
      bounding_box_(std::move(bounding_box)),
      interior_point_(std::move(interior_point)) {
    if (!profile_) throw std::invalid_argument("LogProfileDomain: null profile");
    if (bounding_box_.dim() != profile_->dim() || interior_point_.size() != profile_->dim())
        throw std::invalid_argument("LogProfileDomain: dimension mismatch");
    if (!(profile_->value(interior_point_) < 0.0))
        throw std::invalid_argument("LogProfileDomain: interior point not inside {rho < 0}");
}

bool LogProfileDomain::contains_moduli(const std::vector<double>& moduli) const {
    if (moduli.size() != dim()) throw std::invalid_argument("LogProfileDomain: dimension mismatch");
    std::vector<double> t(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        if (!(moduli[k] > 0.0)) return false;  // closure off the axes
        t[k] = std::log(moduli[k]);
    }
    return contains_log(t);
}

std::string LogProfileDomain::describe() const {
    return "log_profile(" + profile_->describe() + ")";
}

LogProfileDomain LogProfileDomain::ball(std::vector<double> center, double radius) {
    auto profile = std::make_shared<LogBallProfile>(center, radius);
    LogBox box;
    for (double c : center) {
        box.lo.push_back(c - radius - 0.5);
        box.hi.push_back(c + radius + 0.5);
    }
    return LogProfileDomain(profile, std::move(box), std::move(center));
}

LogProfileDomain LogProfileDomain::ellipsoid(std::vector<double> center,
                                             std::vector<double> semi_axes) {
    auto profile = std::make_shared<LogEllipsoidProfile>(center, semi_axes);
    LogBox box;
    for (std::size_t k = 0; k < center.size(); ++k) {
        box.lo.push_back(center[k] - semi_axes[k] - 0.5);
        box.hi.push_back(center[k] + semi_axes[k] + 0.5);
    }
    return LogProfileDomain(profile, std::move(box), std::move(center));
}

LogProfileDomain LogProfileDomain::box(const LogBox& box) {
    auto profile = std::make_shared<LogBoxProfile>(box);
    LogBox bounding;
    std::vector<double> anchor;
    for (std::size_t k = 0; k < box.dim(); ++k) {
        // pad asymmetrically so recursive splits do not align with the faces
        double w = box.width(k);
        bounding.lo.push_back(box.lo[k] - 0.37 * w - 0.05);
        bounding.hi.push_back(box.hi[k] + 0.29 * w + 0.05);
        anchor.push_back(0.5 * (box.lo[k] + box.hi[k]));
    }
    return LogProfileDomain(profile, std::move(bounding), std::move(anchor));
}

// -------------------------------------------------------------- membership

std::size_t domain_dim(const ReinhardtDomain& domain) {
    return std::visit([](const auto& d) { return d.dim(); }, domain);
}

std::string domain_describe(const ReinhardtDomain& domain) {
    return std::visit([](const auto& d) { return d.describe(); }, domain);
}

bool contains_moduli(const ReinhardtDomain& domain, const std::vector<double>& moduli) {
    return std::visit([&](const auto& d) { return d.contains_moduli(moduli); }, domain);
}

bool contains(const ReinhardtDomain& domain, const ComplexPoint& point) {
    if (point.size() != domain_dim(domain))
        throw std::invalid_argument("contains: dimension mismatch");
    std::vector<double> moduli(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) moduli[k] = std::abs(point[k]);
    return contains_moduli(domain, moduli);
}

// -------------------------------------------------------- boundary samples

std::vector<BoundarySample> boundary_samples(const LogProfileDomain& domain, int count,
                                             std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("boundary_samples: count must be >= 0");
    const auto& profile = domain.profile();
    const auto& box = domain.bounding_box();
    const auto& anchor = domain.interior_point();
    const std::size_t n = domain.dim();

    double diag = 0.0;
    for (std::size_t k = 0; k < n; ++k) diag += sq(box.width(k));
    diag = std::sqrt(diag);

    Rng rng(seed);
    std::vector<BoundarySample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto dir = rng.unit_direction(n);
        auto at = [&](double s) {
            std::vector<double> t(n);
            for (std::size_t k = 0; k < n; ++k) t[k] = anchor[k] + s * dir[k];
            return t;
        };
        // march outward until rho changes sign; the ray must cross before
        // leaving the bounding box
        double s_lo = 0.0;
        double f_lo = profile.value(anchor);
        double step = 1e-3 * diag;
        double s_hi = step;
        bool bracketed = false;
        while (true) {
            auto t = at(s_hi);
            bool inside_box = true;
            for (std::size_t k = 0; k < n; ++k)
                if (t[k] < box.lo[k] || t[k] > box.hi[k]) inside_box = false;
            if (!inside_box)
                throw std::runtime_error(
                    "boundary_samples: ray left the bounding box before crossing {rho = 0}; "
                    "bounding box inconsistent with the profile");
            double f = profile.value(t);
            if ((f < 0.0) != (f_lo < 0.0) || f == 0.0) {
                bracketed = true;
                break;
            }
            s_lo = s_hi;
            f_lo = f;
            s_hi += step;
            step *= 2.0;
        }
        (void)bracketed;
        double s_root = bisect([&](double s) { return profile.value(at(s)); }, s_lo, s_hi, 1e-13);
        BoundarySample sample;
        sample.log_point = at(s_root);
        sample.moduli.resize(n);
        for (std::size_t k = 0; k < n; ++k) sample.moduli[k] = std::exp(sample.log_point[k]);
        auto g = profile.gradient(sample.log_point);
        double norm = 0.0;
        for (double v : g) norm += v * v;
        norm = std::sqrt(norm);
        if (norm < 1e-10)
            throw std::runtime_error("boundary_samples: vanishing gradient on the boundary");
        sample.unit_normal.resize(n);
        for (std::size_t k = 0; k < n; ++k) sample.unit_normal[k] = g[k] / norm;
        out.push_back(std::move(sample));
    }
    return out;
}

std::vector<BoundarySample> boundary_samples(const AnnulusProduct& domain, int count,
                                             std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("boundary_samples: count must be >= 0");
    if (!domain.off_axes())
        throw std::invalid_argument("boundary_samples: annulus product must be off the axes");
    const std::size_t n = domain.dim();
    LogBox box = domain.log_box();
    Rng rng(seed);
    std::vector<BoundarySample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::size_t face = static_cast<std::size_t>(i) % (2 * n);
        std::size_t k0 = face / 2;
        bool outer_face = (face % 2) == 1;
        BoundarySample sample;
        sample.log_point.resize(n);
        sample.unit_normal.assign(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == k0)
                sample.log_point[k] = outer_face ? box.hi[k] : box.lo[k];
            else
                sample.log_point[k] = rng.uniform(box.lo[k], box.hi[k]);
        }
        sample.unit_normal[k0] = outer_face ? 1.0 : -1.0;
        sample.moduli.resize(n);
        for (std::size_t k = 0; k < n; ++k) sample.moduli[k] = std::exp(sample.log_point[k]);
        out.push_back(std::move(sample));
    }
    return out;
}

}  // namespace bergman
