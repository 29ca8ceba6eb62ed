#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;
using ComplexPoint = std::vector<Complex>;

// Axis-aligned box in log-modulus coordinates t_k = log|z_k|.
struct LogBox {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t dim() const { return lo.size(); }
    bool contains(const std::vector<double>& t, double margin = 0.0) const;
    double min_margin(const std::vector<double>& t) const;  // L-inf distance to complement, <0 outside
    double width(std::size_t k) const { return hi[k] - lo[k]; }
};

// ---------------------------------------------------------------------------
// Modulus profiles in log coordinates.
//
// A profile is a scalar function rho on R^n; the associated Reinhardt domain
// is {z : rho(log|z_1|, ..., log|z_n|) < 0}. Working in log coordinates makes
// annulus products into boxes and log-convex hulls into ordinary convex
// hulls.
// ---------------------------------------------------------------------------
class LogProfile {
public:
    virtual ~LogProfile() = default;

    virtual std::size_t dim() const = 0;
    virtual double value(const std::vector<double>& t) const = 0;
    virtual std::vector<double> gradient(const std::vector<double>& t) const = 0;

    // Exact bounds of rho over an axis-aligned box. Every catalog profile is
    // separable or corner-extremal, so these are tight, which lets the region
    // quadrature and patch containment checks certify boxes rigorously.
    virtual double min_over_box(const LogBox& box) const = 0;
    virtual double max_over_box(const LogBox& box) const = 0;

    // e.g. "log_ball(center=[0,0],radius=0.5)" -- used for domain hashing
    virtual std::string describe() const = 0;
};

// rho(t) = sum (t_k - c_k)^2 - R^2
class LogBallProfile final : public LogProfile {
public:
    LogBallProfile(std::vector<double> center, double radius);
    std::size_t dim() const override { return center_.size(); }
    double value(const std::vector<double>& t) const override;
    std::vector<double> gradient(const std::vector<double>& t) const override;
    double min_over_box(const LogBox& box) const override;
    double max_over_box(const LogBox& box) const override;
    std::string describe() const override;
    const std::vector<double>& center() const { return center_; }
    double radius() const { return radius_; }

private:
    std::vector<double> center_;
    double radius_;
};

// rho(t) = sum ((t_k - c_k)/a_k)^2 - 1
class LogEllipsoidProfile final : public LogProfile {
public:
    LogEllipsoidProfile(std::vector<double> center, std::vector<double> semi_axes);
    std::size_t dim() const override { return center_.size(); }
    double value(const std::vector<double>& t) const override;
    std::vector<double> gradient(const std::vector<double>& t) const override;
    double min_over_box(const LogBox& box) const override;
    double max_over_box(const LogBox& box) const override;
    std::string describe() const override;

private:
    std::vector<double> center_;
    std::vector<double> semi_axes_;
};

// rho(t) = max_k max(lo_k - t_k, t_k - hi_k). The log profile of an annulus
// product; C1 away from the box edges. Used to cross-check the region
// quadrature against closed-form annulus norms.
class LogBoxProfile final : public LogProfile {
public:
    explicit LogBoxProfile(LogBox box);
    std::size_t dim() const override { return box_.dim(); }
    double value(const std::vector<double>& t) const override;
    std::vector<double> gradient(const std::vector<double>& t) const override;
    double min_over_box(const LogBox& box) const override;
    double max_over_box(const LogBox& box) const override;
    std::string describe() const override;

private:
    LogBox box_;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// prod_k A(r_k, R_k) with 0 <= r_k < R_k. r_k = 0 gives the (punctured) disc
// factor; the extension machinery additionally requires r_k > 0 everywhere
// (closure off the coordinate axes).
class AnnulusProduct {
public:
    explicit AnnulusProduct(std::vector<std::pair<double, double>> radii);
    AnnulusProduct(double r, double R) : AnnulusProduct(std::vector<std::pair<double, double>>{{r, R}}) {}

    std::size_t dim() const { return radii_.size(); }
    double inner(std::size_t k) const { return radii_[k].first; }
    double outer(std::size_t k) const { return radii_[k].second; }
    const std::vector<std::pair<double, double>>& radii() const { return radii_; }

    bool off_axes() const;  // all r_k > 0
    bool contains_moduli(const std::vector<double>& moduli) const;
    LogBox log_box() const;  // requires off_axes()
    AnnulusProduct scaled(double lambda) const;

    std::string describe() const;

private:
    std::vector<std::pair<double, double>> radii_;
};

// Fat Hartogs triangle {|z|^gamma < |w| < 1} in C^2. Its closure meets the
// coordinate axes at the origin, so it is exempt from the extension
// guarantees; it exists to exercise exactly that failure mode.
class HartogsDomain {
public:
    explicit HartogsDomain(double gamma);
    double gamma() const { return gamma_; }
    std::size_t dim() const { return 2; }
    bool contains_moduli(const std::vector<double>& moduli) const;
    std::string describe() const;

private:
    double gamma_;
};

// Bounded Reinhardt domain given by a C1 modulus profile in log coordinates.
class LogProfileDomain {
public:
    LogProfileDomain(std::shared_ptr<const LogProfile> profile, LogBox bounding_box,
                     std::vector<double> interior_point);

    std::size_t dim() const { return profile_->dim(); }
    const LogProfile& profile() const { return *profile_; }
    const LogBox& bounding_box() const { return bounding_box_; }
    const std::vector<double>& interior_point() const { return interior_point_; }

    bool contains_moduli(const std::vector<double>& moduli) const;
    bool contains_log(const std::vector<double>& t) const { return profile_->value(t) < 0.0; }

    std::string describe() const;

    static LogProfileDomain ball(std::vector<double> center, double radius);
    static LogProfileDomain ellipsoid(std::vector<double> center, std::vector<double> semi_axes);
    static LogProfileDomain box(const LogBox& box);  // profile of an annulus product

private:
    std::shared_ptr<const LogProfile> profile_;
    LogBox bounding_box_;
    std::vector<double> interior_point_;
};

using ReinhardtDomain = std::variant<AnnulusProduct, HartogsDomain, LogProfileDomain>;

std::size_t domain_dim(const ReinhardtDomain& domain);
std::string domain_describe(const ReinhardtDomain& domain);

// Membership of a complex point (strict inequalities on moduli).
bool contains(const ReinhardtDomain& domain, const ComplexPoint& point);
bool contains_moduli(const ReinhardtDomain& domain, const std::vector<double>& moduli);

// ---------------------------------------------------------------------------
// Boundary sampling
// ---------------------------------------------------------------------------
struct BoundarySample {
    std::vector<double> log_point;    // t with |rho(t)| <= tol
    std::vector<double> moduli;       // exp(t)
    std::vector<double> unit_normal;  // outward normal in log coordinates
};

// Seeded quasi-random rays from the interior anchor, bisected to the zero set
// of rho (1e-12 in log coordinates). Throws if a ray leaves the bounding box
// before rho changes sign, which signals a box inconsistent with the profile.
std::vector<BoundarySample> boundary_samples(const LogProfileDomain& domain, int count,
                                             std::uint64_t seed);

// Face samples of the log box with axis-aligned face normals.
std::vector<BoundarySample> boundary_samples(const AnnulusProduct& domain, int count,
                                             std::uint64_t seed);

}  // namespace bergman
