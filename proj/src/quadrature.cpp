#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "bergman/util.hpp"

namespace bergman {

namespace {

GaussRule compute_gauss_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton on P_n with the Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= order; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_rule(order)).first;
    return it->second;
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

double gauss_integrate_dyadic(const std::function<double(double)>& f, double a, double b,
                              double toward, int order, int levels) {
    if (!(a < b)) throw std::invalid_argument("gauss_integrate_dyadic: need a < b");
    const bool toward_left = std::abs(toward - a) < std::abs(toward - b);
    double sum = 0.0;
    double far = toward_left ? b : a;
    double width = b - a;
    for (int level = 0; level < levels; ++level) {
        const bool last = (level == levels - 1);
        double w = last ? width : 0.5 * width;
        double lo, hi;
        if (toward_left) {
            hi = far;
            lo = far - w;
        } else {
            lo = far;
            hi = far + w;
        }
        sum += gauss_integrate(f, lo, hi, order);
        far = toward_left ? lo : hi;
        width -= w;
        if (width <= 0.0) break;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Region quadrature
// ---------------------------------------------------------------------------

namespace {

struct RegionContext {
    const LogProfile* profile;
    std::vector<double> exponents;
    double log_shift;  // subtract from the exponent so the integrand is <= 1
    RegionQuadratureOptions options;
    double column_width_threshold;
    double error_estimate = 0.0;
    bool converged = true;
};

// integral over [a, b] of exp(e x - shift) dx, panel-split Gauss-Legendre
double line_integral(double e, double a, double b, double shift, int gauss_order) {
    int panels = std::max(1, static_cast<int>(std::ceil(std::abs(e) * (b - a) / 8.0)));
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + (b - a) * p / panels;
        double hi = a + (b - a) * (p + 1) / panels;
        sum += gauss_integrate([&](double x) { return std::exp(e * x - shift); }, lo, hi,
                               gauss_order);
    }
    return sum;
}

// fully inside box: the integrand is separable, so the tensor rule factors
double box_integral(const RegionContext& ctx, const LogBox& box) {
    double result = 1.0;
    double shift_left = ctx.log_shift;
    const std::size_t n = box.dim();
    for (std::size_t k = 0; k < n; ++k) {
        double e = ctx.exponents[k];
        // allocate the shift so each factor stays <= 1: subtract this
        // coordinate's max contribution
        double local_shift = (e >= 0.0) ? e * box.hi[k] : e * box.lo[k];
        shift_left -= local_shift;
        result *= line_integral(e, box.lo[k], box.hi[k], local_shift, ctx.options.gauss_order);
    }
    return result * std::exp(-shift_left);
}

// inside segments of rho along a column {t_q = x, x in [lo, hi]}, by scan +
// bisection; returns the integral of exp(e_q x - shift) over {rho < 0}
double column_inside_integral(const RegionContext& ctx, std::vector<double>& point, std::size_t q,
                              double lo, double hi, double shift) {
    const int m = ctx.options.column_scan_points;
    auto rho_at = [&](double x) {
        point[q] = x;
        return ctx.profile->value(point);
    };
    // scan for sign changes
    std::vector<double> xs(m), fs(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = lo + (hi - lo) * i / (m - 1);
        fs[i] = rho_at(xs[i]);
    }
    std::vector<double> cuts;
    cuts.push_back(lo);
    for (int i = 0; i + 1 < m; ++i) {
        if ((fs[i] < 0.0) != (fs[i + 1] < 0.0)) {
            double root =
                bisect([&](double x) { return rho_at(x); }, xs[i], xs[i + 1], 1e-14 * (hi - lo + 1.0));
            cuts.push_back(root);
        }
    }
    cuts.push_back(hi);
    double e = ctx.exponents[q];
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double a = cuts[s], b = cuts[s + 1];
        if (!(b > a)) continue;
        if (rho_at(0.5 * (a + b)) < 0.0) total += line_integral(e, a, b, shift, 8);
    }
    return total;
}

// boundary box resolved by per-column root finding along the transversal
// coordinate, tensor Gauss-Legendre in the transverse coordinates
double column_resolve(const RegionContext& ctx, const LogBox& box) {
    const std::size_t n = box.dim();
    // transversal coordinate from the gradient at the box center
    std::vector<double> center(n);
    for (std::size_t k = 0; k < n; ++k) center[k] = 0.5 * (box.lo[k] + box.hi[k]);
    auto g = ctx.profile->gradient(center);
    std::size_t q = 0;
    double best = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(g[k]) > best) {
            best = std::abs(g[k]);
            q = k;
        }
    }

    std::vector<std::size_t> transverse;
    for (std::size_t k = 0; k < n; ++k)
        if (k != q) transverse.push_back(k);

    // shift budget: total exponent max over this box
    double shift = ctx.log_shift;
    double q_shift = (ctx.exponents[q] >= 0.0) ? ctx.exponents[q] * box.hi[q]
                                               : ctx.exponents[q] * box.lo[q];
    double transverse_shift = shift - q_shift;

    const GaussRule& rule = gauss_legendre(ctx.options.gauss_order);
    const int order = ctx.options.gauss_order;

    std::vector<double> point(n);
    double total = 0.0;
    // odometer over transverse tensor nodes
    std::vector<int> idx(transverse.size(), 0);
    while (true) {
        double weight = 1.0;
        double trans_exponent = 0.0;
        for (std::size_t j = 0; j < transverse.size(); ++j) {
            std::size_t k = transverse[j];
            double mid = 0.5 * (box.lo[k] + box.hi[k]);
            double half = 0.5 * (box.hi[k] - box.lo[k]);
            double x = mid + half * rule.nodes[idx[j]];
            point[k] = x;
            weight *= rule.weights[idx[j]] * half;
            trans_exponent += ctx.exponents[k] * x;
        }
        double column = column_inside_integral(ctx, point, q, box.lo[q], box.hi[q],
                                               q_shift - (trans_exponent - transverse_shift));
        total += weight * column;
        // advance odometer
        std::size_t j = 0;
        for (; j < idx.size(); ++j) {
            if (++idx[j] < order) break;
            idx[j] = 0;
        }
        if (transverse.empty() || j == idx.size()) break;
    }
    return total;
}

std::pair<LogBox, LogBox> split_box(const LogBox& box) {
    std::size_t k = 0;
    double w = -1.0;
    for (std::size_t j = 0; j < box.dim(); ++j) {
        if (box.width(j) > w) {
            w = box.width(j);
            k = j;
        }
    }
    LogBox left = box, right = box;
    double mid = 0.5 * (box.lo[k] + box.hi[k]);
    left.hi[k] = mid;
    right.lo[k] = mid;
    return {left, right};
}

double max_width(const LogBox& box) {
    double w = 0.0;
    for (std::size_t k = 0; k < box.dim(); ++k) w = std::max(w, box.width(k));
    return w;
}

double recurse(RegionContext& ctx, const LogBox& box, int depth) {
    double rho_min = ctx.profile->min_over_box(box);
    double rho_max = ctx.profile->max_over_box(box);
    if (rho_min >= 0.0) return 0.0;          // outside (boundary has measure zero)
    if (rho_max < 0.0) return box_integral(ctx, box);  // fully inside

    if (depth >= ctx.options.max_depth) {
        // give up on this sliver; bound its contribution by integrand max * volume
        double bound = 1.0;
        for (std::size_t k = 0; k < box.dim(); ++k) bound *= box.width(k);
        double emax = -ctx.log_shift;
        for (std::size_t k = 0; k < box.dim(); ++k)
            emax += (ctx.exponents[k] >= 0.0) ? ctx.exponents[k] * box.hi[k]
                                              : ctx.exponents[k] * box.lo[k];
        ctx.error_estimate += bound * std::exp(emax);
        ctx.converged = false;
        return 0.0;
    }

    if (max_width(box) <= ctx.column_width_threshold) {
        // resolve the boundary crossing by root finding; estimate the error by
        // comparing against the two halves resolved separately
        double coarse = column_resolve(ctx, box);
        auto [left, right] = split_box(box);
        double fine = 0.0;
        for (const LogBox* half : {&left, &right}) {
            double hmin = ctx.profile->min_over_box(*half);
            double hmax = ctx.profile->max_over_box(*half);
            if (hmin >= 0.0) continue;
            if (hmax < 0.0)
                fine += box_integral(ctx, *half);
            else
                fine += column_resolve(ctx, *half);
        }
        ctx.error_estimate += std::abs(fine - coarse);
        return fine;
    }

    auto [left, right] = split_box(box);
    return recurse(ctx, left, depth + 1) + recurse(ctx, right, depth + 1);
}

}  // namespace

RegionQuadratureResult integrate_exponential_over_profile(const LogProfile& profile,
                                                          const LogBox& bounding_box,
                                                          const std::vector<double>& exponents,
                                                          const RegionQuadratureOptions& options) {
    if (bounding_box.dim() != profile.dim() || exponents.size() != profile.dim())
        throw std::invalid_argument("integrate_exponential_over_profile: dimension mismatch");

    RegionContext ctx;
    ctx.profile = &profile;
    ctx.exponents = exponents;
    ctx.options = options;
    ctx.log_shift = 0.0;
    for (std::size_t k = 0; k < exponents.size(); ++k)
        ctx.log_shift += (exponents[k] >= 0.0) ? exponents[k] * bounding_box.hi[k]
                                               : exponents[k] * bounding_box.lo[k];
    ctx.column_width_threshold =
        max_width(bounding_box) * std::pow(0.5, options.column_depth);

    double raw = recurse(ctx, bounding_box, 0);

    RegionQuadratureResult result;
    result.log_scale = ctx.log_shift;
    result.value = raw * std::exp(ctx.log_shift);
    result.error_estimate = ctx.error_estimate * std::exp(ctx.log_shift);
    double tol = options.abs_tol + options.rel_tol * std::abs(result.value);
    result.converged = ctx.converged && result.error_estimate <= std::max(tol, 1e-300);
    return result;
}

}  // namespace bergman
