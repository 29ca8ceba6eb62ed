#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace bergman {

// z^e by repeated squaring; negative exponents via complex division.
inline std::complex<double> ipow(std::complex<double> z, int e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    std::complex<double> result(1.0, 0.0);
    while (e) {
        if (e & 1) result *= z;
        z *= z;
        e >>= 1;
    }
    return result;
}

// Deterministic uniform/gaussian draws on top of mt19937_64. The standard
// distributions are implementation-defined, so artifacts that must be
// byte-stable across toolchains derive doubles from raw bits instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform on [0, 1)
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // standard normal via Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform01();
        double u2 = uniform01();
        double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return mag * std::cos(2.0 * M_PI * u2);
    }

    // uniform direction on the unit sphere in R^n
    std::vector<double> unit_direction(std::size_t n) {
        std::vector<double> d(n);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& v : d) {
                v = gaussian();
                norm += v * v;
            }
        } while (norm < 1e-24);
        norm = std::sqrt(norm);
        for (auto& v : d) v /= norm;
        return d;
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Bisection on [lo, hi] with f(lo) and f(hi) of opposite sign. Returns the
// midpoint of the final bracket of width <= xtol.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("bisect: endpoints do not bracket a root");
    while (hi - lo > xtol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double sq(double x) { return x * x; }

}  // namespace bergman
