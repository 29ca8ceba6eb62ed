#include "bergman/laurent.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bergman/util.hpp"

namespace bergman {

Complex LaurentSeries::coefficient(const MultiIndex& alpha) const {
    auto it = coefficients_.find(alpha);
    return it == coefficients_.end() ? Complex(0.0, 0.0) : it->second;
}

void LaurentSeries::set_coefficient(const MultiIndex& alpha, Complex value) {
    if (alpha.dim() != dim_) throw std::invalid_argument("LaurentSeries: dimension mismatch");
    if (std::abs(value) < kPruneThreshold)
        coefficients_.erase(alpha);
    else
        coefficients_[alpha] = value;
}

void LaurentSeries::add_term(const MultiIndex& alpha, Complex value) {
    set_coefficient(alpha, coefficient(alpha) + value);
}

bool LaurentSeries::has_negative_index() const {
    for (const auto& [alpha, c] : coefficients_)
        for (std::size_t k = 0; k < dim_; ++k)
            if (alpha[k] < 0) return true;
    return false;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("LaurentSeries: dimension mismatch");
    for (const auto& [alpha, c] : other.coefficients_) add_term(alpha, c);
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(Complex scalar) {
    std::map<MultiIndex, Complex> scaled;
    for (const auto& [alpha, c] : coefficients_) {
        Complex v = scalar * c;
        if (std::abs(v) >= kPruneThreshold) scaled.emplace(alpha, v);
    }
    coefficients_ = std::move(scaled);
    return *this;
}

Complex evaluate(const LaurentSeries& series, const ComplexPoint& point) {
    if (point.size() != series.dim()) throw std::invalid_argument("evaluate: dimension mismatch");
    Complex total(0.0, 0.0);
    for (const auto& [alpha, c] : series.coefficients()) {
        Complex term = c;
        for (std::size_t k = 0; k < point.size(); ++k) {
            int e = alpha[k];
            if (e == 0) continue;
            if (point[k] == Complex(0.0, 0.0)) {
                if (e < 0)
                    throw std::domain_error("evaluate: zero coordinate with negative exponent");
                term = Complex(0.0, 0.0);
                continue;
            }
            term *= ipow(point[k], e);
        }
        total += term;
    }
    return total;
}

LaurentSeries read_series(std::istream& is, std::size_t dim) {
    LaurentSeries series(dim);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> entries(dim);
        double re = 0.0, im = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            if (!(ls >> entries[k]))
                throw std::runtime_error("read_series: bad index on line " + std::to_string(line_no));
        }
        if (!(ls >> re >> im))
            throw std::runtime_error("read_series: bad coefficient on line " +
                                     std::to_string(line_no));
        series.add_term(MultiIndex(entries), Complex(re, im));
    }
    return series;
}

void write_series(std::ostream& os, const LaurentSeries& series, const std::string& domain_hash) {
    os << "# {\"domain_hash\":\"" << domain_hash << "\"";
    if (series.truncation) {
        std::ostringstream num;
        num.precision(17);
        num << series.truncation->tail_bound;
        os << ",\"truncation\":{\"max_total_degree\":" << series.truncation->max_total_degree
           << ",\"tail_bound\":" << num.str() << "}";
    }
    os << "}\n";
    std::ostringstream num;
    num.precision(17);
    for (const auto& [alpha, c] : series.coefficients()) {
        for (std::size_t k = 0; k < series.dim(); ++k) os << alpha[k] << " ";
        num.str("");
        num << c.real() << " " << c.imag();
        os << num.str() << "\n";
    }
}

std::string domain_hash(const ReinhardtDomain& domain) {
    const std::string desc = domain_describe(domain);
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char ch : desc) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << hash;
    return os.str();
}

}  // namespace bergman
