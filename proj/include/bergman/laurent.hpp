#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "bergman/domains.hpp"
#include "bergman/multi_index.hpp"

namespace bergman {

// Truncation metadata attached to series that stand for an infinite expansion.
struct TruncationRecord {
    int max_total_degree = 0;
    double tail_bound = 0.0;
};

// Sparse Laurent series sum_alpha c_alpha z^alpha. Stored coefficients are
// nonzero (canonical sparsity); coefficients whose magnitude drops below the
// pruning threshold after arithmetic are removed so that series compare
// deterministically.
class LaurentSeries {
public:
    static constexpr double kPruneThreshold = 1e-14;

    explicit LaurentSeries(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::map<MultiIndex, Complex>& coefficients() const { return coefficients_; }
    std::size_t term_count() const { return coefficients_.size(); }
    bool empty() const { return coefficients_.empty(); }

    Complex coefficient(const MultiIndex& alpha) const;
    void set_coefficient(const MultiIndex& alpha, Complex value);  // erases below threshold
    void add_term(const MultiIndex& alpha, Complex value);

    bool has_negative_index() const;

    std::optional<AnnulusProduct> convergence_hint;
    std::optional<TruncationRecord> truncation;

    LaurentSeries& operator+=(const LaurentSeries& other);
    LaurentSeries& operator*=(Complex scalar);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator*(Complex s, LaurentSeries a) { return a *= s; }

    bool operator==(const LaurentSeries& other) const {
        return dim_ == other.dim_ && coefficients_ == other.coefficients_;
    }

private:
    std::size_t dim_;
    std::map<MultiIndex, Complex> coefficients_;
};

// Finite sum over the stored support. Throws std::domain_error when a
// coordinate of the point is zero and some stored index is negative there.
Complex evaluate(const LaurentSeries& series, const ComplexPoint& point);

// Coefficient file: one term per line, "alpha_1 ... alpha_n re im".
// Lines starting with '#' are header/comments and are skipped on read; the
// writer emits a '#'-prefixed JSON header with the domain hash and the
// truncation record when present.
LaurentSeries read_series(std::istream& is, std::size_t dim);
void write_series(std::ostream& os, const LaurentSeries& series, const std::string& domain_hash);

// FNV-1a hash of a domain's canonical description, as a hex string.
std::string domain_hash(const ReinhardtDomain& domain);

}  // namespace bergman
