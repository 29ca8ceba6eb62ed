#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "bergman/domains.hpp"
#include "bergman/multi_index.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {

// c_j^2 = integral over A(r,R) of |z^j|^2 dA
//       = 2 pi (R^{2j+2} - r^{2j+2}) / (2j+2)   for j != -1
//       = 2 pi log(R/r)                          for j  = -1
// r = 0 is allowed (disc / punctured disc); then j <= -1 gives +inf.
double norm_sq_annulus_1d(int j, double r, double R);

enum class NormMethod { closed_form, quadrature };

// ||z^alpha||^2_{L2(domain)}, +inf when z^alpha is not square integrable.
// Annulus products and Hartogs domains use closed forms; log-profile domains
// go through the adaptive region quadrature.
double norm_sq(const ReinhardtDomain& domain, const MultiIndex& alpha);

// true iff norm_sq is finite, decided without computing the integral.
bool admissible(const ReinhardtDomain& domain, const MultiIndex& alpha);

// Memoizing norm cache for one domain. Entries are computed once and are
// bitwise stable across queries; concurrent fills are idempotent because the
// value for a key never depends on table state.
class NormTable {
public:
    explicit NormTable(ReinhardtDomain domain);

    const ReinhardtDomain& domain() const { return domain_; }
    std::size_t dim() const { return domain_dim(domain_); }

    double norm_sq(const MultiIndex& alpha) const;
    bool admissible(const MultiIndex& alpha) const;
    NormMethod method(const MultiIndex& alpha) const;

    // volume of the domain = ||z^0||^2
    double volume() const { return norm_sq(MultiIndex::zero(dim())); }

    // alpha_1,...,alpha_n,norm_sq,method ; +inf rendered as "inf"
    void export_csv(std::ostream& os, const std::vector<MultiIndex>& window) const;

private:
    struct Entry {
        double value;
        NormMethod method;
    };
    const Entry& lookup(const MultiIndex& alpha) const;

    ReinhardtDomain domain_;
    mutable std::map<MultiIndex, Entry> table_;
    mutable std::mutex mutex_;
};

}  // namespace bergman
