#ifndef HALFLAP_REFERENCE_HPP
#define HALFLAP_REFERENCE_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "extensions.hpp"
#include "grid.hpp"

namespace halflap {

// Exact half Laplacians of the test functions, used to measure the accuracy
// of the drivers.

double ref_quartic(double x);   // (-Delta)^{1/2} (1+x^4)^{-1}
double ref_inv_sqrt(double x);  // (-Delta)^{1/2} (1+x^2)^{-1/2}
double ref_arctan(double x);    // (-Delta)^{1/2} arctan(x) = x/(1+x^2)
double ref_odd_sqrt(double x);  // (-Delta)^{1/2} x(1+x^2)^{-1/2}
double ref_erf(double x);       // (-Delta)^{1/2} erf(x) = (4/pi) D(x)

// Dawson's integral D(x) = e^{-x^2} int_0^x e^{t^2} dt; accurate to better
// than 1e-13 relative for |x| <= 50 (and beyond).
double dawson(double x);

struct ReferencePair {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> exact;
    ExtensionKind recommended_extension;
};

const std::vector<ReferencePair>& reference_pairs();
const ReferencePair* find_reference(std::string_view name);

// Truncated bilateral-series form of (-Delta)_s^{1/2} e^{iks} for odd k; the
// independent check on the closed forms.  Truncation error is O(1/n_max^2).
cplx oracle_mode_series(std::int64_t k, double s, double map_scale, std::int64_t n_max);

// Principal-value quadrature of
//   (sin s / (L*pi)) int_0^pi sin(eta) u_s(eta) / sin(s - eta) d eta
// with midpoint panels placed symmetrically about eta = s, so the
// singularity cancels pairwise.  m is the panel count per unit pi.
cplx oracle_quadrature(const std::function<cplx(double)>& u_s, double s, double map_scale,
                       std::int64_t m);

} // namespace halflap

#endif
