#ifndef HALFLAP_EXTENSIONS_HPP
#define HALFLAP_EXTENSIONS_HPP

#include <array>
#include <stdexcept>

#include "grid.hpp"

namespace halflap {

// How u(s) on [0,pi] is continued to [0,2pi] before the full-period driver.
enum class ExtensionKind {
    none,               // keep the half period (input must be pi-periodic)
    even,               // u(pi+s) = u(pi-s)
    odd,                // u(pi+s) = -u(pi-s)
    smooth_closed_form, // the C^4 trigonometric interpolant of arctan(L cot s)
    smooth_generic,     // C^4 interpolant solved from boundary derivative data
};

SampleVector extend_even(const SampleVector& half);
SampleVector extend_odd(const SampleVector& half);

// u(s), u'(s), ..., u''''(s) at s = pi (left branch) and at s = 2pi (which by
// periodic continuation equal the values at s = 0+).
struct BoundaryData {
    std::array<double, 5> at_pi{};
    std::array<double, 5> at_two_pi{};
};

class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(const std::string& what, double condition)
        : std::runtime_error(what), condition_estimate(condition) {}
    double condition_estimate;
};

// Coefficients (alpha_1..alpha_5, beta_1..beta_5) of the degree-5 ansatz
// sum_k alpha_k cos(ks) + beta_k sin(ks) matching the ten boundary values.
// The 10x10 system has a one-dimensional null space (sin^5(s) satisfies all
// ten homogeneous conditions), so the minimum-norm solution is returned; it
// is the one with no sin^5 component.  Inconsistent data raises
// SingularSystemError carrying a condition estimate.
std::array<double, 10> solve_extension_coeffs(const BoundaryData& boundary);

// Second half filled with the solved ansatz; first half copied through.
SampleVector extend_smooth_generic(const SampleVector& half, const BoundaryData& boundary);

// One-sided five-point finite-difference estimates of the boundary data from
// the samples alone.  Lower accuracy than analytic boundary values,
// especially for the fourth derivative.
BoundaryData estimate_boundary_from_samples(const SampleVector& half);

// Full-period samples of the closed-form extension of arctan(L cot s):
// arctan(L cot s) on (0,pi], the explicit five-term interpolant on (pi,2pi].
SampleVector extend_smooth_arctan(double map_scale, const GridSpec& full_grid);

} // namespace halflap

#endif
