#ifndef HALFLAP_KERNEL_HPP
#define HALFLAP_KERNEL_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace halflap {

using cplx = std::complex<double>;

// Closed forms of (-Delta)_s^{1/2} e^{iks} on (0,pi), the mapped half
// Laplacian of a single Fourier mode.  Even k is diagonal; odd k reduces to a
// finite sum.  The supporting special functions live here too.

// ln(cot(s/2)) evaluated through argsinh(cot(s)); stable near both endpoints.
double log_cot_half(double s);

// cos(s) + sin^2(s)*ln(cot(s/2)), the pointwise weight shared by every odd
// mode and by the drivers.
double cos_plus_sin2_logcot(double s);

// Rising factorial (z)_n; (z)_0 = 1.
cplx pochhammer(cplx z, std::int64_t n);

struct HypergeomParams {
    cplx a;
    cplx b;
    cplx c;
    cplx z;
};

// Thrown when a series fails to terminate within the allotted terms; carries
// the partial sum accumulated so far.
class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, cplx partial)
        : std::runtime_error(what), partial_sum(partial) {}
    cplx partial_sum;
};

// Direct summation of 2F1(a,b;c;z).  Kept as an oracle/cross-check; the
// production path uses gauss_2f1_odd_finite.  On |z| = 1 with z != 1 the
// parameters must satisfy Re(c) > Re(a+b).
cplx gauss_2f1_series(const HypergeomParams& p, double tol = 1e-15,
                      std::int64_t max_terms = 2000000);

// 2F1(1, -k/2-1; -k/2+2; e^{i2s}) for odd k via the finite-sum identity.
cplx gauss_2f1_odd_finite(std::int64_t k, double s);

// atanh(e^{+is}) or atanh(e^{-is}) = (1/2) ln(cot(s/2)) +- i pi/4.
cplx atanh_unit_circle(double s, int sign);

// (-Delta)_s^{1/2} e^{iks}:
cplx mode_even(std::int64_t k, double s, double map_scale);       // k even
cplx mode_odd(std::int64_t k, double s, double map_scale);        // k odd, finite-sum form
cplx mode_odd_2f1(std::int64_t k, double s, double map_scale);    // k odd, 2F1 form

// Real kernels at map_scale = 1: (-Delta)_s^{1/2} cos(ks) and sin(ks) for odd
// positive k; the real and imaginary parts of mode_odd(k, s, 1).
double mode_cos(std::int64_t k, double s);
double mode_sin(std::int64_t k, double s);

} // namespace halflap

#endif
