#ifndef HALFLAP_DRIVER_HPP
#define HALFLAP_DRIVER_HPP

#include <functional>
#include <utility>

#include "extensions.hpp"
#include "grid.hpp"

namespace halflap {

// Output of either driver: values at the n half-period nodes s_j, j=0..n-1.
// The result is pi-periodic even when the input is not, so callers needing
// j >= n read the same array.  is_real reports whether the imaginary parts
// were dropped (done whenever the input is real to within roundoff).
struct HalfLapResult {
    SampleVector values;
    bool is_real = false;
};

// (-Delta)^{1/2} of samples on the half-period grid, for u(s) periodic of
// period pi: diagonal multiplication by |k| in mode space plus the
// 2 sin^2(s)/L prefactor.
HalfLapResult half_laplacian_periodic(const SampleVector& samples, KrasnyThreshold threshold = {});

// (-Delta)^{1/2} of samples on the full-period grid (2n nodes), for u(s) not
// necessarily periodic of period pi.  Assembles the even-mode diagonal piece,
// the odd-mode constant, the pointwise log-cotangent term, and the fast
// convolution term.
HalfLapResult half_laplacian_full(const SampleVector& samples, KrasnyThreshold threshold = {});

// Samples f at the x nodes, applies the chosen extension and dispatches to
// the appropriate driver.  Returns the x nodes alongside the result.
// smooth_closed_form is the arctan interpolant and only valid when f is
// arctan; smooth_generic estimates boundary derivatives from the samples.
std::pair<std::vector<double>, HalfLapResult>
apply_to_function(const std::function<double(double)>& f, std::int64_t n, double map_scale,
                  ExtensionKind ext, KrasnyThreshold threshold = {});

} // namespace halflap

#endif
