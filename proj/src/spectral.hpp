#ifndef HALFLAP_SPECTRAL_HPP
#define HALFLAP_SPECTRAL_HPP

#include <span>

#include "grid.hpp"

namespace halflap {

// Forward transform with the node-offset phase folded in, so the returned
// coefficients are the true u_hat(k):
//   u_hat(k) = e^{-i*pi*k/P} / P * sum_j u(s_j) e^{-2*pi*i*j*k/P},
// with P = n (half-period, modes e^{i*2*k*s}) or P = 2n (full-period, modes
// e^{i*k*s}).  In the full-period case the u_hat(-n) slot is forced to zero.
// A Krasny filter is applied before returning.
SpectralCoeffs forward_coeffs(const SampleVector& samples, KrasnyThreshold threshold = {});

// Inverse of forward_coeffs: reconstructs the samples at the grid nodes.
SampleVector inverse_samples(const SpectralCoeffs& coeffs, const GridSpec& grid);

// Zeroes every coefficient with |u_hat(k)| < threshold.epsilon.
SpectralCoeffs krasny_filter(const SpectralCoeffs& coeffs, KrasnyThreshold threshold);
void krasny_filter_in_place(std::vector<cplx>& coeffs, KrasnyThreshold threshold);

// Shared evaluation kernel: given coefficients c[i] for consecutive mode
// indices m = k_lo + i, returns
//   G_j = sum_m c[m - k_lo] e^{i*m*pi*(2j+1)/P},  j = 0..P-1.
// On the half-period grid (P = n) a mode index m corresponds to e^{i*2*m*s_j};
// on the full-period grid (P = 2n) it corresponds to e^{i*m*s_j}.  Windows
// wider than P fold modulo P, which is exact at the nodes.
std::vector<cplx> eval_phased_modes(std::span<const cplx> c, std::int64_t k_lo, std::int64_t P);

} // namespace halflap

#endif
