#ifndef HALFLAP_DFT_HPP
#define HALFLAP_DFT_HPP

#include <complex>
#include <vector>

namespace halflap {

using cplx = std::complex<double>;

// Discrete Fourier transforms for arbitrary lengths, including large primes.
// Conventions:
//   dft_forward : F[p] = sum_l v[l] e^{-2*pi*i*l*p/P}
//   dft_inverse : v[l] = (1/P) sum_p F[p] e^{+2*pi*i*l*p/P}
// dft_inverse_unnormalized omits the 1/P factor.
std::vector<cplx> dft_forward(const std::vector<cplx>& v);
std::vector<cplx> dft_inverse(const std::vector<cplx>& v);
std::vector<cplx> dft_inverse_unnormalized(const std::vector<cplx>& v);

// In-place variants; these avoid a second length-P buffer, which matters
// once the data no longer fits in cache.
void dft_forward_inplace(std::vector<cplx>& v);
void dft_inverse_inplace(std::vector<cplx>& v);
void dft_inverse_unnormalized_inplace(std::vector<cplx>& v);

} // namespace halflap

#endif
