#ifndef HALFLAP_FASTCONV_HPP
#define HALFLAP_FASTCONV_HPP

#include <vector>

#include "grid.hpp"

namespace halflap {

// A length-P complex sequence interpreted as P-periodic.
using ConvSeq = std::vector<cplx>;

// Periodic embeddings of the two factors whose convolution evaluates
// sum_l a_l (-Delta)_s^{1/2} e^{+-i(2l+1)s}:
//   b[l] = (8l+4) a_l for 0 <= l <= M, zero-padded up to P;
//   c[0] = 1/3, c[l] = 0 for 1 <= l <= P-M-1, and for P-M <= l <= P-1
//   c[l] = 1 / ((2(l-P)-3)(2(l-P)-1)(2(l-P)+1)).
// Both require P >= 2M+1; the interior zero block of c makes every
// admissible P exact, not approximate.
ConvSeq build_b_sequence(const std::vector<cplx>& a, std::int64_t M, std::int64_t P);
ConvSeq build_c_sequence(std::int64_t M, std::int64_t P);

// (b*c)_l = sum_n b_n c_{(l-n) mod P} via the discrete convolution theorem,
// O(P log P).  Taken by value: both factors are transformed in place, so
// callers that no longer need them should move them in.
ConvSeq circular_convolve(ConvSeq b, ConvSeq c);

// Literal O(P^2) evaluation of the same sum; oracle only.
ConvSeq direct_convolve(const ConvSeq& b, const ConvSeq& c);

struct OddCombinationSpec {
    std::vector<cplx> a;   // coefficients a_0..a_M
    int sign = 1;          // +1: modes +(2l+1); -1: modes -(2l+1)
    double map_scale = 1.0;
    std::int64_t period = 0; // P >= 2M+1
};

// sum_{l=0}^{M} a_l (-Delta)_s^{1/2} e^{i*sign*(2l+1)s} at all nodes of a
// half-period grid, assembled from a constant, a pointwise term and the
// circular convolution above.
SampleVector odd_mode_combination(const OddCombinationSpec& spec, const GridSpec& grid);

} // namespace halflap

#endif
