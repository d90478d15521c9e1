#include "fastconv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dft.hpp"
#include "kernel.hpp"
#include "spectral.hpp"

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

void require_period(std::int64_t M, std::int64_t P, const char* who)
{
    if (M < 0)
        throw std::invalid_argument(std::string(who) + ": M must be nonnegative");
    if (P < 2 * M + 1)
        throw std::invalid_argument(std::string(who) + ": P = " + std::to_string(P)
                                    + " is smaller than 2M+1 = " + std::to_string(2 * M + 1));
}

} // namespace

ConvSeq build_b_sequence(const std::vector<cplx>& a, std::int64_t M, std::int64_t P)
{
    require_period(M, P, "build_b_sequence");
    if (static_cast<std::int64_t>(a.size()) != M + 1)
        throw std::invalid_argument("build_b_sequence: need M+1 coefficients");
    ConvSeq b;
    b.reserve(static_cast<std::size_t>(P));
    for (std::int64_t l = 0; l <= M; ++l)
        b.push_back(static_cast<double>(8 * l + 4) * a[static_cast<std::size_t>(l)]);
    b.resize(static_cast<std::size_t>(P), cplx(0.0, 0.0));
    return b;
}

ConvSeq build_c_sequence(std::int64_t M, std::int64_t P)
{
    require_period(M, P, "build_c_sequence");
    ConvSeq c(static_cast<std::size_t>(P), cplx(0.0, 0.0));
    c[0] = cplx(1.0 / 3.0, 0.0);
    for (std::int64_t l = P - M; l <= P - 1; ++l) {
        const double q = static_cast<double>(2 * (l - P));
        c[static_cast<std::size_t>(l)] = cplx(1.0 / ((q - 3.0) * (q - 1.0) * (q + 1.0)), 0.0);
    }
    return c;
}

ConvSeq circular_convolve(ConvSeq b, ConvSeq c)
{
    if (b.size() != c.size())
        throw std::invalid_argument("circular_convolve: period mismatch");
    if (b.empty())
        throw std::invalid_argument("circular_convolve: empty sequences");
    dft_forward_inplace(b);
    dft_forward_inplace(c);
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] *= c[i];
    dft_inverse_inplace(b);
    return b;
}

ConvSeq direct_convolve(const ConvSeq& b, const ConvSeq& c)
{
    if (b.size() != c.size())
        throw std::invalid_argument("direct_convolve: period mismatch");
    if (b.empty())
        throw std::invalid_argument("direct_convolve: empty sequences");
    const std::int64_t P = static_cast<std::int64_t>(b.size());
    ConvSeq out(b.size(), cplx(0.0, 0.0));
    for (std::int64_t l = 0; l < P; ++l) {
        cplx acc(0.0, 0.0);
        for (std::int64_t n = 0; n < P; ++n) {
            std::int64_t idx = (l - n) % P;
            if (idx < 0)
                idx += P;
            acc += b[static_cast<std::size_t>(n)] * c[static_cast<std::size_t>(idx)];
        }
        out[static_cast<std::size_t>(l)] = acc;
    }
    return out;
}

SampleVector odd_mode_combination(const OddCombinationSpec& spec, const GridSpec& grid)
{
    if (grid.full_period)
        throw std::invalid_argument("odd_mode_combination: grid must be half-period");
    if (spec.a.empty())
        throw std::invalid_argument("odd_mode_combination: empty coefficient list");
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("odd_mode_combination: sign must be +1 or -1");
    if (!(spec.map_scale > 0.0) || !std::isfinite(spec.map_scale))
        throw std::invalid_argument("odd_mode_combination: map_scale must be positive");
    const std::int64_t M = static_cast<std::int64_t>(spec.a.size()) - 1;
    require_period(M, spec.period, "odd_mode_combination");

    const std::int64_t N = grid.n;
    const double L = spec.map_scale;
    const cplx factor = cplx(0.0, 2.0 / (L * pi)); // 2i/(L*pi)
    const double sgn = static_cast<double>(spec.sign);

    // Constant piece: -sign * (2i/(L*pi)) * sum a_l/(2l+3).
    cplx acc(0.0, 0.0);
    for (std::int64_t l = 0; l <= M; ++l)
        acc += spec.a[static_cast<std::size_t>(l)] / static_cast<double>(2 * l + 3);
    const cplx constant = -sgn * factor * acc;

    // Mode windows for the two node-dependent pieces.  Modes are sign*l for
    // l = 0..M; for sign = -1 the window is [-M, 0] with reversed storage.
    const ConvSeq conv = circular_convolve(build_b_sequence(spec.a, M, spec.period),
                                           build_c_sequence(M, spec.period));
    std::vector<cplx> conv_window(static_cast<std::size_t>(M + 1));
    std::vector<cplx> deriv_window(static_cast<std::size_t>(M + 1));
    for (std::int64_t l = 0; l <= M; ++l) {
        const std::size_t slot = static_cast<std::size_t>(spec.sign > 0 ? l : M - l);
        conv_window[slot] = conv[static_cast<std::size_t>(l)];
        deriv_window[slot] = static_cast<double>(2 * l + 1) * spec.a[static_cast<std::size_t>(l)];
    }
    const std::int64_t k_lo = spec.sign > 0 ? 0 : -M;
    const std::vector<cplx> conv_eval = eval_phased_modes(conv_window, k_lo, N);
    const std::vector<cplx> deriv_eval = eval_phased_modes(deriv_window, k_lo, N);

    SampleVector out{std::vector<cplx>(static_cast<std::size_t>(N)), grid};
    for (std::int64_t j = 0; j < N; ++j) {
        const double s = grid.s_node(j);
        const cplx pointwise = -sgn * factor * cos_plus_sin2_logcot(s)
            * std::polar(1.0, sgn * s) * deriv_eval[static_cast<std::size_t>(j)];
        out.values[static_cast<std::size_t>(j)] =
            constant + pointwise + sgn * factor * conv_eval[static_cast<std::size_t>(j)];
    }
    return out;
}

} // namespace halflap
