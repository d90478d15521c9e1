#include "dft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace halflap {

namespace {

// FFTW's planner is not thread safe; executing independent plans is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

void run(const cplx* in, cplx* out, std::size_t n, int direction, unsigned flags)
{
    if (n == 0)
        throw std::invalid_argument("dft: empty input");

    // std::complex<double> is layout-compatible with fftw_complex.
    auto* in_ptr = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in));
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        // FFTW_ESTIMATE keeps planning cheap and leaves the input untouched.
        plan = fftw_plan_dft_1d(static_cast<int>(n), in_ptr, out_ptr, direction,
                                FFTW_ESTIMATE | flags);
    }
    if (plan == nullptr)
        throw std::runtime_error("dft: fftw plan creation failed");

    fftw_execute(plan);

    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

std::vector<cplx> run_out_of_place(const std::vector<cplx>& v, int direction)
{
    std::vector<cplx> out(v.size());
    run(v.data(), out.data(), v.size(), direction, FFTW_PRESERVE_INPUT);
    return out;
}

} // namespace

std::vector<cplx> dft_forward(const std::vector<cplx>& v)
{
    return run_out_of_place(v, FFTW_FORWARD);
}

std::vector<cplx> dft_inverse_unnormalized(const std::vector<cplx>& v)
{
    return run_out_of_place(v, FFTW_BACKWARD);
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& v)
{
    std::vector<cplx> out = run_out_of_place(v, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(v.size());
    for (cplx& z : out)
        z *= scale;
    return out;
}

void dft_forward_inplace(std::vector<cplx>& v)
{
    run(v.data(), v.data(), v.size(), FFTW_FORWARD, 0);
}

void dft_inverse_unnormalized_inplace(std::vector<cplx>& v)
{
    run(v.data(), v.data(), v.size(), FFTW_BACKWARD, 0);
}

void dft_inverse_inplace(std::vector<cplx>& v)
{
    run(v.data(), v.data(), v.size(), FFTW_BACKWARD, 0);
    const double scale = 1.0 / static_cast<double>(v.size());
    for (cplx& z : v)
        z *= scale;
}

} // namespace halflap
