#include "halflap.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "checks.hpp"
#include "driver.hpp"
#include "extensions.hpp"
#include "grid.hpp"
#include "kernel.hpp"
#include "reference.hpp"

using namespace halflap;

struct hl_grid {
    GridSpec spec;
};

namespace {

thread_local std::string g_last_error;

hl_status fail(hl_status code, const char* what)
{
    g_last_error = what != nullptr ? what : "unknown error";
    return code;
}

// Runs the body, translating C++ exceptions into status codes.
template <typename Fn>
hl_status guarded(Fn&& body)
{
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        return fail(HL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const NoConvergenceError& e) {
        return fail(HL_ERR_NO_CONVERGENCE, e.what());
    } catch (const SingularSystemError& e) {
        return fail(HL_ERR_SINGULAR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HL_ERR_EVALUATION, e.what());
    } catch (...) {
        return fail(HL_ERR_INTERNAL, "unknown exception");
    }
}

KrasnyThreshold threshold_from(double eps)
{
    KrasnyThreshold thr;
    if (eps >= 0.0)
        thr.epsilon = eps;
    return thr;
}

void write_complex(const std::vector<cplx>& values, double* out)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[2 * i] = values[i].real();
        out[2 * i + 1] = values[i].imag();
    }
}

std::vector<cplx> read_complex(const double* in, std::int64_t count)
{
    std::vector<cplx> v(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        v[static_cast<std::size_t>(i)] = cplx(in[2 * i], in[2 * i + 1]);
    return v;
}

ExtensionKind to_extension(hl_extension ext)
{
    switch (ext) {
    case HL_EXT_NONE: return ExtensionKind::none;
    case HL_EXT_EVEN: return ExtensionKind::even;
    case HL_EXT_ODD: return ExtensionKind::odd;
    case HL_EXT_SMOOTH_CLOSED_FORM: return ExtensionKind::smooth_closed_form;
    case HL_EXT_SMOOTH_GENERIC: return ExtensionKind::smooth_generic;
    }
    throw std::invalid_argument("unknown extension kind");
}

const ReferencePair& pair_of(hl_function fn)
{
    const auto& pairs = reference_pairs();
    const auto idx = static_cast<std::size_t>(fn);
    if (idx >= pairs.size())
        throw std::invalid_argument("unknown function id");
    return pairs[idx];
}

hl_status run_driver(const hl_grid* grid, const double* samples, double krasny_eps,
                     double* out, int* is_real, bool full)
{
    return guarded([&]() -> hl_status {
        if (grid == nullptr || samples == nullptr || out == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "null pointer argument");
        if (grid->spec.full_period != full)
            return fail(HL_ERR_INVALID_ARGUMENT,
                        full ? "hl_apply_full: grid is half-period"
                             : "hl_apply_periodic: grid is full-period");
        SampleVector sv{read_complex(samples, grid->spec.node_count()), grid->spec};
        const HalfLapResult result = full ? half_laplacian_full(sv, threshold_from(krasny_eps))
                                          : half_laplacian_periodic(sv, threshold_from(krasny_eps));
        write_complex(result.values.values, out);
        if (is_real != nullptr)
            *is_real = result.is_real ? 1 : 0;
        return HL_OK;
    });
}

} // namespace

extern "C" {

const char* hl_version(void)
{
    return "1.0.0";
}

const char* hl_last_error(void)
{
    return g_last_error.c_str();
}

hl_status hl_grid_create(int64_t n, double map_scale, int full_period, hl_grid** out)
{
    return guarded([&]() -> hl_status {
        if (out == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_grid_create: out is null");
        *out = new hl_grid{make_grid(n, map_scale, full_period != 0)};
        return HL_OK;
    });
}

void hl_grid_destroy(hl_grid* grid)
{
    delete grid;
}

int64_t hl_grid_node_count(const hl_grid* grid)
{
    return grid == nullptr ? 0 : grid->spec.node_count();
}

hl_status hl_grid_nodes(const hl_grid* grid, double* s, double* x)
{
    return guarded([&]() -> hl_status {
        if (grid == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_grid_nodes: grid is null");
        for (std::int64_t j = 0; j < grid->spec.node_count(); ++j) {
            if (s != nullptr)
                s[j] = grid->spec.s_node(j);
            if (x != nullptr)
                x[j] = grid->spec.x_node(j);
        }
        return HL_OK;
    });
}

hl_status hl_apply_periodic(const hl_grid* grid, const double* samples,
                            double krasny_eps, double* out, int* is_real)
{
    return run_driver(grid, samples, krasny_eps, out, is_real, false);
}

hl_status hl_apply_full(const hl_grid* grid, const double* samples,
                        double krasny_eps, double* out, int* is_real)
{
    return run_driver(grid, samples, krasny_eps, out, is_real, true);
}

hl_status hl_apply_fn(hl_real_fn f, void* user, int64_t n, double map_scale,
                      hl_extension ext, double krasny_eps,
                      double* x_out, double* values_out, int* is_real)
{
    return guarded([&]() -> hl_status {
        if (f == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_apply_fn: f is null");
        auto [x, result] = apply_to_function([f, user](double xv) { return f(xv, user); },
                                             n, map_scale, to_extension(ext),
                                             threshold_from(krasny_eps));
        if (x_out != nullptr)
            std::memcpy(x_out, x.data(), x.size() * sizeof(double));
        if (values_out != nullptr)
            write_complex(result.values.values, values_out);
        if (is_real != nullptr)
            *is_real = result.is_real ? 1 : 0;
        return HL_OK;
    });
}

hl_status hl_apply_named(hl_function fn, int64_t n, double map_scale,
                         hl_extension ext, double krasny_eps,
                         double* x_out, double* values_out, int* is_real)
{
    return guarded([&]() -> hl_status {
        const ReferencePair& pair = pair_of(fn);
        auto [x, result] = apply_to_function(pair.f, n, map_scale, to_extension(ext),
                                             threshold_from(krasny_eps));
        if (x_out != nullptr)
            std::memcpy(x_out, x.data(), x.size() * sizeof(double));
        if (values_out != nullptr)
            write_complex(result.values.values, values_out);
        if (is_real != nullptr)
            *is_real = result.is_real ? 1 : 0;
        return HL_OK;
    });
}

hl_status hl_function_by_name(const char* name, hl_function* out)
{
    return guarded([&]() -> hl_status {
        if (name == nullptr || out == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_function_by_name: null argument");
        const auto& pairs = reference_pairs();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].name == name) {
                *out = static_cast<hl_function>(i);
                return HL_OK;
            }
        }
        return fail(HL_ERR_INVALID_ARGUMENT,
                    ("unknown function '" + std::string(name)
                     + "' (expected quartic, inv_sqrt, arctan, odd_sqrt or erf)").c_str());
    });
}

const char* hl_function_name(hl_function fn)
{
    const auto& pairs = reference_pairs();
    const auto idx = static_cast<std::size_t>(fn);
    return idx < pairs.size() ? pairs[idx].name.c_str() : "";
}

double hl_function_value(hl_function fn, double x)
{
    return pair_of(fn).f(x);
}

double hl_function_exact(hl_function fn, double x)
{
    return pair_of(fn).exact(x);
}

hl_extension hl_function_recommended_extension(hl_function fn)
{
    switch (pair_of(fn).recommended_extension) {
    case ExtensionKind::none: return HL_EXT_NONE;
    case ExtensionKind::even: return HL_EXT_EVEN;
    case ExtensionKind::odd: return HL_EXT_ODD;
    case ExtensionKind::smooth_closed_form: return HL_EXT_SMOOTH_CLOSED_FORM;
    case ExtensionKind::smooth_generic: return HL_EXT_SMOOTH_GENERIC;
    }
    return HL_EXT_EVEN;
}

hl_status hl_mode_even(int64_t k, double s, double map_scale, double out[2])
{
    return guarded([&]() -> hl_status {
        if (out == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_mode_even: out is null");
        const cplx v = mode_even(k, s, map_scale);
        out[0] = v.real();
        out[1] = v.imag();
        return HL_OK;
    });
}

hl_status hl_mode_odd(int64_t k, double s, double map_scale, double out[2])
{
    return guarded([&]() -> hl_status {
        if (out == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_mode_odd: out is null");
        const cplx v = mode_odd(k, s, map_scale);
        out[0] = v.real();
        out[1] = v.imag();
        return HL_OK;
    });
}

int64_t hl_check_count(void)
{
    return check_count();
}

hl_status hl_check_run(int64_t index, int level, uint64_t seed, hl_check_result* out)
{
    return guarded([&]() -> hl_status {
        if (out == nullptr)
            return fail(HL_ERR_INVALID_ARGUMENT, "hl_check_run: out is null");
        const CheckResult r = run_single_check(index, level, seed);
        std::snprintf(out->name, sizeof(out->name), "%s", r.name.c_str());
        out->max_error = r.max_error;
        out->tolerance = r.tolerance;
        out->elapsed_ms = r.elapsed_ms;
        out->passed = r.passed ? 1 : 0;
        return HL_OK;
    });
}

} // extern "C"
