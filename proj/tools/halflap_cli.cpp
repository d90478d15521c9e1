// Command-line front end of the halflap shared library: apply the half
// Laplacian to built-in functions or sampled data, run (N, L) error sweeps,
// benchmark scaling, and run the self-verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include <CLI11.hpp>

#include "halflap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CliError {
    int code;
    std::string message;
};

hl_extension parse_extension(const std::string& name, const std::string& function)
{
    if (name == "even")
        return HL_EXT_EVEN;
    if (name == "odd")
        return HL_EXT_ODD;
    if (name == "none")
        return HL_EXT_NONE;
    if (name == "smooth") {
        // arctan has a closed-form C^4 interpolant; everything else goes
        // through the generic boundary-fitted ansatz.
        return function == "arctan" ? HL_EXT_SMOOTH_CLOSED_FORM : HL_EXT_SMOOTH_GENERIC;
    }
    throw CliError{kExitUsage, "unknown extension '" + name + "' (even|odd|smooth|none)"};
}

const char* extension_label(hl_extension ext)
{
    switch (ext) {
    case HL_EXT_NONE: return "none";
    case HL_EXT_EVEN: return "even";
    case HL_EXT_ODD: return "odd";
    case HL_EXT_SMOOTH_CLOSED_FORM:
    case HL_EXT_SMOOTH_GENERIC: return "smooth";
    }
    return "?";
}

hl_function lookup_function(const std::string& name)
{
    hl_function fn;
    if (hl_function_by_name(name.c_str(), &fn) != HL_OK)
        throw CliError{kExitUsage, hl_last_error()};
    return fn;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw CliError{kExitIo, "cannot open output file '" + path + "'"};
    return out;
}

// Expands an "lo:hi:step" range into a list.
std::vector<double> expand_l_range(const std::string& range)
{
    double lo = 0.0, hi = 0.0, step = 0.0;
    if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0 || hi < lo)
        throw CliError{kExitUsage, "bad --l-range '" + range + "' (expected lo:hi:step)"};
    std::vector<double> values;
    for (std::int64_t i = 0;; ++i) {
        const double v = lo + static_cast<double>(i) * step;
        if (v > hi + step * 1e-9)
            break;
        values.push_back(v);
    }
    return values;
}

// ------------------------------------------------------------------ apply

struct ApplyOptions {
    std::string function;
    std::string input;
    std::int64_t n = 0;
    double l = 1.0;
    std::string extension = "even";
    std::string output = "-";
    double krasny_eps = HL_DEFAULT_KRASNY_EPS;
};

int run_apply(const ApplyOptions& opt)
{
    std::vector<double> x, values;
    int is_real = 0;
    std::int64_t n = opt.n;

    if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in)
            throw CliError{kExitIo, "cannot read sample file '" + opt.input + "'"};
        std::vector<double> samples;
        double re, im;
        while (in >> re >> im) {
            samples.push_back(re);
            samples.push_back(im);
        }
        if (!in.eof())
            throw CliError{kExitIo, "sample file '" + opt.input + "': malformed line "
                                    + std::to_string(samples.size() / 2 + 1)};
        const std::int64_t count = static_cast<std::int64_t>(samples.size()) / 2;
        if (n == 0) {
            if (count % 2 != 0)
                throw CliError{kExitIo, "sample file holds " + std::to_string(count)
                                        + " nodes; expected an even count (2N full-period nodes)"};
            n = count / 2;
        } else if (count != 2 * n) {
            throw CliError{kExitIo, "sample file holds " + std::to_string(count)
                                    + " nodes; expected 2N = " + std::to_string(2 * n)};
        }
        hl_grid* grid = nullptr;
        if (hl_grid_create(n, opt.l, 1, &grid) != HL_OK)
            throw CliError{kExitUsage, hl_last_error()};
        x.resize(static_cast<std::size_t>(2 * n));
        values.resize(static_cast<std::size_t>(2 * n));
        const hl_status st = hl_apply_full(grid, samples.data(), opt.krasny_eps,
                                           values.data(), &is_real);
        hl_grid_nodes(grid, nullptr, x.data());
        hl_grid_destroy(grid);
        if (st != HL_OK)
            throw CliError{kExitUsage, hl_last_error()};
        x.resize(static_cast<std::size_t>(n)); // result lives on the first N nodes
    } else {
        if (opt.function.empty())
            throw CliError{kExitUsage, "apply needs --function or --input"};
        if (n == 0)
            throw CliError{kExitUsage, "apply needs --n"};
        const hl_function fn = lookup_function(opt.function);
        const hl_extension ext = parse_extension(opt.extension, opt.function);
        x.resize(static_cast<std::size_t>(n));
        values.resize(static_cast<std::size_t>(2 * n));
        if (hl_apply_named(fn, n, opt.l, ext, opt.krasny_eps, x.data(), values.data(),
                           &is_real) != HL_OK)
            throw CliError{kExitUsage, hl_last_error()};
    }

    std::ostringstream table;
    hl_grid* half = nullptr;
    if (hl_grid_create(n, opt.l, 0, &half) != HL_OK)
        throw CliError{kExitUsage, hl_last_error()};
    std::vector<double> s(static_cast<std::size_t>(n));
    hl_grid_nodes(half, s.data(), nullptr);
    hl_grid_destroy(half);

    table << (is_real ? "x,s,value\n" : "x,s,value_re,value_im\n");
    for (std::int64_t j = 0; j < n; ++j) {
        table << fmt17(x[static_cast<std::size_t>(j)]) << ',' << fmt17(s[static_cast<std::size_t>(j)])
              << ',' << fmt17(values[static_cast<std::size_t>(2 * j)]);
        if (!is_real)
            table << ',' << fmt17(values[static_cast<std::size_t>(2 * j + 1)]);
        table << '\n';
    }
    if (opt.output == "-") {
        std::cout << table.str();
    } else {
        auto out = open_output(opt.output);
        out << table.str();
    }
    return kExitOk;
}

// ------------------------------------------------------------------ sweep

struct SweepOptions {
    std::string function;
    std::vector<std::int64_t> n_list;
    std::vector<double> l_list;
    std::string l_range;
    std::string extension = "even";
    std::string output;
    std::string plot;
    int threads = 1;
    double krasny_eps = HL_DEFAULT_KRASNY_EPS;
    bool stable = false; // write runtime_ms as 0 for byte-reproducible files
};

struct SweepCell {
    std::int64_t n;
    double l;
    double max_error = std::numeric_limits<double>::infinity();
    double runtime_ms = 0.0;
};

double cell_error(hl_function fn, hl_extension ext, std::int64_t n, double l, double eps)
{
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> values(static_cast<std::size_t>(2 * n));
    int is_real = 0;
    if (hl_apply_named(fn, n, l, ext, eps, x.data(), values.data(), &is_real) != HL_OK)
        return std::numeric_limits<double>::infinity();
    double err = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        const double exact = hl_function_exact(fn, x[static_cast<std::size_t>(j)]);
        const double dre = values[static_cast<std::size_t>(2 * j)] - exact;
        const double dim = values[static_cast<std::size_t>(2 * j + 1)];
        err = std::max(err, std::hypot(dre, dim));
    }
    return std::isfinite(err) ? err : std::numeric_limits<double>::infinity();
}

int run_sweep(const SweepOptions& opt)
{
    if (opt.function.empty())
        throw CliError{kExitUsage, "sweep needs --function"};
    if (opt.n_list.empty())
        throw CliError{kExitUsage, "sweep needs --n"};
    if (opt.output.empty())
        throw CliError{kExitUsage, "sweep needs --output"};
    std::vector<double> l_list = opt.l_list;
    if (!opt.l_range.empty()) {
        const std::vector<double> expanded = expand_l_range(opt.l_range);
        l_list.insert(l_list.end(), expanded.begin(), expanded.end());
    }
    if (l_list.empty())
        throw CliError{kExitUsage, "sweep needs --l or --l-range"};

    const hl_function fn = lookup_function(opt.function);
    const hl_extension ext = parse_extension(opt.extension, opt.function);

    // Deterministic cell order: N outer, L inner.
    std::vector<SweepCell> cells;
    for (std::int64_t n : opt.n_list)
        for (double l : l_list)
            cells.push_back(SweepCell{n, l});

    const int threads = std::max(1, opt.threads);
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next >= cells.size())
                    return;
                i = next++;
            }
            const auto t0 = std::chrono::steady_clock::now();
            cells[i].max_error = cell_error(fn, ext, cells[i].n, cells[i].l, opt.krasny_eps);
            cells[i].runtime_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (std::thread& th : pool)
            th.join();
    }

    auto out = open_output(opt.output);
    out << "function,N,L,extension,max_error,runtime_ms\n";
    for (const SweepCell& cell : cells) {
        out << opt.function << ',' << cell.n << ',' << fmt17(cell.l) << ','
            << extension_label(ext) << ',' << fmt17(cell.max_error) << ','
            << fmt17(opt.stable ? 0.0 : cell.runtime_ms) << '\n';
    }

    if (!opt.plot.empty()) {
        auto plot = open_output(opt.plot);
        plot << "# max error vs L, one block per N (" << opt.function << ", "
             << extension_label(ext) << " extension)\n";
        for (std::size_t bi = 0; bi < opt.n_list.size(); ++bi) {
            plot << "# N=" << opt.n_list[bi] << "\n";
            for (std::size_t li = 0; li < l_list.size(); ++li) {
                const SweepCell& cell = cells[bi * l_list.size() + li];
                plot << fmt17(cell.l) << ' ' << fmt17(cell.max_error) << '\n';
            }
            if (bi + 1 < opt.n_list.size())
                plot << "\n";
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------------ bench

struct BenchOptions {
    std::string function = "quartic";
    std::vector<std::int64_t> n_list;
    double l = 1.1;
    std::string extension = "even";
    std::string output = "-";
    int reps = 3;
    double krasny_eps = HL_DEFAULT_KRASNY_EPS;
};

int run_bench(const BenchOptions& opt)
{
    if (opt.n_list.empty())
        throw CliError{kExitUsage, "bench needs --n"};
    if (opt.reps < 1)
        throw CliError{kExitUsage, "bench needs --reps >= 1"};
    const hl_function fn = lookup_function(opt.function);
    const hl_extension ext = parse_extension(opt.extension, opt.function);

    std::ostringstream table;
    table << "function,N,L,extension,mean_ms,min_ms,max_ms,stddev_ms,reps\n";
    for (std::int64_t n : opt.n_list) {
        std::vector<double> times;
        for (int r = 0; r < opt.reps; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            const hl_status st = hl_apply_named(fn, n, opt.l, ext, opt.krasny_eps,
                                                nullptr, nullptr, nullptr);
            if (st != HL_OK)
                throw CliError{kExitUsage, hl_last_error()};
            times.push_back(
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count());
        }
        double mean = 0.0, mn = times.front(), mx = times.front();
        for (double t : times) {
            mean += t;
            mn = std::min(mn, t);
            mx = std::max(mx, t);
        }
        mean /= static_cast<double>(times.size());
        double var = 0.0;
        for (double t : times)
            var += (t - mean) * (t - mean);
        var /= static_cast<double>(times.size());
        table << opt.function << ',' << n << ',' << fmt17(opt.l) << ',' << extension_label(ext)
              << ',' << fmt17(mean) << ',' << fmt17(mn) << ',' << fmt17(mx) << ','
              << fmt17(std::sqrt(var)) << ',' << opt.reps << '\n';
    }
    if (opt.output == "-") {
        std::cout << table.str();
    } else {
        auto out = open_output(opt.output);
        out << table.str();
    }
    return kExitOk;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& level_name, std::uint64_t seed)
{
    int level;
    if (level_name == "fast")
        level = 0;
    else if (level_name == "full")
        level = 1;
    else
        throw CliError{kExitUsage, "unknown --level '" + level_name + "' (fast|full)"};

    bool all_passed = true;
    std::printf("%-44s %12s %10s %9s  %s\n", "suite", "max_error", "tolerance", "ms", "status");
    for (std::int64_t i = 0; i < hl_check_count(); ++i) {
        hl_check_result r;
        if (hl_check_run(i, level, seed, &r) != HL_OK)
            throw CliError{kExitVerification, hl_last_error()};
        std::printf("%-44s %12.3e %10.0e %9.1f  %s\n", r.name, r.max_error, r.tolerance,
                    r.elapsed_ms, r.passed ? "pass" : "FAIL");
        all_passed = all_passed && r.passed != 0;
    }
    return all_passed ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv)
{
#if defined(__GLIBC__)
    // Large spectral buffers would otherwise churn through mmap: glibc
    // returns each freed block to the kernel and the next call re-faults
    // every page.  Keep them on the heap for reuse across calls.
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
    CLI::App app{"half Laplacian on the real line via the cotangent map"};
    app.require_subcommand(1);

    ApplyOptions apply_opt;
    CLI::App* apply = app.add_subcommand("apply", "apply the operator and write x,s,value rows");
    apply->add_option("--function", apply_opt.function, "built-in function name");
    apply->add_option("--input", apply_opt.input, "sample file (2N lines of 're im')");
    apply->add_option("--n", apply_opt.n, "number of modes N");
    apply->add_option("--l", apply_opt.l, "map scale L")->check(CLI::PositiveNumber);
    apply->add_option("--extension", apply_opt.extension, "even|odd|smooth|none");
    apply->add_option("--output", apply_opt.output, "output path ('-' for stdout)");
    apply->add_option("--krasny-eps", apply_opt.krasny_eps, "Krasny filter threshold");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "error sweep over N and L, CSV output");
    sweep->add_option("--function", sweep_opt.function, "built-in function name");
    sweep->add_option("--n", sweep_opt.n_list, "list of N values")->delimiter(',');
    sweep->add_option("--l", sweep_opt.l_list, "list of L values")->delimiter(',');
    sweep->add_option("--l-range", sweep_opt.l_range, "L range lo:hi:step");
    sweep->add_option("--extension", sweep_opt.extension, "even|odd|smooth|none");
    sweep->add_option("--output", sweep_opt.output, "CSV output path");
    sweep->add_option("--plot", sweep_opt.plot, "companion gnuplot data path");
    sweep->add_option("--threads", sweep_opt.threads, "parallel sweep cells");
    sweep->add_option("--krasny-eps", sweep_opt.krasny_eps, "Krasny filter threshold");
    sweep->add_flag("--stable", sweep_opt.stable, "write runtime_ms as 0 for diffable output");

    BenchOptions bench_opt;
    CLI::App* bench = app.add_subcommand("bench", "timing across N, CSV output");
    bench->add_option("--function", bench_opt.function, "built-in function name");
    bench->add_option("--n", bench_opt.n_list, "list of N values")->delimiter(',');
    bench->add_option("--l", bench_opt.l, "map scale L")->check(CLI::PositiveNumber);
    bench->add_option("--extension", bench_opt.extension, "even|odd|smooth|none");
    bench->add_option("--output", bench_opt.output, "CSV output path ('-' for stdout)");
    bench->add_option("--reps", bench_opt.reps, "repetitions per N");
    bench->add_option("--krasny-eps", bench_opt.krasny_eps, "Krasny filter threshold");

    std::string verify_level = "fast";
    std::uint64_t verify_seed = 20240101;
    CLI::App* verify = app.add_subcommand("verify", "run the oracle verification suites");
    verify->add_option("--level", verify_level, "fast|full");
    verify->add_option("--seed", verify_seed, "random seed for the oracle suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (apply->parsed())
            return run_apply(apply_opt);
        if (sweep->parsed())
            return run_sweep(sweep_opt);
        if (bench->parsed())
            return run_bench(bench_opt);
        if (verify->parsed())
            return run_verify(verify_level, verify_seed);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
