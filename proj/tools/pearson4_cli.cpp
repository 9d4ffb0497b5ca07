// Batch front end: sample generation, density/CDF tabulation, the
// goodness-of-fit suite, per-variate benchmarking, and the conjugate
// Bayesian workflow.
//
// Exit codes: 0 success, 1 test failure (gof), 2 usage/domain error,
// 3 I/O error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pearson4/batch.hpp"
#include "pearson4/bayes.hpp"
#include "pearson4/logconcave.hpp"
#include "pearson4/pearson.hpp"
#include "pearson4/samplers.hpp"
#include "pearson4/verify.hpp"

using json = nlohmann::json;
using namespace pearson4;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PEARSON4_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 1;
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Sink {
    std::ostream* out = &std::cout;
    std::ofstream file;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::ios_base::failure("cannot open output file: " + path);
        out = &file;
    }
    std::ostream& stream() { return *out; }
    void check() {
        if (!*out) throw std::ios_base::failure("write failure");
    }
};

std::vector<double> parse_list(const std::string& spec) {
    std::vector<double> values;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) values.push_back(std::stod(item));
    return values;
}

bool algorithm_valid(AlgorithmId id, const PearsonParams& p) {
    const double s = std::fabs(p.s);
    switch (id) {
        case AlgorithmId::StudentTPolar: return p.s == 0.0;
        case AlgorithmId::T2Inverse: return p.a == 1.5 && p.s == 0.0;
        case AlgorithmId::SkewedCauchy: return p.a == 1.0;
        case AlgorithmId::Alg1StudentTRejection: return s <= 5.0;
        case AlgorithmId::Alg2LogConcave: return p.a >= 1.0;
        case AlgorithmId::Alg3Exponential: return p.a >= 1.0 && p.a <= 3.0 && s <= 3.0;
        case AlgorithmId::Alg4Gaussian:
            return p.a > 1.0 && s <= 3.0 * (p.a - 1.0) / (2.0 * 3.14159265358979323846);
        case AlgorithmId::Alg5SmallA: return p.a <= 1.0;
        case AlgorithmId::Auto: return true;
    }
    return false;
}

// ---------------------------------------------------------------- sample ---

int cmd_sample(double a, double s, std::size_t n, std::uint64_t seed,
               const std::string& algo, const std::string& format,
               const std::string& out_path, int jobs) {
    const PearsonParams p(a, s);
    const auto id = parse_algorithm(algo);
    if (!id) throw std::domain_error("unknown algorithm: " + algo);
    Sink sink;
    sink.open(out_path);
    const SampleReport report = sample_batch(p, *id, n, seed, jobs);
    if (format == "csv") {
        sink.stream() << "value,iterations\n";
        for (std::size_t i = 0; i < n; ++i)
            sink.stream() << fmt_double(report.variates[i]) << ','
                          << report.iterations[i] << '\n';
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            json row{{"value", report.variates[i]},
                     {"iterations", report.iterations[i]}};
            sink.stream() << row.dump() << '\n';
        }
    }
    sink.check();
    return 0;
}

// ---------------------------------------------------------- density / cdf ---

int cmd_density(double a, double s, double from, double to, int points,
                bool as_cdf, const std::string& format,
                const std::string& out_path) {
    const PearsonParams p(a, s);
    if (points < 2 || !(from < to)) throw std::domain_error("empty or invalid grid");
    Sink sink;
    sink.open(out_path);
    std::optional<NumericCdf> table;
    if (as_cdf) table.emplace(NumericCdf::pearson(p));
    if (format == "csv") sink.stream() << (as_cdf ? "x,F\n" : "x,f\n");
    for (int k = 0; k < points; ++k) {
        const double x = from + (to - from) * k / (points - 1);
        const double v =
            as_cdf ? (*table)(x) : std::exp(log_density_normalized(p, x));
        if (format == "csv")
            sink.stream() << fmt_double(x) << ',' << fmt_double(v) << '\n';
        else
            sink.stream() << json{{"x", x}, {as_cdf ? "F" : "f", v}}.dump() << '\n';
    }
    sink.check();
    return 0;
}

// ------------------------------------------------------------------- gof ---

struct GofCase {
    AlgorithmId id;
    double a, s;
};

int cmd_gof(std::size_t n, std::uint64_t seed, const std::string& a_grid,
            const std::string& s_grid, const std::string& out_path,
            bool inject_fault) {
    std::vector<GofCase> cases;
    if (!a_grid.empty() || !s_grid.empty()) {
        const auto as = parse_list(a_grid);
        const auto ss = parse_list(s_grid);
        if (as.empty() || ss.empty())
            throw std::domain_error("empty grid specification");
        for (double a : as)
            for (double s : ss)
                for (AlgorithmId id :
                     {AlgorithmId::Alg1StudentTRejection, AlgorithmId::Alg2LogConcave,
                      AlgorithmId::Alg3Exponential, AlgorithmId::Alg4Gaussian,
                      AlgorithmId::Alg5SmallA, AlgorithmId::Auto})
                    if (algorithm_valid(id, PearsonParams(a, s)))
                        cases.push_back({id, a, s});
    } else {
        cases = {
            {AlgorithmId::Alg1StudentTRejection, 2, 1},
            {AlgorithmId::Alg2LogConcave, 1.5, 0},
            {AlgorithmId::Alg2LogConcave, 3, 3},
            {AlgorithmId::Alg2LogConcave, 9, 9},
            {AlgorithmId::Alg2LogConcave, 1, 5},
            {AlgorithmId::Alg3Exponential, 1, 1},
            {AlgorithmId::Alg3Exponential, 2, 1},
            {AlgorithmId::Alg3Exponential, 3, 3},
            {AlgorithmId::Alg4Gaussian, 16, 6},
            {AlgorithmId::Alg4Gaussian, 9, 1},
            {AlgorithmId::Alg4Gaussian, 1.2, 0},
            {AlgorithmId::Alg5SmallA, 0.6, 0.5},
            {AlgorithmId::Alg5SmallA, 0.75, 2},
            {AlgorithmId::Alg5SmallA, 0.9, 1.5},
            {AlgorithmId::SkewedCauchy, 1, 9},
            {AlgorithmId::Auto, 0.8, 7},
            {AlgorithmId::Auto, 2, 1},
            {AlgorithmId::Auto, 5, -4},
            {AlgorithmId::Auto, 9, 9},
            {AlgorithmId::Auto, 1.2, 0.1},
            {AlgorithmId::Auto, 30, 2},
        };
    }

    Sink sink;
    sink.open(out_path);
    std::vector<std::string> failures;
    std::size_t cell = 0;
    for (const GofCase& c : cases) {
        const PearsonParams p(c.a, c.s);
        RngState state = RngState::stream(seed, cell++);
        std::vector<double> draws(n);
        double iter_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Draw d = (inject_fault && c.id == AlgorithmId::Alg2LogConcave)
                         ? alg2_logconcave(state, p, PeakBound::GammaMinusDelta,
                                           std::log(0.5))
                         : draw_pearson4(state, p, c.id);
            draws[i] = d.value;
            iter_sum += static_cast<double>(d.iterations);
        }
        std::sort(draws.begin(), draws.end());
        const NumericCdf cdf = NumericCdf::pearson(p);
        const KsResult ks = ks_one_sample(draws, [&](double x) { return cdf(x); });
        json row{{"test", "ks"},
                 {"algorithm", algorithm_name(c.id)},
                 {"a", c.a},
                 {"s", c.s},
                 {"n", n},
                 {"D", ks.statistic},
                 {"threshold", ks.threshold},
                 {"mean_iterations", iter_sum / static_cast<double>(n)},
                 {"pass", ks.pass}};
        sink.stream() << row.dump() << '\n';
        if (!ks.pass)
            failures.push_back(std::string(algorithm_name(c.id)) + " at (a=" +
                               std::to_string(c.a) + ", s=" + std::to_string(c.s) + ")");
    }
    sink.check();
    if (!failures.empty()) {
        std::cerr << "gof failures:\n";
        for (const auto& f : failures) std::cerr << "  " << f << '\n';
        return 1;
    }
    return 0;
}

// ------------------------------------------------------------------ bench ---

int cmd_bench(const std::string& a_grid, const std::string& s_grid, std::size_t n,
              std::uint64_t seed, bool precompute, const std::string& out_path) {
    const auto as = a_grid.empty() ? std::vector<double>{1, 3, 9} : parse_list(a_grid);
    const auto ss = s_grid.empty() ? std::vector<double>{1, 3, 9} : parse_list(s_grid);
    if (as.empty() || ss.empty()) throw std::domain_error("empty grid specification");
    Sink sink;
    sink.open(out_path);
    sink.stream() << "a,s,algorithm,mean_iterations,ns_per_variate\n";
    std::size_t cell = 0;
    for (double a : as) {
        for (double s : ss) {
            const PearsonParams p(a, s);
            for (AlgorithmId id :
                 {AlgorithmId::SkewedCauchy, AlgorithmId::Alg1StudentTRejection,
                  AlgorithmId::Alg2LogConcave, AlgorithmId::Alg3Exponential,
                  AlgorithmId::Alg4Gaussian, AlgorithmId::Alg5SmallA}) {
                if (!algorithm_valid(id, p)) continue;
                RngState state = RngState::stream(seed, cell++);
                auto draw = [&](RngState& st) { return draw_pearson4(st, p, id); };
                for (std::size_t i = 0; i < 1000; ++i) (void)draw(state);  // warm-up
                double iter_sum = 0.0;
                double ns;
                if (precompute && id == AlgorithmId::Alg2LogConcave && s >= 0.0) {
                    // constants hoisted out of the loop, for contrast
                    const ArctanMapped am(p);
                    const double L = std::exp(log_gamma_minus(p) + log_delta(p));
                    const double peak = h_log(am, am.mode_y);
                    LogConcaveTarget target{
                        [&](double y) { return h_log(am, y) - peak; }, am.mode_y, L};
                    volatile double guard = 0.0;
                    const auto t0 = std::chrono::steady_clock::now();
                    for (std::size_t i = 0; i < n; ++i) {
                        Draw d = sample(target, state);
                        guard = guard + std::tan(d.value);
                        iter_sum += static_cast<double>(d.iterations);
                    }
                    const auto t1 = std::chrono::steady_clock::now();
                    ns = std::chrono::duration<double, std::nano>(t1 - t0).count() /
                         static_cast<double>(n);
                } else {
                    const auto t0 = std::chrono::steady_clock::now();
                    for (std::size_t i = 0; i < n; ++i)
                        iter_sum += static_cast<double>(draw(state).iterations);
                    const auto t1 = std::chrono::steady_clock::now();
                    ns = std::chrono::duration<double, std::nano>(t1 - t0).count() /
                         static_cast<double>(n);
                }
                sink.stream() << fmt_double(a) << ',' << fmt_double(s) << ','
                              << algorithm_name(id) << ','
                              << fmt_double(iter_sum / static_cast<double>(n)) << ','
                              << fmt_double(ns) << '\n';
            }
        }
    }
    sink.check();
    return 0;
}

// ------------------------------------------------------------------ bayes ---

int cmd_bayes(double mu0, double m0, double n, std::optional<double> y,
              const std::string& mode, std::size_t draws, std::uint64_t seed,
              const std::string& format, const std::string& out_path) {
    const BayesParams prior(mu0, m0, n);
    const bool posterior = mode.rfind("posterior", 0) == 0;
    if (posterior && !y)
        throw std::domain_error(mode + " requires --y");
    Sink sink;
    sink.open(out_path);
    const BayesParams eff = posterior ? posterior_update(prior, *y) : prior;
    if (posterior) {
        if (format == "csv")
            sink.stream() << "# mu1=" << fmt_double(eff.mu0)
                          << " m1=" << fmt_double(eff.m0) << '\n';
        else
            sink.stream() << json{{"mu1", eff.mu0}, {"m1", eff.m0}}.dump() << '\n';
    }
    const bool predictive = mode == "prior-pred" || mode == "posterior-pred";
    if (!predictive && mode != "prior-mu" && mode != "posterior-mu")
        throw std::domain_error("unknown bayes mode: " + mode);
    if (format == "csv") sink.stream() << "value\n";
    for (std::size_t i = 0; i < draws; ++i) {
        RngState state = RngState::stream(seed, i);
        double v;
        if (predictive)
            v = predictive_sample(state, eff, std::nullopt);
        else
            v = draw_pearson4(state, to_pearson(eff), AlgorithmId::Auto).value;
        if (format == "csv")
            sink.stream() << fmt_double(v) << '\n';
        else
            sink.stream() << json{{"value", v}}.dump() << '\n';
    }
    sink.check();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pearson IV random variate toolkit"};
    app.require_subcommand(1);

    double a = 3, s = 0, from = -5, to = 5;
    double mu0 = 0, m0 = 2, bn = 1;
    std::optional<double> y;
    int points = 101, jobs = 0;
    std::size_t n = 10, gof_n = 20000, bench_n = 20000, draws = 10;
    std::uint64_t seed = default_seed();
    std::string algo = "auto", format = "csv", out_path, a_grid, s_grid;
    std::string bayes_mode = "prior-mu";
    bool precompute = false, inject_fault = false;

    auto* c_sample = app.add_subcommand("sample", "generate Pearson IV variates");
    c_sample->add_option("--a", a, "shape a > 1/2")->required();
    c_sample->add_option("--s", s, "skew s");
    c_sample->add_option("--n", n, "number of variates");
    c_sample->add_option("--seed", seed, "64-bit seed (default: $PEARSON4_SEED or 1)");
    c_sample->add_option("--algorithm", algo,
                         "auto|student-t|t2|skewed-cauchy|alg1|alg2|alg3|alg4|alg5");
    c_sample->add_option("--format", format, "csv|jsonl");
    c_sample->add_option("--out", out_path, "output file (default stdout)");
    c_sample->add_option("--jobs", jobs, "worker threads (0 = library default)");

    auto* c_density = app.add_subcommand("density", "tabulate the density");
    auto* c_cdf = app.add_subcommand("cdf", "tabulate the CDF");
    for (auto* c : {c_density, c_cdf}) {
        c->add_option("--a", a)->required();
        c->add_option("--s", s);
        c->add_option("--from", from);
        c->add_option("--to", to);
        c->add_option("--points", points);
        c->add_option("--format", format, "csv|jsonl");
        c->add_option("--out", out_path);
    }

    auto* c_gof = app.add_subcommand("gof", "run the goodness-of-fit suite");
    c_gof->add_option("--n", gof_n, "draws per test");
    c_gof->add_option("--seed", seed);
    c_gof->add_option("--a-grid", a_grid, "comma list of a values (default: built-in suite)");
    c_gof->add_option("--s-grid", s_grid, "comma list of s values");
    c_gof->add_option("--out", out_path, "JSON-lines report file");
    c_gof->add_flag("--inject-envelope-fault", inject_fault,
                    "test-only: break the Alg2 envelope; the suite must fail");

    auto* c_bench = app.add_subcommand("bench", "iterations and ns per variate");
    c_bench->add_option("--a-grid", a_grid, "comma list of a values (default 1,3,9)");
    c_bench->add_option("--s-grid", s_grid, "comma list of s values (default 1,3,9)");
    c_bench->add_option("--n", bench_n, "draws per cell");
    c_bench->add_option("--seed", seed);
    c_bench->add_flag("--precompute", precompute,
                      "hoist per-variate constants out of the loop");
    c_bench->add_option("--out", out_path);

    auto* c_bayes = app.add_subcommand("bayes", "conjugate Pearson IV / NEF-CHS model");
    c_bayes->add_option("--mu0", mu0, "prior mean")->required();
    c_bayes->add_option("--m0", m0, "prior sample size (> 1)")->required();
    c_bayes->add_option("--n", bn, "sampling size (>= 1)");
    c_bayes->add_option("--y", y, "observation (required for posterior modes)");
    c_bayes->add_option("--mode", bayes_mode,
                        "prior-mu|posterior-mu|prior-pred|posterior-pred");
    c_bayes->add_option("--draws", draws);
    c_bayes->add_option("--seed", seed);
    c_bayes->add_option("--format", format, "csv|jsonl");
    c_bayes->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_sample->parsed())
            return cmd_sample(a, s, n, seed, algo, format, out_path, jobs);
        if (c_density->parsed())
            return cmd_density(a, s, from, to, points, false, format, out_path);
        if (c_cdf->parsed())
            return cmd_density(a, s, from, to, points, true, format, out_path);
        if (c_gof->parsed())
            return cmd_gof(gof_n, seed, a_grid, s_grid, out_path, inject_fault);
        if (c_bench->parsed())
            return cmd_bench(a_grid, s_grid, bench_n, seed, precompute, out_path);
        if (c_bayes->parsed())
            return cmd_bayes(mu0, m0, bn, y, bayes_mode, draws, seed, format, out_path);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
