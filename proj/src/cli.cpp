#include "rhalton/cli.hpp"

#include "rhalton/discrepancy.hpp"
#include "rhalton/estimator.hpp"
#include "rhalton/halton.hpp"
#include "rhalton/integrands.hpp"
#include "rhalton/mean_dimension.hpp"
#include "rhalton/primes.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rhalton::cli {

std::string format_double(double value, int digits)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> read_seed_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open seed file '" + path + "'");
    std::vector<std::uint64_t> seeds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::uint64_t v = 0;
        const char* b = line.data() + first;
        const char* e = line.data() + last + 1;
        const auto res = std::from_chars(b, e, v);
        if (res.ec != std::errc{} || res.ptr != e)
            throw UsageError("seed file line " + std::to_string(lineno) + ": expected a non-negative 64-bit integer");
        seeds.push_back(v);
    }
    return seeds;
}

PointMatrix read_points_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open points file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw UsageError("points file '" + path + "' is empty");
    std::size_t cols = 1;
    for (const char c : line)
        cols += c == ',' ? 1 : 0;

    std::vector<double> values;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t count = 0;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw UsageError("points file row " + std::to_string(rows + 1) + ": bad number '" + cell + "'");
            values.push_back(v);
            ++count;
        }
        if (count != cols)
            throw UsageError("points file row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                             " fields, header has " + std::to_string(cols));
        ++rows;
    }
    PointMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = values[i * cols + j];
    return m;
}

struct PointsArgs {
    std::uint64_t n = 0;
    std::uint32_t d = 0;
    std::uint64_t n0 = 0;
    std::uint32_t d0 = 0;
    std::optional<std::uint64_t> seed;
    std::string seed_file;
    std::uint32_t prime_cap = kDefaultPrimeCap;
    std::uint64_t index_offset = 0;
};

struct EstimateArgs {
    std::string integrand;
    std::uint32_t d = 0;
    std::uint64_t n = 0;
    std::uint32_t reps = 10;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> stride;
    bool mc = false;
};

struct SweepArgs {
    std::string integrand;
    std::vector<std::uint32_t> dims;
    std::vector<std::uint64_t> ns;
    std::uint32_t reps = 10;
    std::uint64_t seed = 0;
};

struct MeanDimArgs {
    std::string integrand;
    std::vector<std::uint64_t> dims;
    std::uint64_t n = kDefaultMeanDimPoints;
    std::uint32_t reps = kDefaultMeanDimReps;
    std::uint64_t seed = 0;
};

std::string run_points(const PointsArgs& a, int digits)
{
    BlockRequest req;
    req.n = a.n;
    req.d = a.d;
    req.n0 = a.n0;
    req.d0 = a.d0;
    req.index_offset = a.index_offset;
    if (a.seed) {
        req.seeds = SeedSpec::single(*a.seed);
    } else {
        auto seeds = read_seed_file(a.seed_file);
        if (seeds.size() != std::uint64_t{a.d0} + a.d)
            throw UsageError("seed file has " + std::to_string(seeds.size()) + " seeds; d0 + d = " +
                             std::to_string(std::uint64_t{a.d0} + a.d) + " are required");
        req.seeds = SeedSpec::vector(std::move(seeds));
    }
    const PrimeTable primes(a.prime_cap);
    const auto x = rhalton(req, primes);

    std::ostringstream os;
    for (std::uint32_t j = 0; j < a.d; ++j)
        os << (j ? "," : "") << 'x' << (j + 1);
    os << '\n';
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j)
            os << (j ? "," : "") << format_double(x(i, j), digits);
        os << '\n';
    }
    return os.str();
}

std::string run_estimate(const EstimateArgs& a, int digits)
{
    const auto kind = parse_integrand_kind(a.integrand);
    const Integrand f(kind, a.d);
    const ReplicationPlan plan{a.reps, a.n, a.d, a.seed, a.stride.value_or(default_stride(a.d))};
    const auto est = a.mc ? mc_baseline(plan, f, a.seed) : replicate_estimate(plan, f);
    const auto moments = moments_for(f);
    const auto eff = efficiency_report(est.per_replicate, moments.mu, moments.sigma2, a.n);

    const auto fmt = [digits](double v) { return format_double(v, digits); };
    std::ostringstream os;
    os << "integrand,d,n,reps,method,mu,se,true_mu,mse,mse_se,eff,eff_lo,eff_hi\n";
    os << to_string(kind) << ',' << a.d << ',' << a.n << ',' << a.reps << ',' << (a.mc ? "mc" : "rqmc") << ','
       << fmt(est.mean) << ',' << fmt(est.standard_error) << ',' << fmt(moments.mu) << ',' << fmt(eff.mse_hat)
       << ',' << fmt(std::sqrt(eff.mse_variance)) << ',' << fmt(eff.efficiency) << ',' << fmt(eff.eff_lower)
       << ',' << fmt(eff.eff_upper) << '\n';
    return os.str();
}

std::string run_sweep(const SweepArgs& a, int digits)
{
    const auto kind = parse_integrand_kind(a.integrand);
    const auto rows = efficiency_sweep(kind, a.dims, a.ns, a.reps, a.seed);
    const auto fmt = [digits](double v) { return format_double(v, digits); };
    std::ostringstream os;
    os << "integrand,d,n,mse,mse_se,eff,eff_lo,eff_hi\n";
    for (const auto& r : rows)
        os << to_string(r.kind) << ',' << r.d << ',' << r.n << ',' << fmt(r.mse) << ',' << fmt(r.mse_se) << ','
           << fmt(r.eff) << ',' << fmt(r.eff_lo) << ',' << fmt(r.eff_hi) << '\n';
    return os.str();
}

std::string run_meandim(const MeanDimArgs& a, int digits)
{
    const auto kind = parse_integrand_kind(a.integrand);
    if (!is_gaussian_kind(kind))
        throw UsageError("meandim supports g1|g2|g3|g4");
    std::ostringstream os;
    os << "kind,d,dbar,se\n";
    for (const auto d : a.dims) {
        const auto r = mean_dimension(kind, d, a.n, a.reps, a.seed);
        os << to_string(kind) << ',' << d << ',' << format_double(r.dbar, digits) << ','
           << format_double(r.standard_error, digits) << '\n';
    }
    return os.str();
}

std::string run_primes(std::uint32_t count)
{
    const PrimeTable table(std::max<std::uint32_t>(count, 1));
    std::ostringstream os;
    for (std::uint32_t j = 1; j <= count; ++j)
        os << table.nth_prime(j) << '\n';
    return os.str();
}

std::string run_discrepancy(const std::string& file, bool exact1d, int digits)
{
    const auto x = read_points_csv(file);
    double value = 0.0;
    if (exact1d) {
        if (x.cols() != 1)
            throw UsageError("--exact1d needs a one-column file");
        value = star_discrepancy_1d({x.values().begin(), x.values().end()});
    } else {
        value = star_discrepancy_bruteforce(x);
    }
    return "discrepancy\n" + format_double(value, digits) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scrambled Halton points, RQMC estimation and diagnostics", "rhalton"};
    app.require_subcommand(1);
    int digits = 17;

    PointsArgs pa;
    auto* points = app.add_subcommand("points", "Write a scrambled Halton block as CSV");
    points->add_option("--n", pa.n, "Rows")->required();
    points->add_option("--d", pa.d, "Columns")->required();
    points->add_option("--n0", pa.n0, "Rows to skip");
    points->add_option("--d0", pa.d0, "Columns to skip");
    auto* seed_opt = points->add_option("--seed", pa.seed, "Single seed s (column j uses s + j - 1)");
    auto* seed_file_opt =
        points->add_option("--seed-file", pa.seed_file, "One seed per line for columns 1 .. d0 + d");
    seed_opt->excludes(seed_file_opt);
    points->add_option("--prime-cap", pa.prime_cap, "Largest supported column index")
        ->check(CLI::PositiveNumber);
    points->add_option("--index-offset", pa.index_offset, "Added to every row index");
    points->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));

    EstimateArgs ea;
    auto* estimate = app.add_subcommand("estimate", "Replicated RQMC (or MC) estimate of an integral");
    estimate->add_option("--integrand", ea.integrand, "g1|g2|g3|g4|sumsq")->required();
    estimate->add_option("--d", ea.d, "Dimension")->required()->check(CLI::PositiveNumber);
    estimate->add_option("--n", ea.n, "Points per replicate")->required()->check(CLI::PositiveNumber);
    estimate->add_option("--reps", ea.reps, "Replicates")->check(CLI::Range(2u, 1u << 30));
    estimate->add_option("--seed", ea.seed, "Base seed")->required();
    estimate->add_option("--stride", ea.stride, "Seed gap between replicates (>= d)");
    estimate->add_flag("--mc", ea.mc, "Plain Monte Carlo instead of RQMC");
    estimate->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));

    SweepArgs sa;
    auto* sweep = app.add_subcommand("efficiency-sweep", "RQMC efficiency over dimensions and sample sizes");
    sweep->add_option("--integrand", sa.integrand, "g1|g2|g3|g4|sumsq")->required();
    sweep->add_option("--dims", sa.dims, "Comma-separated dimensions")->required()->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep->add_option("--ns", sa.ns, "Comma-separated sample sizes")->required()->delimiter(',')
        ->check(CLI::PositiveNumber);
    sweep->add_option("--reps", sa.reps, "Replicates")->check(CLI::Range(2u, 1u << 30));
    sweep->add_option("--seed", sa.seed, "Base seed")->required();
    sweep->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));

    MeanDimArgs ma;
    auto* meandim = app.add_subcommand("meandim", "Mean dimension of g1..g4 integrands");
    meandim->add_option("--integrand", ma.integrand, "g1|g2|g3|g4")->required();
    meandim->add_option("--dims", ma.dims, "Comma-separated nominal dimensions")->required()->delimiter(',')
        ->check(CLI::PositiveNumber);
    meandim->add_option("--n", ma.n, "Points per replicate (>= 1000)")->check(CLI::Range(1000ull, 1ull << 40));
    meandim->add_option("--reps", ma.reps, "Replicates")->check(CLI::Range(2u, 1u << 30));
    meandim->add_option("--seed", ma.seed, "Base seed");
    meandim->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));

    std::uint32_t prime_count = 0;
    auto* primes = app.add_subcommand("primes", "Print the first K primes");
    primes->add_option("--count", prime_count, "K")->required();

    std::string disc_file;
    bool exact1d = false;
    auto* disc = app.add_subcommand("discrepancy", "Star discrepancy of a points CSV");
    disc->add_option("--file", disc_file, "CSV with a header row")->required();
    disc->add_flag("--exact1d", exact1d, "Exact one-dimensional formula");
    disc->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 17));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "rhalton: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        std::string text;
        if (points->parsed()) {
            if (!pa.seed && pa.seed_file.empty())
                throw UsageError("points needs --seed or --seed-file");
            text = run_points(pa, digits);
        } else if (estimate->parsed()) {
            text = run_estimate(ea, digits);
        } else if (sweep->parsed()) {
            text = run_sweep(sa, digits);
        } else if (meandim->parsed()) {
            text = run_meandim(ma, digits);
        } else if (primes->parsed()) {
            text = run_primes(prime_count);
        } else if (disc->parsed()) {
            text = run_discrepancy(disc_file, exact1d, digits);
        }
        out << text;
        return kExitOk;
    } catch (const std::exception& e) {
        err << "rhalton: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace rhalton::cli
