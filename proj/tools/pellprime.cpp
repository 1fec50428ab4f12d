// Command-line surface: single tests, oracle-compared range scans,
// parameter statistics, and operation-count benchmarks.
//
// Exit codes: 0 prime / clean scan, 1 composite / disagreements found,
// 2 usage error.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pellprime/harness.hpp"
#include "pellprime/primality.hpp"

namespace {

int cmd_test(std::uint64_t n, pellprime::TestMode mode)
{
    pellprime::MulCounter counter;
    const auto t0 = std::chrono::steady_clock::now();
    pellprime::Verdict v = pellprime::run_mode(mode, n, &counter);
    const auto t1 = std::chrono::steady_clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();

    std::cout << n << ' ' << pellprime::to_string(v.outcome) << ' '
              << pellprime::to_string(v.reason) << " r="
              << (v.r_used ? std::to_string(*v.r_used) : std::string("-")) << ' ' << ns << ' '
              << counter.mulmods << '\n';
    return v.is_prime() ? 0 : 1;
}

int cmd_scan(const pellprime::ScanOptions& opts)
{
    pellprime::ScanSummary summary = pellprime::run_scan(opts, [](const pellprime::Disagreement& d) {
        std::cout << pellprime::to_json_line(d) << '\n';
    });
    std::cout << "{\"scanned\":" << summary.tested
              << ",\"disagreements\":" << summary.disagreements << "}" << '\n';
    return summary.disagreements == 0 ? 0 : 1;
}

int cmd_rstats(std::uint64_t bound)
{
    pellprime::RStats stats = pellprime::run_rstats(bound);
    std::cout << "r\tcount\tpercent\n" << std::fixed << std::setprecision(3);
    for (const auto& [r, count] : stats.r_counts) {
        std::cout << r << '\t' << count << '\t' << stats.percent(r) << '\n';
    }
    std::cout << "not_found\t" << stats.not_found << "\ntotal\t" << stats.total << '\n';
    return 0;
}

int cmd_bench(const std::vector<unsigned>& bits, unsigned samples, std::uint64_t seed)
{
    std::cout << "bits\tsamples\tmean_mulmods\tratio\n" << std::fixed << std::setprecision(2);
    for (const pellprime::BenchRow& row : pellprime::run_bench(bits, samples, seed)) {
        std::cout << row.bits << '\t' << row.samples << '\t' << row.mean_mulmods << '\t'
                  << row.ratio << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Primality testing on the projectivized Pell cubic"};
    app.require_subcommand(1);

    std::string mode_name = "linear";
    const auto mode_validator = CLI::IsMember({"linear", "strong", "drop-fourth"});

    std::uint64_t test_n = 0;
    CLI::App* test = app.add_subcommand("test", "Test a single odd integer");
    test->add_option("n", test_n, "number to test (decimal, < 2^64)")->required();
    test->add_option("--mode", mode_name, "test variant")->check(mode_validator);

    std::uint64_t scan_lo = 0, scan_hi = 0;
    unsigned scan_jobs = 0;
    std::string checkpoint;
    CLI::App* scan = app.add_subcommand(
        "scan", "Compare a test against the oracle over a range; disagreements as JSON lines");
    scan->add_option("lo", scan_lo, "range start (>= 5)")->required();
    scan->add_option("hi", scan_hi, "range end, inclusive")->required();
    scan->add_option("--mode", mode_name, "test variant")->check(mode_validator);
    scan->add_option("--jobs", scan_jobs, "worker count (default: $PELLPRIME_JOBS or cores)");
    scan->add_option("--checkpoint", checkpoint, "progress file for resumable scans");

    std::uint64_t rstats_bound = 0;
    CLI::App* rstats = app.add_subcommand("r-stats", "Parameter search frequency table");
    rstats->add_option("bound", rstats_bound, "scan n = 7, 13, 19, ... below this bound")
        ->required();

    std::vector<unsigned> bench_bits;
    unsigned bench_samples = 48;
    std::uint64_t bench_seed = 0x5eed5eedULL;
    CLI::App* bench = app.add_subcommand("bench", "Mean multiplication counts per bit size");
    bench->add_option("--bits", bench_bits, "comma-separated bit sizes")->delimiter(',');
    bench->add_option("--samples", bench_samples, "primes sampled per bit size");
    bench->add_option("--seed", bench_seed, "RNG seed for prime sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*test) {
            return cmd_test(test_n, *pellprime::parse_mode(mode_name));
        }
        if (*scan) {
            pellprime::ScanOptions opts;
            opts.lo = scan_lo;
            opts.hi = scan_hi;
            opts.mode = *pellprime::parse_mode(mode_name);
            opts.jobs = scan_jobs;
            opts.checkpoint_path = checkpoint;
            return cmd_scan(opts);
        }
        if (*rstats) {
            return cmd_rstats(rstats_bound);
        }
        if (*bench) {
            return cmd_bench(bench_bits, bench_samples, bench_seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
