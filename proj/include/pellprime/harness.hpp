#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pellprime/oracle.hpp"
#include "pellprime/paramsearch.hpp"
#include "pellprime/primality.hpp"

namespace pellprime {

enum class TestMode { Linear, Strong, DropFourth };

inline std::string to_string(TestMode mode)
{
    switch (mode) {
    case TestMode::Linear: return "linear";
    case TestMode::Strong: return "strong";
    case TestMode::DropFourth: return "drop-fourth";
    }
    return "unknown";
}

inline std::optional<TestMode> parse_mode(const std::string& name)
{
    if (name == "linear") return TestMode::Linear;
    if (name == "strong") return TestMode::Strong;
    if (name == "drop-fourth") return TestMode::DropFourth;
    return std::nullopt;
}

inline Verdict run_mode(TestMode mode, std::uint64_t n, MulCounter* counter = nullptr)
{
    switch (mode) {
    case TestMode::Strong: return strong_test(n, counter);
    case TestMode::DropFourth: return pell_test_variant(n, true, counter);
    case TestMode::Linear: break;
    }
    return pell_test(n, counter);
}

/// Default worker count: explicit request, then the PELLPRIME_JOBS
/// environment variable, then hardware concurrency.
inline unsigned resolve_jobs(unsigned requested)
{
    if (requested != 0) {
        return requested;
    }
    if (const char* env = std::getenv("PELLPRIME_JOBS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) {
            return static_cast<unsigned>(v);
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc != 0 ? hc : 1;
}

/// One number where the test under scrutiny and the ground-truth oracle
/// disagree.
struct Disagreement {
    std::uint64_t n = 0;
    Outcome pell_verdict = Outcome::Composite;
    bool oracle_prime = false;
    Reason reason = Reason::Passed;
    std::optional<std::uint64_t> r_used;
};

inline std::string to_json_line(const Disagreement& d)
{
    std::ostringstream out;
    out << "{\"n\":" << d.n
        << ",\"pell_verdict\":\"" << to_string(d.pell_verdict) << '"'
        << ",\"oracle_verdict\":\"" << (d.oracle_prime ? "prime" : "composite") << '"'
        << ",\"reason\":\"" << to_string(d.reason) << '"'
        << ",\"r\":";
    if (d.r_used) {
        out << *d.r_used;
    } else {
        out << "null";
    }
    out << '}';
    return out.str();
}

struct ScanOptions {
    std::uint64_t lo = 5;
    std::uint64_t hi = 5;
    TestMode mode = TestMode::Linear;
    unsigned jobs = 0;                          // 0 = resolve_jobs default
    std::string checkpoint_path;                // empty = no checkpointing
    std::uint64_t chunk_numbers = 1u << 20;     // checkpoint cadence
};

struct ScanSummary {
    std::uint64_t tested = 0;
    std::uint64_t disagreements = 0;
    std::uint64_t resumed_from = 0;  // first n of this run when resuming, else 0
};

namespace detail {

struct ChunkResult {
    std::uint64_t tested = 0;
    std::vector<Disagreement> records;
    bool done = false;
};

inline void scan_range(std::uint64_t lo, std::uint64_t hi, TestMode mode, ChunkResult& out)
{
    std::uint64_t n = lo | 1;
    for (; n <= hi && n >= lo; n += 2) {  // n >= lo guards wraparound near 2^64
        if (n % 3 == 0) {
            continue;
        }
        Verdict v = run_mode(mode, n);
        bool oracle_prime = is_prime_oracle(n);
        ++out.tested;
        if (v.is_prime() != oracle_prime) {
            out.records.push_back(Disagreement{n, v.outcome, oracle_prime, v.reason, v.r_used});
        }
    }
}

inline void write_checkpoint(const std::string& path, std::uint64_t last_completed)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write checkpoint file: " + tmp);
        }
        out << last_completed << '\n';
    }
    std::filesystem::rename(tmp, path);
}

inline std::optional<std::uint64_t> read_checkpoint(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    std::uint64_t v = 0;
    if (!(in >> v)) {
        throw std::runtime_error("unreadable checkpoint file: " + path);
    }
    return v;
}

} // namespace detail

/// Scan every odd n not divisible by 3 in [lo, hi], compare the chosen
/// test's verdict with the oracle, and hand disagreements to the callback
/// in ascending n order (the order is independent of the worker count:
/// workers own contiguous sub-ranges and results are merged in order).
/// With a checkpoint path the file holds the last completed n, written
/// atomically once per chunk, and an existing file resumes the scan.
inline ScanSummary run_scan(const ScanOptions& opts,
                            const std::function<void(const Disagreement&)>& on_disagreement = {})
{
    if (opts.lo < 5 || opts.lo > opts.hi) {
        throw std::invalid_argument("run_scan: need 5 <= lo <= hi");
    }
    if (opts.chunk_numbers == 0) {
        throw std::invalid_argument("run_scan: chunk size must be positive");
    }

    ScanSummary summary;
    std::uint64_t start = opts.lo;
    if (!opts.checkpoint_path.empty()) {
        if (auto last = detail::read_checkpoint(opts.checkpoint_path)) {
            if (*last >= opts.hi) {
                return summary;  // previous run already covered the range
            }
            if (*last >= start) {
                start = *last + 1;
                summary.resumed_from = start;
            }
        }
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    for (std::uint64_t a = start;;) {
        std::uint64_t width = opts.hi - a;  // inclusive range [a, a+width]
        std::uint64_t b = width >= opts.chunk_numbers ? a + opts.chunk_numbers - 1 : opts.hi;
        chunks.emplace_back(a, b);
        if (b == opts.hi) {
            break;
        }
        a = b + 1;
    }

    const unsigned jobs =
        static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(opts.jobs), chunks.size()));

    std::vector<detail::ChunkResult> results(chunks.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&]() {
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= chunks.size()) {
                    return;
                }
                detail::ChunkResult local;
                detail::scan_range(chunks[i].first, chunks[i].second, opts.mode, local);
                {
                    std::lock_guard<std::mutex> lk(mu);
                    local.done = true;
                    results[i] = std::move(local);
                }
                cv.notify_all();
            }
        } catch (...) {
            {
                std::lock_guard<std::mutex> lk(mu);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
            next.store(chunks.size());  // stop handing out work
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back(worker);
    }

    try {
        std::unique_lock<std::mutex> lk(mu);
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            cv.wait(lk, [&] { return results[i].done || failure; });
            if (failure) {
                break;
            }
            summary.tested += results[i].tested;
            for (const Disagreement& d : results[i].records) {
                ++summary.disagreements;
                if (on_disagreement) {
                    on_disagreement(d);
                }
            }
            results[i].records.clear();
            results[i].records.shrink_to_fit();
            if (!opts.checkpoint_path.empty()) {
                detail::write_checkpoint(opts.checkpoint_path, chunks[i].second);
            }
        }
    } catch (...) {
        // a failing callback or checkpoint write must not leak running
        // workers; drain the queue and join before propagating
        std::lock_guard<std::mutex> lk(mu);
        if (!failure) {
            failure = std::current_exception();
        }
    }
    if (failure) {
        next.store(chunks.size());
    }

    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return summary;
}

/// Parameter-frequency statistics for the search over n = 7, 13, 19, ...
/// below the bound (odd, congruent to 1 mod 3, primality not consulted).
struct RStats {
    std::map<std::uint64_t, std::uint64_t> r_counts;
    std::uint64_t not_found = 0;
    std::uint64_t total = 0;

    double percent(std::uint64_t r) const
    {
        auto it = r_counts.find(r);
        if (it == r_counts.end() || total == 0) {
            return 0.0;
        }
        return 100.0 * static_cast<double>(it->second) / static_cast<double>(total);
    }
};

inline RStats run_rstats(std::uint64_t bound)
{
    if (bound < 7) {
        throw std::invalid_argument("run_rstats: bound must be >= 7");
    }
    RStats stats;
    for (std::uint64_t n = 7; n < bound; n += 6) {
        OddModulus m(n);
        if (auto r = find_smallest_noncube(m)) {
            ++stats.r_counts[r->value()];
        } else {
            ++stats.not_found;
        }
        ++stats.total;
    }
    return stats;
}

struct BenchRow {
    unsigned bits = 0;
    unsigned samples = 0;
    double mean_mulmods = 0.0;
    double ratio = 0.0;  // mean_mulmods / bits
};

/// Sample random primes of each requested bit length (certified by the
/// oracle), run the instrumented linear test on them, and report the mean
/// multiplication count and its ratio to the bit length.
inline std::vector<BenchRow> run_bench(const std::vector<unsigned>& bit_sizes,
                                       unsigned samples_per_size = 48,
                                       std::uint64_t seed = 0x5eed5eedULL)
{
    for (unsigned b : bit_sizes) {
        if (b < 3 || b > 64) {
            throw std::invalid_argument("run_bench: bit sizes must lie in [3, 64]");
        }
    }
    if (samples_per_size == 0) {
        throw std::invalid_argument("run_bench: need at least one sample per size");
    }

    std::mt19937_64 rng(seed);
    std::vector<BenchRow> rows;
    rows.reserve(bit_sizes.size());
    for (unsigned b : bit_sizes) {
        const std::uint64_t lo = 1ULL << (b - 1);
        const std::uint64_t hi = b == 64 ? ~0ULL : (1ULL << b) - 1;
        std::uniform_int_distribution<std::uint64_t> dist(lo, hi);

        std::uint64_t total_mulmods = 0;
        for (unsigned s = 0; s < samples_per_size; ++s) {
            std::uint64_t candidate = dist(rng) | 1;
            while (!is_prime_oracle(candidate)) {
                candidate = dist(rng) | 1;
            }
            MulCounter counter;
            pell_test(candidate, &counter);
            total_mulmods += counter.mulmods;
        }
        const double mean =
            static_cast<double>(total_mulmods) / static_cast<double>(samples_per_size);
        rows.push_back(BenchRow{b, samples_per_size, mean, mean / static_cast<double>(b)});
    }
    return rows;
}

} // namespace pellprime
