// Serial vs OpenMP benchmark for the three scan kernels.  Each kernel is
// timed in both variants and the results are cross-checked for equality.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "compcode/composite_code.hpp"
#include "compcode/protocol.hpp"
#include "compcode/rng.hpp"

using namespace compcode;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void print_row(const char* kernel, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "results match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; comparing identical serial paths\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        // random full-rank-ish generator, k = 22, n = 48: 4M codeword scan
        SplitMix64 rng({123456, 0});
        std::vector<std::uint64_t> rows;
        for (int r = 0; r < 22; ++r) rows.push_back(rng.next_u64() & ((1ull << 48) - 1));
        std::size_t d_serial = 0, d_parallel = 0;
        const double serial_ms = time_ms([&] { d_serial = kernels::min_codeword_weight_serial(rows); });
        const double parallel_ms = time_ms([&] { d_parallel = kernels::min_codeword_weight(rows); });
        print_row("min codeword weight (2^22)", serial_ms, parallel_ms, d_serial == d_parallel);
    }

    {
        const CompositeCode cc(LinearCode::hamming(4), LinearCode::repetition(15));
        VerificationReport serial, parallel;
        const double serial_ms = time_ms([&] { serial = cc.verify_distinct_indices_serial(); });
        const double parallel_ms = time_ms([&] { parallel = cc.verify_distinct_indices(); });
        print_row("ball verification (2^15)", serial_ms, parallel_ms,
                  serial.checked == parallel.checked &&
                      serial.violations.size() == parallel.violations.size());
    }

    {
        const CompositeCode cc(LinearCode::hamming(3), LinearCode::simplex(3));
        const ChannelParams params{0.02, 0.25};
        ExperimentReport serial, parallel;
        const double serial_ms =
            time_ms([&] { serial = run_experiment_serial(cc, params, 300000, {99, 0}); });
        const double parallel_ms =
            time_ms([&] { parallel = run_experiment(cc, params, 300000, {99, 0}); });
        print_row("protocol trials (3e5)", serial_ms, parallel_ms, serial == parallel);
    }

    return 0;
}
