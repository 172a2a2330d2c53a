// Micro-benchmark comparing the serial reference field product with the
// OpenMP kernel. Timing only; every exact result is cross-checked for
// equality before it is reported.

#include <chrono>
#include <cstdio>
#include <functional>

#include "sta/generators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;
using sta::MultivectorField;
using sta::Rational;

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up (also faults in GMP allocations)
    auto start = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

MultivectorField<Rational> make_operand(sta::Rng& rng, int chunks) {
    sta::CorpusOptions opt;
    opt.max_terms = 8;
    opt.max_phases = 6;
    MultivectorField<Rational> f;
    for (int i = 0; i < chunks; ++i) f += sta::random_field(rng, opt);
    return f;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif
    std::printf("%10s %10s %12s %12s %9s\n", "terms(a)", "terms(b)", "serial(ms)",
                "parallel(ms)", "speedup");
    sta::Rng rng(42);
    for (int chunks : {2, 6, 12, 24, 48}) {
        auto a = make_operand(rng, chunks);
        auto b = make_operand(rng, chunks);
        auto serial = multiply_serial(a, b);
        auto parallel = multiply_parallel(a, b);
        if (serial != parallel) {
            std::printf("kernel mismatch at %d chunks\n", chunks);
            return 1;
        }
        int reps = chunks <= 12 ? 10 : 3;
        double ts = time_ms([&] { (void)multiply_serial(a, b); }, reps);
        double tp = time_ms([&] { (void)multiply_parallel(a, b); }, reps);
        std::printf("%10zu %10zu %12.3f %12.3f %8.2fx\n", a.term_count(), b.term_count(),
                    ts, tp, ts / tp);
    }
    return 0;
}
