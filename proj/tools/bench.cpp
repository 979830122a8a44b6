// Compares the serial reference kernels against the OpenMP versions on
// random ultra-metric inputs and checks that they agree.

#include <chrono>
#include <cstdio>
#include <random>

#include "ultra/kernels.hpp"
#include "ultra/random_gen.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
    std::mt19937_64 rng(seed);

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "agree");

    for (int n : {40, 80, 120}) {
        auto S = ultra::random_ultrametric(rng, n);
        auto t0 = Clock::now();
        auto ref = ultra::strong_triangle_violation_serial(S.dist);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto par = ultra::strong_triangle_violation(S.dist);
        double tp = seconds_since(t0);
        std::printf("strong-triangle n=%-3d              %10.4f %10.4f %8s\n", n, ts, tp,
                    ref == par ? "yes" : "NO");
    }

    for (int n : {6, 7, 8}) {
        auto S = ultra::random_ultrametric(rng, n);
        auto t0 = Clock::now();
        auto ref = ultra::hausdorff_ultra_violation_serial(S);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto par = ultra::hausdorff_ultra_violation(S);
        double tp = seconds_since(t0);
        std::printf("hausdorff-triples n=%-3d            %10.4f %10.4f %8s\n", n, ts, tp,
                    ref == par ? "yes" : "NO");
    }
    return 0;
}
