// Benchmark comparing the serial reference kernels against the OpenMP
// parallel ones on the [42,21] enumeration and design-check workloads.
#include <chrono>
#include <cstdio>

#include "qrlab/codes.hpp"
#include "qrlab/designs.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qrlab;

namespace {

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel kernels run serially\n");
#endif

    LinearCode C = extend(qr_code(41).second);
    Design D = design_from_codewords(codewords_of_weight(C, 10), 42);
    LinearCode C74 = extend(qr_code(73).second);

    double ws = time_best_of(3, [&] { (void)weight_distribution_serial(C); });
    double wp = time_best_of(3, [&] { (void)weight_distribution(C); });
    std::printf("weight_distribution [42,21]:   serial %8.4fs  parallel %8.4fs  speedup %.2fx\n",
                ws, wp, ws / wp);

    double ds = time_best_of(3, [&] { (void)verify_design(D, 3, 1); });
    double dp = time_best_of(3, [&] { (void)verify_design(D, 3); });
    std::printf("verify_design 3-(42,10,18):    serial %8.4fs  parallel %8.4fs  speedup %.2fx\n",
                ds, dp, ds / dp);

    double ls = time_best_of(1, [&] { (void)low_weight_codewords(C74, 14, 1); });
    double lp = time_best_of(1, [&] { (void)low_weight_codewords(C74, 14); });
    std::printf("low_weight_codewords [74,37]:  serial %8.4fs  parallel %8.4fs  speedup %.2fx\n",
                ls, lp, ls / lp);
    return 0;
}
