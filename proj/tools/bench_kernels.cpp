// Micro-benchmark: parallel kernels vs their serial reference paths.
// Prints wall-clock times and checks the results agree bitwise (matmul)
// or to rounding (quadrature), so the fast path can be trusted.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ellw/cmatrix.hpp"
#include "ellw/modes.hpp"
#include "ellw/structure.hpp"

using namespace ellw;
using clock_t_ = std::chrono::steady_clock;

static double secs(clock_t_::time_point a, clock_t_::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

static CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = {u(rng), u(rng)};
    return m;
}

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif

    std::mt19937_64 rng(1234);
    for (std::size_t n : {64u, 128u, 256u, 384u}) {
        CMatrix a = random_matrix(n, rng);
        CMatrix b = random_matrix(n, rng);
        int reps = n <= 128 ? 20 : 5;

        auto t0 = clock_t_::now();
        CMatrix r_ser(n, n);
        for (int k = 0; k < reps; ++k) r_ser = matmul_serial(a, b);
        auto t1 = clock_t_::now();
        CMatrix r_par(n, n);
        for (int k = 0; k < reps; ++k) r_par = matmul(a, b);
        auto t2 = clock_t_::now();

        double diff = max_abs_diff(r_ser, r_par);
        double ts = secs(t0, t1) / reps, tp = secs(t1, t2) / reps;
        // 8 flops per complex multiply-add
        double gf = 8.0 * double(n) * n * n / 1e9;
        std::printf(
            "matmul %4zu  serial %8.4f s (%6.2f GF/s)  parallel %8.4f s "
            "(%6.2f GF/s)  speedup %5.2fx  maxdiff %.3g\n",
            n, ts, gf / ts, tp, gf / tp, ts / tp, diff);
        if (diff != 0.0) {
            std::printf("FAIL: parallel matmul is not bitwise reproducible\n");
            return 1;
        }
    }

    // quadrature workload: 2048 kernel evaluations per table
    {
        ModularParams mp;
        mp.N = 2;
        mp.q = 0.5;
        mp.p = 0.3;
        TruncationConfig tc;
        auto kern = [&](cplx z) { return f_function(z, mp, tc); };
        int r_max = 5, nodes = 2048;
        double rho = std::sqrt(0.5);

        auto t0 = clock_t_::now();
        std::vector<cplx> par = quadrature_mode_table(kern, rho, r_max, nodes);
        auto t1 = clock_t_::now();
        std::vector<cplx> ser(2 * r_max + 1);
        for (int r = -r_max; r <= r_max; ++r)
            ser[std::size_t(r + r_max)] = quadrature_mode(kern, rho, r, nodes);
        auto t2 = clock_t_::now();

        double diff = 0.0;
        for (std::size_t k = 0; k < par.size(); ++k)
            diff = std::max(diff, std::abs(par[k] - ser[k]));
        std::printf(
            "quadrature table (r<=%d, %d nodes)  parallel %8.4f s  per-mode "
            "serial %8.4f s  speedup %5.2fx  maxdiff %.3g\n",
            r_max, nodes, secs(t0, t1), secs(t1, t2),
            secs(t1, t2) / secs(t0, t1), diff);
        if (diff > 1e-12) {
            std::printf("FAIL: quadrature table disagrees with per-mode path\n");
            return 1;
        }
    }

    std::printf("ok\n");
    return 0;
}
