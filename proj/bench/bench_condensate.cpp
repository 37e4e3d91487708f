// Wall-clock comparison of the OpenMP kernels against their serial references.
//
//   bench_condensate [repeats]

#include "rotdirac/boundary.hpp"
#include "rotdirac/condensate.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <vector>

using namespace rotdirac;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int k = 0; k < repeats; ++k) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        best = s < best ? s : best;
    }
    return best;
}

void report(const char* what, double parallel, double serial, bool same) {
    std::printf("%-34s parallel %8.3f s   serial %8.3f s   speedup %5.2f   %s\n", what, parallel,
                serial, serial / parallel, same ? "identical" : "DIFFERENT");
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());

    PhysicalParams params;
    params.mass = 1.0;
    params.omega = 0.8;
    params.beta = 0.5;

    for (const BoundaryKind& bc : {BoundaryKind::spectral(), BoundaryKind::mit(1)}) {
        std::vector<QuantizedMode> par;
        std::vector<QuantizedMode> ser;
        const double tp = best_of(repeats, [&] { par = enumerate_spectrum(bc, params, 41, 60, true); });
        const double ts = best_of(repeats, [&] { ser = enumerate_spectrum(bc, params, 41, 60, false); });
        bool same = par.size() == ser.size();
        for (std::size_t k = 0; same && k < par.size(); ++k) {
            same = par[k].p == ser[k].p && par[k].norm == ser[k].norm;
        }
        std::printf("[%s]\n", bc.name().c_str());
        report("spectrum j<=41/2 i<=60", tp, ts, same);

        std::vector<double> rs;
        for (int k = 0; k <= 100; ++k) {
            rs.push_back(k / 100.0);
        }
        const std::vector<double> thetas = {std::numbers::pi / 8, std::numbers::pi / 4,
                                            3 * std::numbers::pi / 8, std::numbers::pi / 2};
        CondensateGrid gp;
        CondensateGrid gs;
        const double cp = best_of(repeats, [&] { gp = condensate_grid(bc, params, rs, thetas); });
        const double cs = best_of(repeats, [&] { gs = condensate_grid_serial(bc, params, rs, thetas); });
        report("condensate 101x4 grid", cp, cs, gp.values == gs.values);
    }
    return 0;
}
