// Timing comparison of the serial and OpenMP verification sweeps.
#include <chrono>
#include <cstdio>

#include "depthlab/ngp.hpp"
#include "depthlab/ree_sylow.hpp"

using namespace depthlab;

namespace {

template <class F>
double time_ms(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

    for (int n : {1, 2}) {
        ReeParams params = ReeParams::from_n(n);
        NgpTable table = build_ngp_table(params);
        char name[64];
        std::snprintf(name, sizeof name, "ngp orthogonality n=%d", n);
        row(name, time_ms([&] { verify_ngp_orthogonality(table, Exec::Serial); }),
            time_ms([&] { verify_ngp_orthogonality(table, Exec::Parallel); }));
        std::snprintf(name, sizeof name, "ngp decompositions n=%d", n);
        row(name, time_ms([&] { verify_ngp_decompositions(params, Exec::Serial); }),
            time_ms([&] { verify_ngp_decompositions(params, Exec::Parallel); }));
    }

    row("sylow structure n=2",
        time_ms([&] { verify_p_structure(2, false, 0, 100000, Exec::Serial); }),
        time_ms([&] { verify_p_structure(2, false, 0, 100000, Exec::Parallel); }));
    row("sylow closed forms n=2",
        time_ms([&] { verify_closed_forms(2, 0, 100000, Exec::Serial); }),
        time_ms([&] { verify_closed_forms(2, 0, 100000, Exec::Parallel); }));
    return 0;
}
