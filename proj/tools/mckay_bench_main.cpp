#include <chrono>
#include <cstdio>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "mckay/selfdual.hpp"
#include "mckay/sp2n.hpp"
#include "mckay/sylow.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* kernel, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-28s %12.1f %12.1f %9.2fx   %s\n", kernel, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial reference vs threaded kernels"};
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    bool large = false;
    app.add_option("--jobs", jobs, "threads for the parallel runs")->check(CLI::PositiveNumber);
    app.add_flag("--large", large, "add the 1451520-element rank-3 walk");
    CLI11_PARSE(app, argc, argv);

    std::printf("%-28s %12s %12s %10s   %s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
                "result");

    {
        mckay::selfdual::ClassCensus serial, parallel;
        double ts = time_ms([&] { serial = mckay::selfdual::semisimple_class_census_serial(12); });
        double tp = time_ms([&] { parallel = mckay::selfdual::semisimple_class_census(12); });
        row("census n=12", ts, tp, serial.counts == parallel.counts);
    }
    {
        unsigned long long serial = 0, parallel = 0;
        double ts = time_ms([&] { serial = mckay::sylow::brute_commutator_order_serial(4); });
        double tp = time_ms([&] { parallel = mckay::sylow::brute_commutator_order(4); });
        row("commutator closure n=4", ts, tp, serial == parallel);
    }
    {
        long n = large ? 3 : 2;
        std::size_t cap = large ? 1451520 : 720;
        std::vector<mckay::engine::Element> serial, parallel;
        double ts = time_ms([&] { serial = mckay::engine::sp2n_group(n, cap, 1).elements(); });
        double tp = time_ms([&] { parallel = mckay::engine::sp2n_group(n, cap, jobs).elements(); });
        std::string name = "group walk n=" + std::to_string(n);
        row(name.c_str(), ts, tp, serial == parallel);
    }
    return 0;
}
