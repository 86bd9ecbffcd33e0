// Benchmark comparing the serial reference enumerator against the
// OpenMP-parallel one, and checking that both return identical results.

#include "egypt/search.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace egypt;

namespace {

template <typename F>
double timed(F&& f, std::vector<EgyptianRepr>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench_case(const char* label, const Rational& target,
                const SearchConstraints& c) {
    std::vector<EgyptianRepr> serial_out, parallel_out;
    double ts = timed([&] { return enumerate_reprs_serial(target, c); },
                      serial_out);
    double tp = timed([&] { return enumerate_reprs(target, c); },
                      parallel_out);
    bool same = serial_out == parallel_out;
    std::printf("%-28s solutions=%zu serial=%.3fs parallel=%.3fs speedup=%.2fx %s\n",
                label, serial_out.size(), ts, tp, ts / (tp > 0 ? tp : 1e-9),
                same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    SearchConstraints c1{4, Int(48), ParityFilter::any};
    bench_case("1, <=4 terms, den<=48", Rational(Int(1)), c1);

    SearchConstraints c2{5, Int(60), ParityFilter::any};
    bench_case("1, <=5 terms, den<=60", Rational(Int(1)), c2);

    SearchConstraints c3{5, Int(231), ParityFilter::all_odd};
    bench_case("1/3, <=5 terms odd, <=231", Rational(1, 3), c3);

    SearchConstraints c4{4, Int(400), ParityFilter::any};
    bench_case("1/2, <=4 terms, den<=400", Rational(1, 2), c4);
    return 0;
}
