// Benchmark of the OpenMP verification kernels against the serial reference
// paths (jobs = 1).  Both must produce identical results; this binary times
// them side by side.

#include "qtr/catalog.hpp"
#include "qtr/groupoid.hpp"
#include "qtr/parallel.hpp"
#include "qtr/qt.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace qtr;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
void bench(const char* name, int jobs, Fn&& serial_vs_parallel) {
    serial_vs_parallel(1); // warmup
    auto t0 = std::chrono::steady_clock::now();
    bool eq1 = serial_vs_parallel(1);
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    bool eq2 = serial_vs_parallel(jobs);
    double par_ms = ms_since(t0);
    std::printf("%-34s serial %9.2f ms   %d jobs %9.2f ms   speedup %.2fx   %s\n", name, serial_ms, jobs,
                par_ms, par_ms > 0 ? serial_ms / par_ms : 0.0, eq1 == eq2 ? "results match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : par::max_jobs();
    std::printf("comparing serial reference against OpenMP kernels (%d jobs)\n", jobs);

    // Hopf axiom suite on the order-36 double of S3
    FiniteGroup s3 = catalog_group("S3");
    UniqueFactorization s3uf = make_factorization(s3, SubgroupRef{{0, 3, 4}}, SubgroupRef{{0, 1}});
    UniqueFactorization dbl = build_double(s3uf);
    HopfData Hd = build_hopf(dbl);
    bench("verify_hopf_axioms(double of S3)", jobs,
          [&](int j) { return verify_hopf_axioms(Hd, j).all_ok(); });

    // quasi-triangularity of the standard double pair
    auto [xi, eta] = standard_double_qt(dbl);
    TensorElement R = build_R(dbl, xi, eta);
    bench("verify_qt(double of S3)", jobs, [&](int j) { return verify_qt(Hd, R, j).ok; });

    // brute-force oracle over 6561 supports on H(S3; <t>, A3)
    UniqueFactorization tiny = make_factorization(s3, SubgroupRef{{0, 1}}, SubgroupRef{{0, 3, 4}});
    bench("bruteforce_oracle(S3, 6561 cands)", jobs,
          [&](int j) { return bruteforce_oracle(tiny, j).empty(); });

    // Yang-Baxter triple checks for the double's set-theoretical solution
    bench("set_solution(double of S3)", jobs,
          [&](int j) { return set_solution(dbl, xi, eta, j).n == 6; });

    // classification loop over the double's 36-pair hom square
    bench("classify(double of S3)", jobs, [&](int j) { return !classify(dbl, j).empty(); });

    // a heavier axiom suite: the order-64 double of D4
    FiniteGroup d4 = catalog_group("D4");
    UniqueFactorization d4uf =
        make_factorization(d4, SubgroupRef{{0, 1, 2, 3}}, SubgroupRef{{0, 4}});
    HopfData Hd4 = build_hopf(build_double(d4uf));
    bench("verify_hopf_axioms(double of D4)", jobs,
          [&](int j) { return verify_hopf_axioms(Hd4, j).all_ok(); });

    return 0;
}
