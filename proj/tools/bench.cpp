// Timing comparison of the serial reference sweep against the OpenMP sweep,
// with a report-equality check on every run.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "clawfree/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace clawfree;

namespace {

double time_ms(const VerificationReport& rep) { return rep.wall_ms; }

void run_case(Property p, int n, const VerifyOptions& opts) {
    VerificationReport serial = verify_serial(p, n, opts);
    VerificationReport parallel = verify(p, n, opts);
    bool same = serial.same_outcome(parallel);
    std::printf("%-18s n=%d checked=%llu  serial %8.1f ms  parallel(%d) %8.1f ms  speedup %.2fx  reports %s\n",
                property_name(p).c_str(), n,
                static_cast<unsigned long long>(serial.checked),
                time_ms(serial), opts.jobs, time_ms(parallel),
                time_ms(serial) / std::max(0.001, time_ms(parallel)),
                same ? "identical" : "DIFFER");
    if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 4;
#ifdef _OPENMP
    jobs = std::max(jobs, omp_get_max_threads());
#endif
    if (argc > 1) jobs = std::atoi(argv[1]);
    std::printf("jobs=%d\n", jobs);

    VerifyOptions exhaustive{std::nullopt, 0, jobs};
    run_case(Property::Theorem1, 6, exhaustive);
    run_case(Property::Formula1, 6, exhaustive);
    run_case(Property::Theorem2, 6, exhaustive);
    run_case(Property::Claims, 6, exhaustive);

    VerifyOptions sampled{std::uint64_t{100000}, 12345, jobs};
    run_case(Property::Theorem1, 8, sampled);
    run_case(Property::CaseAnalysis, 9, sampled);
    return 0;
}
