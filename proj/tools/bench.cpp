// Throughput comparison: serial reference loops vs the blocked OpenMP scans.
// Outputs a small table; both sides must produce identical hit streams.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "wolmor/search.hpp"
#include "wolmor/verify.hpp"

using namespace wolmor;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string joined(const std::vector<SearchHit>& hits) {
    std::string all;
    for (const auto& h : hits) all += hit_to_json(h) + "\n";
    return all;
}

struct Row {
    const char* name;
    double serial_s;
    double parallel_s;
    bool equal;
};

void print_rows(const std::vector<Row>& rows, unsigned workers) {
    std::printf("%-34s %12s %12s %9s %7s\n", "workload", "serial (s)", "parallel (s)", "speedup",
                "equal");
    for (const Row& r : rows) {
        std::printf("%-34s %12.3f %12.3f %8.2fx %7s\n", r.name, r.serial_s, r.parallel_s,
                    r.serial_s / (r.parallel_s > 0 ? r.parallel_s : 1e-9),
                    r.equal ? "yes" : "NO");
    }
    std::printf("(parallel side: %u worker(s))\n", workers);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    unsigned workers = unsigned(omp_get_max_threads());
    std::vector<Row> rows;

    {
        u64 hi = quick ? 5000 : 20000;
        double t0 = now_seconds();
        auto serial = scan_wolstenholme_primes_serial(5, hi);
        double t1 = now_seconds();
        auto parallel = scan_wolstenholme_primes(5, hi);
        double t2 = now_seconds();
        rows.push_back({"wolstenholme prime scan", t1 - t0, t2 - t1,
                        joined(serial) == joined(parallel.hits)});
    }
    {
        u64 bound = quick ? 200000 : 1000000;
        double t0 = now_seconds();
        auto serial = scan_semiprime_pseudoprimes_serial(bound, Family::W, 1);
        double t1 = now_seconds();
        auto parallel = scan_semiprime_pseudoprimes(bound, Family::W, 1);
        double t2 = now_seconds();
        rows.push_back({"semiprime pseudoprime scan", t1 - t0, t2 - t1,
                        joined(serial) == joined(parallel.hits)});
    }
    {
        u64 bound = quick ? 100000 : 400000;
        double t0 = now_seconds();
        auto serial = scan_general_pseudoprimes_serial(bound, Family::M, 1);
        double t1 = now_seconds();
        auto parallel = scan_general_pseudoprimes(bound, Family::M, 1);
        double t2 = now_seconds();
        rows.push_back({"general pseudoprime scan (M)", t1 - t0, t2 - t1,
                        joined(serial) == joined(parallel.hits)});
    }
    {
        // congruence sweep: the acceptance-1 workload at a bench-sized bound
        const auto& reg = StatementRegistry::standard();
        VerifyLimits lim = limits_for(Profile::Quick);
        lim.linear = quick ? 10000 : 30000;
        double t0 = now_seconds();
        auto serial_v = reg.verify("wolst-cong", lim, 1);
        double t1 = now_seconds();
        auto parallel_v = reg.verify("wolst-cong", lim, workers);
        double t2 = now_seconds();
        rows.push_back({"headline congruence sweep", t1 - t0, t2 - t1,
                        serial_v.status == parallel_v.status &&
                            serial_v.instances == parallel_v.instances});
    }

    print_rows(rows, workers);
    for (const Row& r : rows)
        if (!r.equal) return 1;
    return 0;
}
