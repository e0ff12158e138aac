// Benchmark comparing the serial reference kernels against the OpenMP ones
// on the heavy sweeps: the arity-3 admissibility count, an arity-3 validity
// decision, and fixed-point enumeration over a 12-sentence pool.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fixmodal/axioms.hpp"
#include "fixmodal/decide.hpp"
#include "fixmodal/enumerate.hpp"
#include "fixmodal/fixlab.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool agree) {
  std::printf("%-36s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; parallel kernels run serially\n\n");
#endif

  using namespace fixmodal;
  Limits limits{true};

  {
    uint64_t serial_count = 0, parallel_count = 0;
    double s = time_ms([&] {
      serial_count =
          count_admissible(System::S5ConGroundMin, 3, limits, ExecMode::Serial);
    });
    double p = time_ms([&] {
      parallel_count = count_admissible(System::S5ConGroundMin, 3, limits,
                                        ExecMode::Parallel);
    });
    report("admissible tensors, arity 3", s, p, serial_count == parallel_count);
    std::printf("    count: %llu\n", (unsigned long long)parallel_count);
  }

  {
    Formula min3 =
        min_axiom({Variable{1}, Variable{2}, Variable{3}});
    Verdict vs, vp;
    double s = time_ms([&] {
      vs = valid(min3, System::S5ConGroundMin, limits, ExecMode::Serial);
    });
    double p = time_ms([&] {
      vp = valid(min3, System::S5ConGroundMin, limits, ExecMode::Parallel);
    });
    report("validity sweep, arity 3", s, p,
           vs.valid == vp.valid && vs.witness == vp.witness);
    std::printf("    provable: %s\n", vp.valid ? "yes" : "no");
  }

  {
    lab::Pool pool;
    for (int i = 1; i <= 12; ++i) {
      std::string name = "t" + std::to_string(i);
      pool.add(name, lab::Def::truth_of(name));
    }
    std::size_t serial_n = 0, parallel_n = 0;
    double s = time_ms([&] {
      serial_n = lab::enumerate_fixed_points(pool, ExecMode::Serial)
                     .points.size();
    });
    double p = time_ms([&] {
      parallel_n = lab::enumerate_fixed_points(pool, ExecMode::Parallel)
                       .points.size();
    });
    report("fixed points, 12 truth tellers", s, p, serial_n == parallel_n);
    std::printf("    fixed points: %llu\n", (unsigned long long)parallel_n);
  }

  return 0;
}
