// Timing comparison of the OpenMP kernels against their serial reference
// implementations.  Each row runs both on the same workload and reports
// wall-clock seconds; results are checked to agree before timing is
// trusted.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qbx/koszul.hpp"
#include "qbx/rewriting.hpp"
#include "qbx/yangbaxter.hpp"
#include "support/corpus.hpp"

using namespace qbx;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double timed(F&& f) {
  Clock::time_point t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& kernel, const std::string& workload, double serial,
         double parallel, bool agree) {
  std::printf("%-18s %-22s %9.3fs %9.3fs %7.2fx %s\n", kernel.c_str(), workload.c_str(),
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              agree ? "" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%-18s %-22s %10s %10s %8s\n", "kernel", "workload", "serial", "parallel",
              "speedup");

  {
    Presentation p = corpus::set_theoretic();
    std::vector<Enumeration> ser, par;
    double ts = timed([&] { ser = find_skew_order_serial(p); });
    double tp = timed([&] { par = find_skew_order(p); });
    row("order-search", "4 generators", ts, tp, ser == par);
  }
  {
    Presentation p = corpus::flip(7);
    std::vector<Enumeration> ser, par;
    double ts = timed([&] { ser = find_skew_order_serial(p); });
    double tp = timed([&] { par = find_skew_order(p); });
    row("order-search", "7 generators, 5040 e", ts, tp, ser == par);
  }
  {
    Presentation p = corpus::flip(8);
    SetYbeReport ser, par;
    double ts = timed([&] { ser = check_set_ybe_serial(p); });
    double tp = timed([&] { par = check_set_ybe(p); });
    row("set-braid", "8 generators", ts, tp,
        ser.holds == par.holds && ser.witness == par.witness);
  }
  {
    Presentation p = corpus::flip(8);
    LinearYbeReport ser, par;
    double ts = timed([&] { ser = check_linear_ybe_serial(p); });
    double tp = timed([&] { par = check_linear_ybe(p); });
    row("linear-braid", "8 generators", ts, tp,
        ser.holds == par.holds && ser.witness == par.witness);
  }
  {
    DualPresentation dp = koszul_dual(corpus::flip(6));
    long ser = 0, par = 0;
    double ts = timed([&] { ser = graded_dimension_serial(dp, 6); });
    double tp = timed([&] { par = graded_dimension(dp, 6); });
    row("graded-dimension", "6 generators, k=6", ts, tp, ser == par);
  }
  {
    DualPresentation dp = koszul_dual(corpus::set_theoretic());
    long ser = 0, par = 0;
    double ts = timed([&] { ser = graded_dimension_serial(dp, 4); });
    double tp = timed([&] { par = graded_dimension(dp, 4); });
    row("graded-dimension", "4 generators, k=4", ts, tp, ser == par);
  }
  return 0;
}
