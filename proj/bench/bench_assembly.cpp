// Timing harness: threaded Hamiltonian assembly vs the serial reference.
// The two must agree bitwise; the table reports best-of-3 wall times.
#include "mlqm/coulomb_bound.hpp"
#include "mlqm/delta_bound.hpp"
#include "mlqm/model.hpp"
#include "mlqm/nystrom.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;
using mlqm::oracle::CMatrix;

double best_ms(const std::function<CMatrix()>& body, CMatrix& out) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = Clock::now();
    out = body();
    const auto t1 = Clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

bool identical(const CMatrix& a, const CMatrix& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<int> sizes = {128, 256, 512};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
  }

  const mlqm::ModelParams params = mlqm::ModelParams::natural(10.0);
  const mlqm::delta::Coupling delta_coupling{1.0};
  const mlqm::coulomb::Coupling coulomb_coupling{1.0, 1};
  const std::vector<mlqm::oracle::PotentialKernel> kernels = {
      mlqm::oracle::PotentialKernel::delta(params, delta_coupling),
      mlqm::oracle::PotentialKernel::coulomb(params, coulomb_coupling),
  };

  std::printf("%-10s %6s %12s %12s %9s %9s\n", "kernel", "n", "serial_ms",
              "threaded_ms", "speedup", "bitwise");
  bool all_match = true;
  for (const auto& kernel : kernels) {
    for (const int n : sizes) {
      if (n < 8) continue;
      const auto grid = mlqm::oracle::momentum_grid(params, 1.0, n);
      CMatrix serial, threaded;
      const double t_serial = best_ms(
          [&] { return mlqm::oracle::assemble_serial(kernel, params, grid); },
          serial);
      const double t_threaded = best_ms(
          [&] { return mlqm::oracle::assemble(kernel, params, grid); },
          threaded);
      const bool match = identical(serial, threaded);
      all_match = all_match && match;
      std::printf("%-10s %6d %12.3f %12.3f %9.2f %9s\n",
                  kernel.label.c_str(), n, t_serial, t_threaded,
                  t_serial / t_threaded, match ? "yes" : "NO");
    }
  }
  if (!all_match) {
    std::printf("mismatch: threaded assembly differs from the reference\n");
    return 1;
  }
  return 0;
}
