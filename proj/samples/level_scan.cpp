// Leading order, second-order corrected and reference energies for the
// quartic single well over a small coupling scan.
//
//   ./ngas_sample [lambda ...]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "ngas/ipt.hpp"
#include "ngas/oracle.hpp"
#include "ngas/spectrum.hpp"

int main(int argc, char** argv) {
  std::vector<double> lambdas{0.1, 1.0, 10.0};
  if (argc > 1) {
    lambdas.clear();
    for (int i = 1; i < argc; ++i) lambdas.push_back(std::atof(argv[i]));
  }
  const int n_max = 4;
  std::printf("%8s %3s %12s %12s %12s %9s\n", "lambda", "n", "E0", "E2", "exact", "err0 %");
  for (double lambda : lambdas) {
    const ngas::OscillatorSpec spec = ngas::make_spec(4, 1.0, lambda);
    const ngas::OracleSpectrum exact = ngas::exact_levels(spec, n_max);
    for (int n = 0; n <= n_max; ++n) {
      const ngas::IPTSeries series = ngas::rs_corrections(spec, n, 2);
      const double ref = exact.eigenvalues[static_cast<std::size_t>(n)];
      std::printf("%8g %3d %12.6f %12.6f %12.6f %9.4f\n", lambda, n, series.E0, series.energy(2), ref,
                  100.0 * (series.E0 - ref) / ref);
    }
  }
  return 0;
}
