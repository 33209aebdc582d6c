// Follows E_q(s,w) as s moves from 2 to 3 and checks both ends against the
// degree-2 and degree-3 polynomials.

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "qeuler/qeuler.hpp"

int main(int argc, char** argv) {
  using namespace qeuler;
  const QParameter q(argc > 1 ? std::atof(argv[1]) : 0.5);

  const CurveGrid grid = curve_grid(sample_range(2.0, 3.0, 0.25), sample_range(-0.5, 0.5, 0.25), q);
  std::printf("%6s", "s \\ w");
  for (double w : grid.w_values) std::printf("  %12.3f", w);
  std::printf("\n");
  for (std::size_t i = 0; i < grid.s_values.size(); ++i) {
    std::printf("%6.2f", grid.s_values[i]);
    for (std::size_t j = 0; j < grid.w_values.size(); ++j) std::printf("  %12.8f", grid.at(i, j).real());
    std::printf("\n");
  }

  double gap2 = 0.0;
  double gap3 = 0.0;
  const std::size_t last = grid.s_values.size() - 1;
  for (std::size_t j = 0; j < grid.w_values.size(); ++j) {
    gap2 = std::max(gap2, std::abs(grid.at(0, j) - euler_poly(2, grid.w_values[j], 0, q)));
    gap3 = std::max(gap3, std::abs(grid.at(last, j) - euler_poly(3, grid.w_values[j], 0, q)));
  }
  std::printf("\nmax |E_q(2,w) - E_2(w)| = %.3g\nmax |E_q(3,w) - E_3(w)| = %.3g\n", gap2, gap3);
  return 0;
}
