// Prints E_{n,q} for q approaching 1 next to the classical Euler numbers,
// and the exact rational functions for small n.

#include <cstdio>

#include "qeuler/qeuler.hpp"

int main() {
  using namespace qeuler;
  const double qs[] = {0.5, 0.9, 0.99, 0.9999};

  std::printf("%3s", "n");
  for (double q : qs) {
    char label[24];
    std::snprintf(label, sizeof label, "q=%g", q);
    std::printf("  %20s", label);
  }
  std::printf("  %14s\n", "classical");
  for (std::size_t n = 0; n <= 8; ++n) {
    std::printf("%3zu", n);
    for (double q : qs) std::printf("  %20.12f", euler_number(n, QParameter(q)).real());
    std::printf("  %14.6f\n", classical_euler_number(n).convert_to<double>());
  }

  std::printf("\n");
  for (std::size_t n = 0; n <= 4; ++n) {
    std::printf("E_%zu = %s\n", n, exact_euler_number(n).to_string().c_str());
  }
  return 0;
}
