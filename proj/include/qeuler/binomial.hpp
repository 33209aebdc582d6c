#pragma once

// Pascal-triangle binomial coefficients as arbitrary-precision integers.

#include <cstddef>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qeuler {

namespace detail {

class PascalTable {
 public:
  boost::multiprecision::cpp_int at(std::size_t n, std::size_t k) {
    std::lock_guard lock(mutex_);
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      std::vector<boost::multiprecision::cpp_int> row(m + 1, 1);
      for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<boost::multiprecision::cpp_int>> rows_;
};

inline PascalTable& pascal_table() {
  static PascalTable table;
  return table;
}

}  // namespace detail

/// C(n, k) exactly; zero for k > n.
inline boost::multiprecision::cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return detail::pascal_table().at(n, k);
}

inline double binomial_double(std::size_t n, std::size_t k) { return binomial(n, k).convert_to<double>(); }

}  // namespace qeuler
