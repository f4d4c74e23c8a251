#pragma once

#include <numeric>
#include <vector>

#include "umpf/polyhedron.h"

namespace umpf::detail {

/// Visits nonnegative rational tuples n/q in order of exact common
/// denominator q, then largest numerator, then lexicographically. With
/// `sorted_tail` only tuples whose last two coordinates are nondecreasing are
/// produced. Stops after `budget` tuples or when `visit` returns true.
template <typename Visit>
bool for_each_grid_tuple(size_t dim, const Rational& bound, long max_den, size_t budget,
                         bool sorted_tail, Visit visit) {
  size_t used = 0;
  std::vector<long> num(dim);
  for (long q = 1; q <= max_den; ++q) {
    long top = static_cast<long>(floor(bound * q).get_si());
    for (long m = 0; m <= top; ++m) {
      std::fill(num.begin(), num.end(), 0);
      while (true) {
        bool has_max = false;
        long g = q;
        for (long n : num) {
          has_max = has_max || n == m;
          g = std::gcd(g, n);
        }
        bool tail_ok = !sorted_tail || dim < 2 || num[dim - 2] <= num[dim - 1];
        if (has_max && tail_ok && g == 1) {
          Point p(dim);
          for (size_t i = 0; i < dim; ++i) p[i] = make_rational(num[i], q);
          if (visit(p)) return true;
          if (++used >= budget) return false;
        }
        size_t i = dim;
        while (i > 0 && num[i - 1] == m) {
          num[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
        ++num[i - 1];
      }
    }
  }
  return false;
}

}  // namespace umpf::detail
