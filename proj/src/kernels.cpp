#include "catgal/kernels.hpp"

#include <cmath>

namespace catgal::kernels {

std::int64_t assoc_violation_serial(const int* t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = t[a * n + b];
      const int* tb = t + b * n;
      for (int c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + tb[c]])
          return (std::int64_t)a * n * n + (std::int64_t)b * n + c;
    }
  return -1;
}

std::int64_t assoc_violation_parallel(const int* t, int n) {
  std::int64_t witness = -1;
#pragma omp parallel for schedule(static)
  for (int a = 0; a < n; ++a) {
    std::int64_t local = -1;
    for (int b = 0; b < n && local < 0; ++b) {
      const int ab = t[a * n + b];
      const int* tb = t + b * n;
      for (int c = 0; c < n; ++c)
        if (t[ab * n + c] != t[a * n + tb[c]]) {
          local = (std::int64_t)a * n * n + (std::int64_t)b * n + c;
          break;
        }
    }
    if (local >= 0) {
#pragma omp critical
      if (witness < 0 || local < witness) witness = local;
    }
  }
  return witness;
}

std::int64_t hom_filter_count_serial(const int* ta, int na, const int* tb, int nb) {
  std::vector<int> m(na, 0);
  std::int64_t count = 0;
  for (;;) {
    bool ok = true;
    for (int a = 0; a < na && ok; ++a)
      for (int b = 0; b < na; ++b)
        if (m[ta[a * na + b]] != tb[m[a] * nb + m[b]]) {
          ok = false;
          break;
        }
    if (ok) ++count;
    int i = na - 1;
    while (i >= 0 && ++m[i] == nb) m[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

std::int64_t hom_filter_count_parallel(const int* ta, int na, const int* tb, int nb) {
  std::int64_t count = 0;
  // partition by the image of the last element (its digit varies fastest in
  // the serial odometer, so any digit works; use the first for clean slices)
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (int first = 0; first < nb; ++first) {
    std::vector<int> m(na, 0);
    m[0] = first;
    for (;;) {
      bool ok = true;
      for (int a = 0; a < na && ok; ++a)
        for (int b = 0; b < na; ++b)
          if (m[ta[a * na + b]] != tb[m[a] * nb + m[b]]) {
            ok = false;
            break;
          }
      if (ok) ++count;
      int i = na - 1;
      while (i >= 1 && ++m[i] == nb) m[i--] = 0;
      if (i < 1) break;
    }
  }
  return count;
}

}  // namespace catgal::kernels
