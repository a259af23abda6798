#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "catgal/group.hpp"

// Integral homology H1, H2 via the normalized bar resolution and Smith normal
// form.  Dense mode carries exact arbitrary-precision integers; sparse mode
// (|G| <= 60) computes the Z-rank and the prime-power local factors at the
// primes dividing |G| by modular elimination.

namespace catgal::homology {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c) {}
  Int& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
  const Int& at(int r, int c) const { return a[(std::size_t)r * cols + c]; }
};

struct SNFResult {
  std::vector<Int> diag;  // nonzero invariant factors d1 | d2 | ...
  int rank = 0;
};

/// Exact SNF by elimination with pivot-magnitude minimization.
SNFResult smith_normal_form(IntMatrix m);

struct SNFTransforms {
  SNFResult snf;
  IntMatrix v;     // column transform: m_original * v is diagonal up to row ops
  IntMatrix vinv;  // its inverse
};
SNFTransforms smith_with_column_transforms(IntMatrix m);

struct BarBoundaries {
  IntMatrix d2;  // C2 -> C1, rows = |G|-1, cols = (|G|-1)^2
  IntMatrix d3;  // C3 -> C2, rows = (|G|-1)^2, cols = (|G|-1)^3
};

/// Normalized bar complex over trivial Z coefficients.  Basis tuples of
/// non-identity elements; brackets containing the identity are zero.
/// Throws OrderBound when |G| exceeds the dense bound.
BarBoundaries bar_boundaries(const grp::Group& g, int dense_bound = 16);

struct HomologyConfig {
  int dense_bound = 16;   // full SNF route up to this order
  int sparse_bound = 60;  // modular local route up to this order
};

struct H2Report {
  std::vector<long long> invariants;
  long long z_rank = 0;  // always 0 for finite groups; asserted
  std::map<long long, std::vector<int>> local_exponents;  // p -> exponents (sparse route)
  bool sparse = false;
  int dim_c2 = 0, dim_c3 = 0;
};

std::vector<long long> homology(const grp::Group& g, int n,
                                const HomologyConfig& cfg = HomologyConfig{});
H2Report h2_report(const grp::Group& g, const HomologyConfig& cfg = HomologyConfig{});

/// Sparse route only (exposed for cross-checking against the dense route).
H2Report h2_sparse(const grp::Group& g);

// --- modular elimination engine (column-span accumulator) -------------------
//
// Maintains a row transform T with T*span(processed columns) = span{p^a_i
// e_{r_i}}.  For a prime modulus (k = 1) this is incremental Gaussian rank;
// for p^k it computes the p-local elementary divisors (valuations < k).
class ModAccumulator {
public:
  ModAccumulator(int n, std::int64_t p, int k);

  /// Feed one sparse column (index, coefficient) list; coefficients may be
  /// any integers (reduced internally).
  void add_column(const std::vector<std::pair<int, std::int64_t>>& col);

  int pivot_count() const { return (int)pivots_.size(); }
  /// valuation exponents of the diagonal, ascending
  std::vector<int> exponents() const;

private:
  int n_;
  std::int64_t p_, mod_;
  int k_;
  std::vector<std::int64_t> t_;                   // n x n, column-major
  std::vector<std::pair<int, int>> pivots_;       // (row, exponent)
  std::vector<int> pivot_exp_of_row_;             // -1 when not a pivot row
  std::vector<std::vector<std::int64_t>> queue_;  // pending coordinate vectors

  void process(std::vector<std::int64_t> y);
  void scale_row(int t, std::int64_t alpha);
  void rowop(const std::vector<std::int64_t>& f, int t);
  int valuation(std::int64_t x) const;
};

}  // namespace catgal::homology
