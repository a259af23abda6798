#include "catgal/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace catgal::homology {

using grp::Elt;
using grp::Group;

// ---------------------------------------------------------------------------
// dense SNF
// ---------------------------------------------------------------------------

namespace {

struct Elim {
  IntMatrix m;
  IntMatrix v, vinv;
  bool track;

  explicit Elim(IntMatrix mm, bool tr) : m(std::move(mm)), track(tr) {
    if (track) {
      v = IntMatrix(m.cols, m.cols);
      vinv = IntMatrix(m.cols, m.cols);
      for (int i = 0; i < m.cols; ++i) v.at(i, i) = vinv.at(i, i) = 1;
    }
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    if (track) {
      for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
      for (int j = 0; j < vinv.cols; ++j) std::swap(vinv.at(a, j), vinv.at(b, j));
    }
  }
  void addmul_row(int dst, int src, const Int& f) {  // row_dst += f*row_src
    for (int j = 0; j < m.cols; ++j) {
      const Int& s = m.at(src, j);
      if (s != 0) m.at(dst, j) += f * s;
    }
  }
  void addmul_col(int dst, int src, const Int& f) {  // col_dst += f*col_src
    for (int i = 0; i < m.rows; ++i) {
      const Int& s = m.at(i, src);
      if (s != 0) m.at(i, dst) += f * s;
    }
    if (track) {
      for (int i = 0; i < v.rows; ++i) {
        const Int& s = v.at(i, src);
        if (s != 0) v.at(i, dst) += f * s;
      }
      for (int j = 0; j < vinv.cols; ++j) {
        const Int& s = vinv.at(dst, j);
        if (s != 0) vinv.at(src, j) -= f * s;
      }
    }
  }
  void negate_col(int c) {
    for (int i = 0; i < m.rows; ++i) m.at(i, c) = -m.at(i, c);
    if (track) {
      for (int i = 0; i < v.rows; ++i) v.at(i, c) = -v.at(i, c);
      for (int j = 0; j < vinv.cols; ++j) vinv.at(c, j) = -vinv.at(c, j);
    }
  }
  void negate_row(int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
  }

  void run() {
    const int lim = std::min(m.rows, m.cols);
    for (int t = 0; t < lim; ++t) {
      if (!place_pivot(t)) {
        finish_chain(t);
        return;
      }
      // clear row and column t, restarting if a division leaves a remainder
      bool again = true;
      while (again) {
        again = false;
        for (int i = t + 1; i < m.rows; ++i) {
          if (m.at(i, t) == 0) continue;
          Int q = m.at(i, t) / m.at(t, t);
          if (q != 0) addmul_row(i, t, -q);
          if (m.at(i, t) != 0) {  // remainder is a smaller pivot
            swap_rows(t, i);
            again = true;
          }
        }
        for (int j = t + 1; j < m.cols; ++j) {
          if (m.at(t, j) == 0) continue;
          Int q = m.at(t, j) / m.at(t, t);
          if (q != 0) addmul_col(j, t, -q);
          if (m.at(t, j) != 0) {
            swap_cols(t, j);
            again = true;
          }
        }
        if (!again) {
          // pivot must divide the whole remaining block
          for (int i = t + 1; i < m.rows && !again; ++i)
            for (int j = t + 1; j < m.cols; ++j)
              if (m.at(i, j) % m.at(t, t) != 0) {
                addmul_row(t, i, 1);
                again = true;
                break;
              }
        }
      }
      if (m.at(t, t) < 0) negate_row(t);
    }
    finish_chain(lim);
  }

  bool place_pivot(int t) {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < m.rows; ++i) {
      for (int j = t; j < m.cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (bi < 0 || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (best == 1 && bi >= 0) break;
    }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void finish_chain(int r) {
    // diagonal now; the in-block division fix above already enforces the
    // divisibility chain, but verify and normalize signs
    for (int i = 0; i + 1 < r; ++i)
      if (m.at(i + 1, i + 1) % m.at(i, i) != 0)
        throw std::logic_error("SNF divisibility chain violated");
    rank = r;
  }

  int rank = 0;
};

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
  Elim e(std::move(m), false);
  e.run();
  SNFResult r;
  r.rank = e.rank;
  for (int i = 0; i < e.rank; ++i) r.diag.push_back(e.m.at(i, i));
  return r;
}

SNFTransforms smith_with_column_transforms(IntMatrix m) {
  Elim e(std::move(m), true);
  e.run();
  SNFTransforms out;
  out.snf.rank = e.rank;
  for (int i = 0; i < e.rank; ++i) out.snf.diag.push_back(e.m.at(i, i));
  out.v = std::move(e.v);
  out.vinv = std::move(e.vinv);
  return out;
}

// ---------------------------------------------------------------------------
// bar complex
// ---------------------------------------------------------------------------

namespace {

inline int c1_index(Elt g) { return g - 1; }
inline int c2_index(int n, Elt g, Elt h) { return (g - 1) * (n - 1) + (h - 1); }

}  // namespace

BarBoundaries bar_boundaries(const Group& g, int dense_bound) {
  const int n = g.order();
  if (n > dense_bound)
    throw OrderBound("bar_boundaries dense mode is bounded at order " +
                     std::to_string(dense_bound));
  const int k1 = n - 1, k2 = k1 * k1, k3 = k2 * k1;
  BarBoundaries b;
  b.d2 = IntMatrix(k1, k2);
  b.d3 = IntMatrix(k2, k3);
  for (Elt x = 1; x < n; ++x)
    for (Elt y = 1; y < n; ++y) {
      int col = c2_index(n, x, y);
      // d[x|y] = [y] - [xy] + [x]
      b.d2.at(c1_index(y), col) += 1;
      if (Elt xy = g.mul(x, y); xy != 0) b.d2.at(c1_index(xy), col) -= 1;
      b.d2.at(c1_index(x), col) += 1;
    }
  for (Elt x = 1; x < n; ++x)
    for (Elt y = 1; y < n; ++y)
      for (Elt z = 1; z < n; ++z) {
        int col = (c2_index(n, x, y)) * k1 + (z - 1);
        // d[x|y|z] = [y|z] - [xy|z] + [x|yz] - [x|y]
        b.d3.at(c2_index(n, y, z), col) += 1;
        if (Elt xy = g.mul(x, y); xy != 0) b.d3.at(c2_index(n, xy, z), col) -= 1;
        if (Elt yz = g.mul(y, z); yz != 0) b.d3.at(c2_index(n, x, yz), col) += 1;
        b.d3.at(c2_index(n, x, y), col) -= 1;
      }
  return b;
}

// ---------------------------------------------------------------------------
// modular accumulator
// ---------------------------------------------------------------------------

ModAccumulator::ModAccumulator(int n, std::int64_t p, int k)
    : n_(n), p_(p), k_(k), pivot_exp_of_row_(n, -1) {
  mod_ = 1;
  for (int i = 0; i < k; ++i) mod_ *= p;
  t_.assign((std::size_t)n * n, 0);
  for (int i = 0; i < n; ++i) t_[(std::size_t)i * n + i] = 1;  // identity, column-major
}

int ModAccumulator::valuation(std::int64_t x) const {
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
    if (v >= k_) return k_;
  }
  return v;
}

void ModAccumulator::scale_row(int t, std::int64_t alpha) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n_; ++j) {
    auto& x = t_[(std::size_t)j * n_ + t];
    x = (__int128)x * alpha % mod_;
  }
  for (auto& q : queue_) q[t] = (__int128)q[t] * alpha % mod_;
}

void ModAccumulator::rowop(const std::vector<std::int64_t>& f, int t) {
  // row_s -= f[s] * row_t for every s != t with f[s] != 0
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n_; ++j) {
    std::int64_t tv = t_[(std::size_t)j * n_ + t];
    if (tv == 0) continue;
    std::int64_t* col = &t_[(std::size_t)j * n_];
    for (int s = 0; s < n_; ++s) {
      if (f[s] == 0 || s == t) continue;
      col[s] = (col[s] - (__int128)f[s] * tv) % mod_;
      if (col[s] < 0) col[s] += mod_;
    }
  }
  for (auto& q : queue_) {
    std::int64_t tv = q[t];
    if (tv == 0) continue;
    for (int s = 0; s < n_; ++s) {
      if (f[s] == 0 || s == t) continue;
      q[s] = (q[s] - (__int128)f[s] * tv) % mod_;
      if (q[s] < 0) q[s] += mod_;
    }
  }
}

void ModAccumulator::add_column(const std::vector<std::pair<int, std::int64_t>>& col) {
  std::vector<std::int64_t> y(n_, 0);
  bool any = false;
  for (auto [idx, coef] : col) {
    std::int64_t c = coef % mod_;
    if (c < 0) c += mod_;
    if (c == 0) continue;
    any = true;
    const std::int64_t* tc = &t_[(std::size_t)idx * n_];
    for (int s = 0; s < n_; ++s) {
      y[s] = (y[s] + (__int128)c * tc[s]) % mod_;
    }
  }
  if (!any) return;
  process(std::move(y));
  while (!queue_.empty()) {
    auto q = std::move(queue_.back());
    queue_.pop_back();
    process(std::move(q));
  }
}

void ModAccumulator::process(std::vector<std::int64_t> y) {
  for (;;) {
    // reduce against existing pivots
    for (auto [row, a] : pivots_) {
      std::int64_t pa = 1;
      for (int i = 0; i < a; ++i) pa *= p_;
      y[row] %= pa;
    }
    int best_row = -1, best_val = k_;
    int fallback_row = -1, fallback_val = k_;
    for (int s = 0; s < n_; ++s) {
      if (y[s] == 0) continue;
      int v = valuation(y[s]);
      if (pivot_exp_of_row_[s] < 0) {
        if (v < best_val) {
          best_val = v;
          best_row = s;
        }
      } else if (v < fallback_val) {
        fallback_val = v;
        fallback_row = s;
      }
    }
    if (best_row < 0 && fallback_row < 0) return;  // absorbed

    bool bump = false;
    int t, v;
    if (best_row >= 0 && (fallback_row < 0 || best_val <= fallback_val)) {
      t = best_row;
      v = best_val;
    } else {
      t = fallback_row;
      v = fallback_val;
      bump = true;  // strictly improves that pivot (v < a by reduction)
    }

    std::int64_t pv = 1;
    for (int i = 0; i < v; ++i) pv *= p_;
    std::int64_t unit = y[t] / pv;
    // modular inverse of the unit
    std::int64_t inv = 1, base = unit % mod_, e = mod_ / p_ * (p_ - 1) - 1;
    if (p_ == mod_) e = mod_ - 2;  // prime field
    for (std::int64_t b = base; e > 0; e >>= 1, b = (__int128)b * b % mod_)
      if (e & 1) inv = (__int128)inv * b % mod_;
    if ((__int128)inv * unit % mod_ != 1) throw std::logic_error("unit inversion failed");

    // scaling row t changes only coordinate t of the incoming vector; the
    // elimination factors come from the unscaled coordinates
    scale_row(t, inv);
    std::vector<std::int64_t> f(n_, 0);
    for (int s = 0; s < n_; ++s)
      if (s != t && y[s] != 0) f[s] = y[s] / pv;

    int old_exp = -1;
    if (bump) {
      old_exp = pivot_exp_of_row_[t];
      pivot_exp_of_row_[t] = -1;
      pivots_.erase(std::find(pivots_.begin(), pivots_.end(), std::make_pair(t, old_exp)));
    }
    rowop(f, t);
    if (bump) {
      // the displaced generator inv*p^old*e_t picks up -f[s]*inv*p^old
      std::int64_t pold = 1;
      for (int i = 0; i < old_exp; ++i) pold *= p_;
      std::int64_t scaled = (__int128)inv * pold % mod_;
      std::vector<std::int64_t> g(n_, 0);
      g[t] = scaled;
      for (int s = 0; s < n_; ++s)
        if (s != t && f[s] != 0) {
          g[s] = (-(__int128)f[s] * scaled) % mod_;
          if (g[s] < 0) g[s] += mod_;
        }
      queue_.push_back(std::move(g));
    }
    pivots_.emplace_back(t, v);
    pivot_exp_of_row_[t] = v;
    return;
  }
}

std::vector<int> ModAccumulator::exponents() const {
  std::vector<int> out;
  for (auto [row, a] : pivots_) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// homology
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> torsion_of(const SNFResult& snf) {
  std::vector<long long> out;
  for (const Int& d : snf.diag)
    if (d > 1) out.push_back(d.convert_to<long long>());
  return out;
}

void sparse_d2_col(const Group& g, Elt x, Elt y,
                   std::vector<std::pair<int, std::int64_t>>& col) {
  col.clear();
  auto push = [&](Elt e, std::int64_t c) {
    if (e != 0) col.emplace_back(c1_index(e), c);
  };
  push(y, 1);
  push(g.mul(x, y), -1);
  push(x, 1);
}

void sparse_d3_col(const Group& g, Elt x, Elt y, Elt z,
                   std::vector<std::pair<int, std::int64_t>>& col) {
  const int n = g.order();
  col.clear();
  auto push = [&](Elt a, Elt b, std::int64_t c) {
    if (a != 0 && b != 0) col.emplace_back(c2_index(n, a, b), c);
  };
  push(y, z, 1);
  push(g.mul(x, y), z, -1);
  push(x, g.mul(y, z), 1);
  push(x, y, -1);
}

long long rank_mod_prime(const Group& g, bool d3, std::int64_t q) {
  const int n = g.order();
  const int rows = d3 ? (n - 1) * (n - 1) : (n - 1);
  ModAccumulator acc(rows, q, 1);
  std::vector<std::pair<int, std::int64_t>> col;
  if (d3) {
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y)
        for (Elt z = 1; z < n; ++z) {
          sparse_d3_col(g, x, y, z, col);
          acc.add_column(col);
        }
  } else {
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y) {
        sparse_d2_col(g, x, y, col);
        acc.add_column(col);
      }
  }
  return acc.pivot_count();
}

}  // namespace

H2Report h2_sparse(const Group& g) {
  const int n = g.order();
  H2Report rep;
  rep.sparse = true;
  rep.dim_c2 = (n - 1) * (n - 1);
  rep.dim_c3 = rep.dim_c2 * (n - 1);
  if (n == 1) return rep;

  long long r2 = rank_mod_prime(g, false, 2147483647);
  long long r3 = rank_mod_prime(g, true, 2147483647);
  long long r3b = rank_mod_prime(g, true, 2147483629);
  if (r3 != r3b) throw std::logic_error("sparse rank disagrees across moduli");
  rep.z_rank = ((long long)rep.dim_c2 - r2) - r3;

  // prime factorization of |G|
  std::vector<std::pair<long long, int>> fac;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int v = 0;
      while (m % p == 0) {
        m /= p;
        ++v;
      }
      fac.emplace_back(p, v);
    }
  if (m > 1) fac.emplace_back(m, 1);

  std::vector<std::vector<long long>> per_prime;
  for (auto [p, vmax] : fac) {
    const int K = vmax + 2;
    ModAccumulator acc(rep.dim_c2, p, K);
    std::vector<std::pair<int, std::int64_t>> col;
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y)
        for (Elt z = 1; z < n; ++z) {
          sparse_d3_col(g, x, y, z, col);
          acc.add_column(col);
        }
    if (acc.pivot_count() != r3)
      throw std::logic_error("local pivot count disagrees with the rank");
    std::vector<int> exps;
    for (int e : acc.exponents())
      if (e > 0) {
        if (e > vmax) throw std::logic_error("local exponent exceeds v_p(|G|)");
        exps.push_back(e);
      }
    rep.local_exponents[p] = exps;
    std::vector<long long> powers;
    for (int e : exps) {
      long long pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      powers.push_back(pe);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime.push_back(std::move(powers));
  }
  std::size_t kmax = 0;
  for (auto& v : per_prime) kmax = std::max(kmax, v.size());
  for (std::size_t i = 0; i < kmax; ++i) {
    long long d = 1;
    for (auto& v : per_prime)
      if (i < v.size()) d *= v[i];
    rep.invariants.push_back(d);
  }
  std::reverse(rep.invariants.begin(), rep.invariants.end());
  return rep;
}

namespace {

std::vector<long long> h2_dense_invariants(const Group& g, int dense_bound, int* dim2 = nullptr,
                                           int* dim3 = nullptr) {
  auto bars = bar_boundaries(g, dense_bound);
  if (dim2) *dim2 = bars.d2.cols;
  if (dim3) *dim3 = bars.d3.cols;
  auto tr = smith_with_column_transforms(bars.d2);
  const int rank2 = tr.snf.rank;
  const int kdim = bars.d2.cols - rank2;
  // coordinates of d3 in the V basis: y = VINV * d3_col, exploiting the
  // column sparsity of d3; pivot coordinates must vanish (im d3 lies in
  // ker d2), kernel coordinates form X
  IntMatrix x(kdim, bars.d3.cols);
  std::vector<Int> y(bars.d2.cols);
  for (int col = 0; col < bars.d3.cols; ++col) {
    for (auto& yi : y) yi = 0;
    for (int r = 0; r < bars.d3.rows; ++r) {
      const Int& c = bars.d3.at(r, col);
      if (c == 0) continue;
      for (int i = 0; i < bars.d2.cols; ++i) {
        const Int& vv = tr.vinv.at(i, r);
        if (vv != 0) y[i] += vv * c;
      }
    }
    for (int i = 0; i < rank2; ++i)
      if (y[i] != 0) throw std::logic_error("im(d3) escapes ker(d2)");
    for (int i = rank2; i < bars.d2.cols; ++i) x.at(i - rank2, col) = y[i];
  }
  auto snf_x = smith_normal_form(std::move(x));
  if (kdim - snf_x.rank != 0) throw std::logic_error("H2 of a finite group must be finite");
  return torsion_of(snf_x);
}

std::vector<long long> h1_modular(const Group& g) {
  // coker(d2) is H1; its invariant factors are the elementary divisors of
  // d2 (> 1) because H1 of a finite group is finite. The elementary divisor
  // exponents are bounded by v_p(|G|) since exp(H1) divides |G|.
  const int n = g.order();
  const int rows = n - 1;
  long long r2 = rank_mod_prime(g, false, 2147483647);
  if (rows - r2 != 0) throw std::logic_error("H1 of a finite group must be finite");
  std::vector<std::pair<long long, int>> fac;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int v = 0;
      while (m % p == 0) {
        m /= p;
        ++v;
      }
      fac.emplace_back(p, v);
    }
  if (m > 1) fac.emplace_back(m, 1);
  std::vector<std::vector<long long>> per_prime;
  for (auto [p, vmax] : fac) {
    ModAccumulator acc(rows, p, vmax + 2);
    std::vector<std::pair<int, std::int64_t>> col;
    for (Elt x = 1; x < n; ++x)
      for (Elt y = 1; y < n; ++y) {
        sparse_d2_col(g, x, y, col);
        acc.add_column(col);
      }
    if (acc.pivot_count() != r2)
      throw std::logic_error("local pivot count disagrees with the rank (H1)");
    std::vector<long long> powers;
    for (int e : acc.exponents())
      if (e > 0) {
        if (e > vmax) throw std::logic_error("H1 local exponent exceeds v_p(|G|)");
        long long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        powers.push_back(pe);
      }
    std::sort(powers.rbegin(), powers.rend());
    per_prime.push_back(std::move(powers));
  }
  std::size_t kmax = 0;
  for (auto& v : per_prime) kmax = std::max(kmax, v.size());
  std::vector<long long> out;
  for (std::size_t i = 0; i < kmax; ++i) {
    long long d = 1;
    for (auto& v : per_prime)
      if (i < v.size()) d *= v[i];
    out.push_back(d);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

H2Report h2_report(const Group& g, const HomologyConfig& cfg) {
  const int n = g.order();
  if (n <= cfg.dense_bound) {
    H2Report rep;
    rep.invariants = h2_dense_invariants(g, cfg.dense_bound, &rep.dim_c2, &rep.dim_c3);
    return rep;
  }
  if (n <= cfg.sparse_bound) return h2_sparse(g);
  throw OrderBound("H2 is bounded at order " + std::to_string(cfg.sparse_bound));
}

std::vector<long long> homology(const Group& g, int n, const HomologyConfig& cfg) {
  if (n == 1) {
    const int go = g.order();
    if (go == 1) return {};
    if (go > 256) throw OrderBound("H1 is bounded at order 256");
    if (go <= cfg.dense_bound) {
      IntMatrix d2(go - 1, (go - 1) * (go - 1));
      for (Elt x = 1; x < go; ++x)
        for (Elt y = 1; y < go; ++y) {
          int col = c2_index(go, x, y);
          d2.at(c1_index(y), col) += 1;
          if (Elt xy = g.mul(x, y); xy != 0) d2.at(c1_index(xy), col) -= 1;
          d2.at(c1_index(x), col) += 1;
        }
      auto snf = smith_normal_form(std::move(d2));
      if ((go - 1) - snf.rank != 0) throw std::logic_error("H1 of a finite group must be finite");
      return torsion_of(snf);
    }
    return h1_modular(g);
  }
  if (n == 2) return h2_report(g, cfg).invariants;
  throw SchemaError("homology degree must be 1 or 2");
}

}  // namespace catgal::homology
