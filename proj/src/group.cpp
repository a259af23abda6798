#include "catgal/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "catgal/kernels.hpp"

namespace catgal::grp {

namespace {

void check_identity_and_latin(const std::vector<Elt>& t, int n, const std::string& name) {
  if ((std::size_t)n * n != t.size()) throw NotAGroup(name + ": table shape");
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    if (t[(std::size_t)0 * n + a] != a || t[(std::size_t)a * n + 0] != a)
      throw NotAGroup(name + ": row/column 0 is not the identity");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elt v = t[(std::size_t)a * n + b];
      if (v < 0 || v >= n || seen[v]) throw NotAGroup(name + ": row " + std::to_string(a));
      seen[v] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      Elt v = t[(std::size_t)a * n + b];
      if (seen[v]) throw NotAGroup(name + ": column " + std::to_string(b));
      seen[v] = 1;
    }
  }
}

void check_assoc_and_inverses(const std::vector<Elt>& t, int n, const std::string& name) {
  std::int64_t w = kernels::assoc_violation_parallel(t.data(), n);
  if (w >= 0) {
    int c = (int)(w % n), b = (int)(w / n % n), a = (int)(w / n / n);
    throw NotAGroup(name + ": associativity fails at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")");
  }
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b) has = t[(std::size_t)a * n + b] == 0;
    if (!has) throw NotAGroup(name + ": no inverse for " + std::to_string(a));
  }
}

}  // namespace

std::shared_ptr<const Group::Data> Group::finish(std::shared_ptr<Data> d) {
  const int n = d->order;
  if (d->table.empty()) d->table = {0};
  d->inv.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (d->table[(std::size_t)a * n + b] == 0) {
        d->inv[a] = b;
        break;
      }
  d->elt_order.assign(n, 1);
  for (int a = 1; a < n; ++a) {
    int o = 1;
    Elt x = a;
    while (x != 0) {
      x = d->table[(std::size_t)x * n + a];
      ++o;
    }
    d->elt_order[a] = o;
  }
  d->abelian = true;
  for (int a = 0; a < n && d->abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (d->table[(std::size_t)a * n + b] != d->table[(std::size_t)b * n + a]) {
        d->abelian = false;
        break;
      }
  // greedy generating set and BFS word table
  std::vector<char> in(n, 0);
  d->words.parent.assign(n, -1);
  d->words.gen.assign(n, -1);
  auto rebuild = [&] {
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    d->words.bfs = {0};
    std::fill(d->words.parent.begin(), d->words.parent.end(), -1);
    std::fill(d->words.gen.begin(), d->words.gen.end(), -1);
    std::size_t head = 0;
    while (head < d->words.bfs.size()) {
      Elt x = d->words.bfs[head++];
      for (std::size_t gi = 0; gi < d->gens.size(); ++gi) {
        Elt y = d->table[(std::size_t)x * n + d->gens[gi]];
        if (!in[y]) {
          in[y] = 1;
          d->words.bfs.push_back(y);
          d->words.parent[y] = x;
          d->words.gen[y] = (int)gi;
        }
      }
    }
  };
  rebuild();
  while ((int)d->words.bfs.size() < n) {
    Elt g = 0;
    while (in[g]) ++g;
    d->gens.push_back(g);
    rebuild();
  }
  return d;
}

Group Group::from_table(std::string name, const std::vector<std::vector<Elt>>& rows) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = (int)rows.size();
  if (d->order == 0) throw NotAGroup(d->name + ": empty table");
  d->table.reserve((std::size_t)d->order * d->order);
  for (auto& r : rows) {
    if ((int)r.size() != d->order) throw NotAGroup(d->name + ": ragged table");
    d->table.insert(d->table.end(), r.begin(), r.end());
  }
  check_identity_and_latin(d->table, d->order, d->name);
  check_assoc_and_inverses(d->table, d->order, d->name);
  return Group(finish(std::move(d)));
}

Group Group::from_permutations(std::string name, int degree,
                               const std::vector<std::vector<Elt>>& perms, int max_order) {
  for (auto& p : perms) {
    if ((int)p.size() != degree) throw NotAGroup(name + ": permutation degree mismatch");
    std::vector<char> seen(degree, 0);
    for (Elt v : p) {
      if (v < 0 || v >= degree || seen[v]) throw NotAGroup(name + ": not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<Elt> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<Elt>> elems = {ident};
  std::map<std::vector<Elt>, int> index = {{ident, 0}};
  auto compose = [&](const std::vector<Elt>& a, const std::vector<Elt>& b) {
    std::vector<Elt> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = a[b[i]];
    return r;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    auto x = elems[head];
    for (auto& g : perms) {
      auto y = compose(x, g);
      if (!index.count(y)) {
        if ((int)elems.size() >= max_order)
          throw OrderBound(name + ": closure exceeds " + std::to_string(max_order));
        index.emplace(y, (int)elems.size());
        elems.push_back(std::move(y));
      }
    }
  }
  const int n = (int)elems.size();
  std::vector<Elt> flat((std::size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[(std::size_t)a * n + b] = index.at(compose(elems[a], elems[b]));
  return trusted(std::move(name), std::move(flat), n);
}

Group Group::trusted(std::string name, std::vector<Elt> flat, int order) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->order = order;
  d->table = std::move(flat);
  check_identity_and_latin(d->table, order, d->name);
  if (order <= limits().max_order) check_assoc_and_inverses(d->table, order, d->name);
  return Group(finish(std::move(d)));
}

void Group::validate() const {
  check_identity_and_latin(d_->table, d_->order, d_->name);
  check_assoc_and_inverses(d_->table, d_->order, d_->name);
}

// ---------------------------------------------------------------------------

bool Subgroup::contains(Elt x) const {
  return std::binary_search(elems.begin(), elems.end(), x);
}

int Subgroup::index_of(Elt x) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), x);
  return it != elems.end() && *it == x ? (int)(it - elems.begin()) : -1;
}

bool Subgroup::is_normal() const {
  for (Elt g = 0; g < parent.order(); ++g) {
    Elt gi = parent.inv(g);
    for (Elt x : elems)
      if (!contains(parent.mul(parent.mul(g, x), gi))) return false;
  }
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!a.parent.same_table(b.parent)) throw ParentMismatch("intersect");
  Subgroup r{a.parent, {}};
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(r.elems));
  return r;
}

Group subgroup_as_group(const Subgroup& s, const std::string& name) {
  const int n = s.order();
  std::vector<Elt> flat((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = s.index_of(s.parent.mul(s.elems[i], s.elems[j]));
      if (k < 0) throw NotAGroup(name + ": element list not closed");
      flat[(std::size_t)i * n + j] = k;
    }
  return Group::trusted(name, std::move(flat), n);
}

// ---------------------------------------------------------------------------

Hom Hom::make(Group dom, Group cod, std::vector<Elt> map) {
  const int n = dom.order();
  if ((int)map.size() != n) throw NotAHom("map length " + std::to_string(map.size()) +
                                          " for group of order " + std::to_string(n));
  for (Elt v : map)
    if (v < 0 || v >= cod.order()) throw NotAHom("image out of range");
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      if (map[dom.mul(a, b)] != cod.mul(map[a], map[b]))
        throw NotAHom("multiplicativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
  Hom h;
  h.dom_ = std::move(dom);
  h.cod_ = std::move(cod);
  h.map_ = std::move(map);
  return h;
}

Hom Hom::identity(const Group& g) {
  std::vector<Elt> m(g.order());
  std::iota(m.begin(), m.end(), 0);
  Hom h;
  h.dom_ = g;
  h.cod_ = g;
  h.map_ = std::move(m);
  return h;
}

Hom Hom::compose(const Hom& g, const Hom& f) {
  if (!g.dom().same_table(f.cod())) throw CodMismatch("compose");
  std::vector<Elt> m(f.dom().order());
  for (Elt x = 0; x < (Elt)m.size(); ++x) m[x] = g(f(x));
  Hom h;
  h.dom_ = f.dom();
  h.cod_ = g.cod();
  h.map_ = std::move(m);
  return h;
}

bool Hom::surjective() const {
  std::vector<char> hit(cod_.order(), 0);
  int c = 0;
  for (Elt v : map_)
    if (!hit[v]) {
      hit[v] = 1;
      ++c;
    }
  return c == cod_.order();
}

bool Hom::injective() const {
  std::vector<char> hit(cod_.order(), 0);
  for (Elt v : map_) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Subgroup Hom::kernel() const {
  Subgroup s{dom_, {}};
  for (Elt x = 0; x < dom_.order(); ++x)
    if (map_[x] == 0) s.elems.push_back(x);
  return s;
}

Subgroup Hom::image() const {
  std::vector<char> hit(cod_.order(), 0);
  for (Elt v : map_) hit[v] = 1;
  Subgroup s{cod_, {}};
  for (Elt y = 0; y < cod_.order(); ++y)
    if (hit[y]) s.elems.push_back(y);
  return s;
}

Extension Extension::make(Hom h, std::string name) {
  if (!h.surjective()) throw NotAHom("extension must be surjective");
  Extension e;
  e.kernel = h.kernel();
  e.hom = std::move(h);
  e.name = name.empty() ? e.hom.dom().name() + "->" + e.hom.cod().name() : std::move(name);
  return e;
}

// ---------------------------------------------------------------------------

Subgroup subgroup_generated(const Group& g, const std::vector<Elt>& gens) {
  for (Elt x : gens)
    if (x < 0 || x >= g.order()) throw IndexOutOfRange("generator " + std::to_string(x));
  std::vector<char> in(g.order(), 0);
  in[0] = 1;
  std::vector<Elt> queue = {0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elt x = queue[head];
    for (Elt gen : gens) {
      for (Elt y : {g.mul(x, gen), g.mul(x, g.inv(gen))})
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
    }
  }
  Subgroup s{g, {}};
  for (Elt x = 0; x < g.order(); ++x)
    if (in[x]) s.elems.push_back(x);
  return s;
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (!h.parent.same_table(g) || !k.parent.same_table(g)) throw ParentMismatch("commutator");
  std::vector<char> gen_set(g.order(), 0);
  for (Elt a : h.elems)
    for (Elt b : k.elems)
      gen_set[g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b))] = 1;
  std::vector<Elt> gens;
  for (Elt x = 0; x < g.order(); ++x)
    if (gen_set[x]) gens.push_back(x);
  return subgroup_generated(g, gens);
}

Subgroup derived_subgroup(const Group& g) {
  Subgroup w = whole(g);
  return commutator_subgroup(g, w, w);
}

Subgroup center(const Group& g) {
  Subgroup s{g, {}};
  for (Elt z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elt x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) s.elems.push_back(z);
  }
  return s;
}

Subgroup whole(const Group& g) {
  Subgroup s{g, std::vector<Elt>(g.order())};
  std::iota(s.elems.begin(), s.elems.end(), 0);
  return s;
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup{g, {0}}; }

QuotientResult quotient(const Group& g, const Subgroup& n) {
  if (!n.parent.same_table(g)) throw ParentMismatch("quotient");
  if (!n.is_normal()) throw NotNormal(g.name() + " / " + std::to_string(n.order()));
  const int go = g.order();
  std::vector<int> coset(go, -1);
  std::vector<Elt> rep;  // minimal member of each coset, in discovery order
  for (Elt x = 0; x < go; ++x) {
    if (coset[x] >= 0) continue;
    Elt mn = x;
    for (Elt k : n.elems) mn = std::min(mn, g.mul(x, k));
    for (Elt k : n.elems) coset[g.mul(x, k)] = (int)rep.size();
    rep.push_back(mn);
  }
  // relabel so cosets are ordered by minimal member
  std::vector<int> order_idx(rep.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) { return rep[a] < rep[b]; });
  std::vector<int> rank(rep.size());
  for (int i = 0; i < (int)rep.size(); ++i) rank[order_idx[i]] = i;
  std::vector<Elt> proj(go);
  for (Elt x = 0; x < go; ++x) proj[x] = rank[coset[x]];
  std::vector<Elt> rep_sorted(rep.size());
  for (int i = 0; i < (int)rep.size(); ++i) rep_sorted[rank[i]] = rep[i];
  const int qn = (int)rep.size();
  std::vector<Elt> flat((std::size_t)qn * qn);
  for (int a = 0; a < qn; ++a)
    for (int b = 0; b < qn; ++b)
      flat[(std::size_t)a * qn + b] = proj[g.mul(rep_sorted[a], rep_sorted[b])];
  Group q = Group::trusted(g.name() + "/N" + std::to_string(n.order()), std::move(flat), qn);
  return {q, Hom::make(g, q, std::move(proj))};
}

QuotientResult abelianization(const Group& g) {
  auto r = quotient(g, derived_subgroup(g));
  Group ig = Group::trusted("I(" + g.name() + ")", r.group.flat_table(), r.group.order());
  return {ig, Hom::make(g, ig, r.proj.map())};
}

int PullbackResult::pair_index(Elt a, Elt c) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, c));
  return it != pairs.end() && *it == std::make_pair(a, c) ? (int)(it - pairs.begin()) : -1;
}

PullbackResult pullback(const Hom& f, const Hom& g) {
  if (!f.cod().same_table(g.cod())) throw CodMismatch("pullback");
  const Group& a = f.dom();
  const Group& c = g.dom();
  PullbackResult r;
  for (Elt x = 0; x < a.order(); ++x)
    for (Elt y = 0; y < c.order(); ++y)
      if (f(x) == g(y)) r.pairs.emplace_back(x, y);
  const int n = (int)r.pairs.size();
  std::vector<Elt> flat((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt px = a.mul(r.pairs[i].first, r.pairs[j].first);
      Elt py = c.mul(r.pairs[i].second, r.pairs[j].second);
      int k = r.pair_index(px, py);
      if (k < 0) throw NotAGroup("pullback carrier not closed");
      flat[(std::size_t)i * n + j] = k;
    }
  r.group = Group::trusted(a.name() + "x_" + f.cod().name() + "_" + c.name(), std::move(flat), n);
  std::vector<Elt> m1(n), m2(n);
  for (int i = 0; i < n; ++i) {
    m1[i] = r.pairs[i].first;
    m2[i] = r.pairs[i].second;
  }
  r.p1 = Hom::make(r.group, a, std::move(m1));
  r.p2 = Hom::make(r.group, c, std::move(m2));
  return r;
}

PullbackResult product(const Group& a, const Group& b) {
  Group one = Group::trusted("1", {0}, 1);
  Hom fa = Hom::make(a, one, std::vector<Elt>(a.order(), 0));
  Hom fb = Hom::make(b, one, std::vector<Elt>(b.order(), 0));
  auto r = pullback(fa, fb);
  r.group = Group::trusted(a.name() + "x" + b.name(), r.group.flat_table(), r.group.order());
  r.p1 = Hom::make(r.group, a, r.p1.map());
  r.p2 = Hom::make(r.group, b, r.p2.map());
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Hom> enumerate_homs(const Group& a, const Group& b,
                                const std::optional<HomConstraint>& c, std::int64_t budget) {
  if (c) {
    if (!c->through.dom().same_table(b)) throw CodMismatch("constraint through-map domain");
    if (!c->target.dom().same_table(a)) throw CodMismatch("constraint target domain");
    if (!c->through.cod().same_table(c->target.cod())) throw CodMismatch("constraint codomains");
  }
  const auto& gens = a.generating_set();
  const auto& words = a.word_table();
  const int na = a.order(), nb = b.order();

  std::vector<std::vector<Elt>> cands(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const int go = a.elt_order(gens[gi]);
    for (Elt y = 0; y < nb; ++y) {
      if (go % b.elt_order(y) != 0) continue;
      if (c && c->through(y) != c->target(gens[gi])) continue;
      cands[gi].push_back(y);
    }
  }

  std::vector<Hom> out;
  if (gens.empty()) {
    out.push_back(Hom::make(a, b, std::vector<Elt>(na, 0)));
    return out;
  }
  for (auto& cs : cands)
    if (cs.empty()) return out;

  std::vector<Elt> img(na);
  std::int64_t nodes = 0;
  std::vector<std::size_t> idx(gens.size(), 0);
  // odometer over candidate tuples, lexicographic => deterministic output
  for (;;) {
    if (++nodes > budget) throw SearchBudgetExceeded("enumerate_homs");
    img[0] = 0;
    for (std::size_t w = 1; w < words.bfs.size(); ++w) {
      Elt x = words.bfs[w];
      img[x] = b.mul(img[words.parent[x]], cands[words.gen[x]][idx[words.gen[x]]]);
    }
    bool ok = true;
    for (Elt x = 0; x < na && ok; ++x)
      for (Elt y = 0; y < na; ++y)
        if (img[a.mul(x, y)] != b.mul(img[x], img[y])) {
          ok = false;
          break;
        }
    if (ok && c)
      for (Elt x = 0; x < na && ok; ++x) ok = c->through(img[x]) == c->target(x);
    if (ok) out.push_back(Hom::make(a, b, img));
    std::size_t d = gens.size();
    while (d > 0 && ++idx[d - 1] == cands[d - 1].size()) idx[--d] = 0;
    if (d == 0) break;
  }
  return out;
}

std::vector<long long> abelian_invariants(const Group& g) {
  if (!g.abelian()) throw NotAbelian(g.name());
  const long long n = g.order();
  if (n == 1) return {};
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
  auto count_dividing = [&](long long d) {
    int c = 0;
    for (Elt x = 0; x < g.order(); ++x)
      if (d % g.elt_order(x) == 0) ++c;
    return (long long)c;
  };
  std::vector<std::vector<long long>> per_prime;
  for (auto [p, vmax] : fac) {
    long long prev = 1;
    std::vector<int> r(vmax + 2, 0);
    for (int j = 1; j <= vmax; ++j) {
      long long pj = 1;
      for (int q = 0; q < j; ++q) pj *= p;
      long long cnt = count_dividing(pj);
      long long quo = cnt / prev;
      int rj = 0;
      while (quo > 1) {
        quo /= p;
        ++rj;
      }
      r[j] = rj;
      prev = cnt;
    }
    std::vector<long long> powers;
    for (int j = 1; j <= vmax; ++j) {
      long long pj = 1;
      for (int q = 0; q < j; ++q) pj *= p;
      for (int t = 0; t < r[j] - r[j + 1]; ++t) powers.push_back(pj);
    }
    std::sort(powers.rbegin(), powers.rend());
    per_prime.push_back(std::move(powers));
  }
  std::size_t k = 0;
  for (auto& v : per_prime) k = std::max(k, v.size());
  std::vector<long long> out;
  for (std::size_t i = 0; i < k; ++i) {
    long long d = 1;
    for (auto& v : per_prime)
      if (i < v.size()) d *= v[i];
    out.push_back(d);
  }
  std::reverse(out.begin(), out.end());
  long long prod = 1;
  for (long long d : out) prod *= d;
  if (prod != n) throw NotAbelian(g.name() + ": invariant factorization failed");
  return out;
}

std::optional<Hom> find_isomorphism(const Group& g, const Group& h, int max_order) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > max_order)
    throw OrderBound("isomorphism search above " + std::to_string(max_order));
  std::vector<int> po(g.order()), qo(h.order());
  for (Elt x = 0; x < g.order(); ++x) po[x] = g.elt_order(x);
  for (Elt x = 0; x < h.order(); ++x) qo[x] = h.elt_order(x);
  {
    auto a = po, b = qo;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (g.abelian() != h.abelian()) return std::nullopt;
  if (g.abelian() && abelian_invariants(g) != abelian_invariants(h)) return std::nullopt;

  const auto& gens = g.generating_set();
  const auto& words = g.word_table();
  const int n = g.order();
  std::vector<std::vector<Elt>> cands(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (Elt y = 0; y < n; ++y)
      if (qo[y] == po[gens[gi]]) cands[gi].push_back(y);
  if (gens.empty()) return Hom::identity(g);

  for (auto& cs : cands)
    if (cs.empty()) return std::nullopt;
  std::vector<std::size_t> idx(gens.size(), 0);
  std::vector<Elt> img(n);
  std::vector<char> hit(n);
  std::int64_t nodes = 0;
  for (;;) {
    if (++nodes > limits().hom_budget) throw SearchBudgetExceeded("find_isomorphism");
    img[0] = 0;
    for (std::size_t w = 1; w < words.bfs.size(); ++w) {
      Elt x = words.bfs[w];
      img[x] = h.mul(img[words.parent[x]], cands[words.gen[x]][idx[words.gen[x]]]);
    }
    std::fill(hit.begin(), hit.end(), 0);
    bool bij = true;
    for (Elt x = 0; x < n && bij; ++x) {
      if (hit[img[x]]) bij = false;
      hit[img[x]] = 1;
    }
    if (bij) {
      bool ok = true;
      for (Elt x = 0; x < n && ok; ++x)
        for (Elt y = 0; y < n; ++y)
          if (img[g.mul(x, y)] != h.mul(img[x], img[y])) {
            ok = false;
            break;
          }
      if (ok) return Hom::make(g, h, img);
    }
    std::size_t d = gens.size();
    while (d > 0 && ++idx[d - 1] == cands[d - 1].size()) idx[--d] = 0;
    if (d == 0) break;
  }
  return std::nullopt;
}

bool is_isomorphic(const Group& g, const Group& h, int max_order) {
  return find_isomorphism(g, h, max_order).has_value();
}

Hom restrict_hom(const Hom& f, const Subgroup& s, const Group& s_group,
                 const Subgroup& t, const Group& t_group) {
  std::vector<Elt> m(s.order());
  for (int i = 0; i < s.order(); ++i) {
    int j = t.index_of(f(s.elems[i]));
    if (j < 0)
      throw RestrictionEscapes("image of element " + std::to_string(s.elems[i]) +
                               " leaves the target subobject");
    m[i] = j;
  }
  return Hom::make(s_group, t_group, std::move(m));
}

}  // namespace catgal::grp
