#include "catgal/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "catgal/structure.hpp"

namespace catgal::gpd {

using namespace grp;

namespace {

std::string at(int x) { return " at arrow " + std::to_string(x); }

void check_map(const std::vector<int>& m, int dom_size, int cod_size, const char* name) {
  if ((int)m.size() != dom_size) throw AxiomViolation(std::string(name) + ": wrong length");
  for (int v : m)
    if (v < 0 || v >= cod_size) throw AxiomViolation(std::string(name) + ": out of range");
}

void check_hom_if_group(const Carrier& dom, const Carrier& cod, const std::vector<int>& m,
                        const char* name) {
  if (dom.is_group && cod.is_group) {
    try {
      Hom::make(dom.group, cod.group, m);
    } catch (const NotAHom& e) {
      throw AxiomViolation(std::string(name) + " is not a hom: " + e.what());
    }
  } else {
    if (m[dom.basepoint] != cod.basepoint)
      throw AxiomViolation(std::string(name) + " does not preserve the basepoint");
  }
}

}  // namespace

int InternalGroupoid::pair_index(int x, int y) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y));
  return it != pairs.end() && *it == std::make_pair(x, y) ? (int)(it - pairs.begin()) : -1;
}

int InternalGroupoid::compose(int x, int y) const {
  int i = pair_index(x, y);
  if (i < 0) throw AxiomViolation("compose: not a composable pair");
  return m[i];
}

bool is_relation(const InternalGroupoid& r) {
  std::vector<char> seen((std::size_t)r.obj.size * r.obj.size, 0);
  for (int x = 0; x < r.arr.size; ++x) {
    auto& flag = seen[(std::size_t)r.d[x] * r.obj.size + r.c[x]];
    if (flag) return false;
    flag = 1;
  }
  return true;
}

InternalGroupoid mk_internal_groupoid(GroupoidParts parts) {
  InternalGroupoid r;
  r.obj = std::move(parts.obj);
  r.arr = std::move(parts.arr);
  r.d = std::move(parts.d);
  r.c = std::move(parts.c);
  r.e = std::move(parts.e);
  const int no = r.obj.size, na = r.arr.size;
  check_map(r.d, na, no, "d");
  check_map(r.c, na, no, "c");
  check_map(r.e, no, na, "e");
  check_hom_if_group(r.arr, r.obj, r.d, "d");
  check_hom_if_group(r.arr, r.obj, r.c, "c");
  check_hom_if_group(r.obj, r.arr, r.e, "e");
  if (!r.obj.is_group && r.arr.basepoint != r.e[r.obj.basepoint])
    throw AxiomViolation("arr basepoint is not e(obj basepoint)");

  for (int o = 0; o < no; ++o) {
    if (r.d[r.e[o]] != o) throw AxiomViolation("d.e != id at object " + std::to_string(o));
    if (r.c[r.e[o]] != o) throw AxiomViolation("c.e != id at object " + std::to_string(o));
  }

  // composable pairs (square (1) is a pullback by construction)
  if ((int)parts.m_matrix.size() != na * na)
    throw AxiomViolation("m matrix must be arr*arr with -1 off the composable set");
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) {
      bool composable = r.c[x] == r.d[y];
      int v = parts.m_matrix[(std::size_t)x * na + y];
      if (composable) {
        if (v < 0 || v >= na)
          throw AxiomViolation("m undefined on a composable pair" + at(x) + "," +
                               std::to_string(y));
        r.pairs.emplace_back(x, y);
        r.m.push_back(v);
      } else if (v != -1) {
        throw AxiomViolation("m defined on a non-composable pair" + at(x));
      }
    }

  // squares (2) and (3): d(m) = d(p1), c(m) = c(p2)
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    auto [x, y] = r.pairs[i];
    if (r.d[r.m[i]] != r.d[x]) throw AxiomViolation("square (2) fails" + at(x));
    if (r.c[r.m[i]] != r.c[y]) throw AxiomViolation("square (3) fails" + at(y));
  }

  // m is a hom on the materialized pullback carrier (group carriers)
  if (r.arr.is_group && r.obj.is_group) {
    Hom dh = Hom::make(r.arr.group, r.obj.group, r.d);
    Hom ch = Hom::make(r.arr.group, r.obj.group, r.c);
    auto pg = grp::pullback(ch, dh);
    if (pg.pairs != r.pairs) throw AxiomViolation("composable-pairs carrier mismatch");
    try {
      Hom::make(pg.group, r.arr.group, r.m);
    } catch (const NotAHom& e) {
      throw AxiomViolation(std::string("m is not a hom: ") + e.what());
    }
  }

  // unit laws m<1,ec> = id = m<ed,1>
  for (int x = 0; x < na; ++x) {
    if (r.compose(x, r.e[r.c[x]]) != x) throw AxiomViolation("right unit fails" + at(x));
    if (r.compose(r.e[r.d[x]], x) != x) throw AxiomViolation("left unit fails" + at(x));
  }

  // associativity on composable triples
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    auto [x, y] = r.pairs[i];
    for (int z = 0; z < na; ++z) {
      if (r.d[z] != r.c[y]) continue;
      if (r.compose(r.m[i], z) != r.compose(x, r.compose(y, z)))
        throw AxiomViolation("associativity fails" + at(x) + "," + std::to_string(y) + "," +
                             std::to_string(z));
    }
  }

  // inverses: supplied or derived (necessarily unique)
  if (parts.s) {
    r.s = std::move(*parts.s);
    check_map(r.s, na, na, "s");
    check_hom_if_group(r.arr, r.arr, r.s, "s");
  } else {
    r.s.assign(na, -1);
    for (int x = 0; x < na; ++x) {
      for (int y = 0; y < na; ++y) {
        if (r.d[y] != r.c[x] || r.c[y] != r.d[x]) continue;
        if (r.compose(x, y) == r.e[r.d[x]] && r.compose(y, x) == r.e[r.c[x]]) {
          if (r.s[x] >= 0) throw AxiomViolation("two-sided inverse not unique" + at(x));
          r.s[x] = y;
        }
      }
      if (r.s[x] < 0) throw AxiomViolation("no inverse" + at(x));
    }
  }
  for (int x = 0; x < na; ++x) {
    if (r.d[r.s[x]] != r.c[x] || r.c[r.s[x]] != r.d[x])
      throw AxiomViolation("s endpoints wrong" + at(x));
    if (r.compose(x, r.s[x]) != r.e[r.d[x]] || r.compose(r.s[x], x) != r.e[r.c[x]])
      throw AxiomViolation("inverse law fails" + at(x));
  }

  // groupoid iff (2) and (3) are pullbacks: compare against the materialized
  // fibered products of (d,d) and (c,c)
  {
    std::size_t dd = 0, cc = 0;
    std::vector<char> hit2((std::size_t)na * na, 0), hit3((std::size_t)na * na, 0);
    for (int u = 0; u < na; ++u)
      for (int v = 0; v < na; ++v) {
        if (r.d[u] == r.d[v]) ++dd;
        if (r.c[u] == r.c[v]) ++cc;
      }
    if (dd != r.pairs.size() || cc != r.pairs.size())
      throw AxiomViolation("squares (2)/(3) cannot be pullbacks: size mismatch");
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      auto [x, y] = r.pairs[i];
      auto& h2 = hit2[(std::size_t)r.m[i] * na + x];
      if (h2) throw AxiomViolation("square (2) comparison not injective" + at(x));
      h2 = 1;
      auto& h3 = hit3[(std::size_t)r.m[i] * na + y];
      if (h3) throw AxiomViolation("square (3) comparison not injective" + at(y));
      h3 = 1;
    }
  }
  return r;
}

InternalGroupoid kernel_pair_groupoid(const Extension& p) {
  return kernel_pair_groupoid_data(p).g;
}

KernelPairData kernel_pair_groupoid_data(const Extension& p) {
  auto eq = grp::pullback(p.hom, p.hom);
  const int na = eq.group.order();
  GroupoidParts parts;
  parts.obj = Carrier::of_group(p.dom());
  parts.arr = Carrier::of_group(eq.group);
  parts.d = eq.p1.map();
  parts.c = eq.p2.map();
  parts.e.resize(p.dom().order());
  for (int x = 0; x < p.dom().order(); ++x) parts.e[x] = eq.pair_index(x, x);
  parts.m_matrix.assign((std::size_t)na * na, -1);
  std::vector<int> s(na);
  for (int i = 0; i < na; ++i) {
    auto [x, y] = eq.pairs[i];
    s[i] = eq.pair_index(y, x);
    for (int j = 0; j < na; ++j) {
      auto [y2, z] = eq.pairs[j];
      if (y2 == y) parts.m_matrix[(std::size_t)i * na + j] = eq.pair_index(x, z);
    }
  }
  parts.s = std::move(s);
  return {mk_internal_groupoid(std::move(parts)), std::move(eq)};
}

ReflectedGroupoid apply_I_groupoid(const InternalGroupoid& r) {
  if (!r.obj.is_group || !r.arr.is_group)
    throw AxiomViolation("abelianisation reflector needs group carriers");
  auto io = grp::abelianization(r.obj.group);
  auto ia = grp::abelianization(r.arr.group);
  const int na = ia.group.order();

  auto induce = [&](const std::vector<int>& f, const QuotientResult& from_q,
                    const QuotientResult& to, int dom_size, const char* name) {
    std::vector<int> m(from_q.group.order(), -1);
    for (int x = 0; x < dom_size; ++x) {
      int cls = from_q.proj(x), val = to.proj(f[x]);
      if (m[cls] >= 0 && m[cls] != val)
        throw NotAGroupoidAfterReflection(std::string(name) + " ill-defined after reflection");
      m[cls] = val;
    }
    return m;
  };

  GroupoidParts parts;
  parts.obj = Carrier::of_group(io.group);
  parts.arr = Carrier::of_group(ia.group);
  parts.d = induce(r.d, ia, io, r.arr.size, "d");
  parts.c = induce(r.c, ia, io, r.arr.size, "c");
  parts.e = induce(r.e, io, ia, r.obj.size, "e");

  // induced composition: scan all composable preimage pairs
  parts.m_matrix.assign((std::size_t)na * na, -1);
  std::vector<char> defined((std::size_t)na * na, 0);
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    auto [x, y] = r.pairs[i];
    int u = ia.proj(x), v = ia.proj(y);
    int val = ia.proj(r.m[i]);
    auto& slot = parts.m_matrix[(std::size_t)u * na + v];
    if (defined[(std::size_t)u * na + v] && slot != val)
      throw NotAGroupoidAfterReflection("composition ill-defined on reflected classes (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
    slot = val;
    defined[(std::size_t)u * na + v] = 1;
  }
  // every composable pair downstairs must be reachable from upstairs
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < na; ++v)
      if (parts.d[v] == parts.c[u] && !defined[(std::size_t)u * na + v])
        throw NotAGroupoidAfterReflection("composable pair (" + std::to_string(u) + "," +
                                          std::to_string(v) + ") has no composable preimage");

  // when d and c are trivial coverings the reflector preserves the
  // composable-pairs pullback; assert the comparison is bijective
  Hom dh = Hom::make(r.arr.group, r.obj.group, r.d);
  Hom ch = Hom::make(r.arr.group, r.obj.group, r.c);
  if (dh.surjective() && ch.surjective()) {
    Extension de = Extension::make(dh, "groupoid.d");
    Extension ce = Extension::make(ch, "groupoid.c");
    if (structure::is_trivial_covering(de) && structure::is_trivial_covering(ce)) {
      auto up = grp::pullback(ch, dh);          // composable pairs upstairs
      auto iup = grp::abelianization(up.group); // I(R1 x_R0 R1)
      Hom idh = Hom::make(ia.group, io.group, parts.d);
      Hom ich = Hom::make(ia.group, io.group, parts.c);
      auto down = grp::pullback(ich, idh);      // I(R1) x_I(R0) I(R1)
      if (iup.group.order() != down.group.order())
        throw NotAGroupoidAfterReflection("pullback not preserved: sizes differ");
      std::vector<char> hit(down.group.order(), 0);
      for (int i = 0; i < up.group.order(); ++i) {
        auto [x, y] = up.pairs[i];
        int j = down.pair_index(ia.proj(x), ia.proj(y));
        if (j < 0) throw NotAGroupoidAfterReflection("pullback comparison escapes");
        hit[j] = 1;
      }
      for (char h : hit)
        if (!h) throw NotAGroupoidAfterReflection("pullback comparison not surjective");
    }
  }

  ReflectedGroupoid out{mk_internal_groupoid(std::move(parts)), io.proj, ia.proj};
  return out;
}

int AutResult::arrow_to_elt(int arrow) const {
  for (std::size_t i = 0; i < loop_arrows.size(); ++i)
    if (loop_arrows[i] == arrow) return (int)i;
  return -1;
}

AutResult aut_at_zero(const InternalGroupoid& r) {
  const int bp = r.obj.basepoint;
  std::vector<int> loops;
  for (int x = 0; x < r.arr.size; ++x)
    if (r.d[x] == bp && r.c[x] == bp) loops.push_back(x);
  const int id_loop = r.e[bp];
  // identity first, the rest in ascending arrow order
  std::vector<int> order = {id_loop};
  for (int x : loops)
    if (x != id_loop) order.push_back(x);
  std::vector<int> pos(r.arr.size, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = (int)i;
  const int n = (int)order.size();
  std::vector<int> flat((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int z = r.compose(order[i], order[j]);
      if (pos[z] < 0) throw NotAGroupOnLoops("composition leaves the loop set");
      flat[(std::size_t)i * n + j] = pos[z];
    }
  try {
    AutResult res{Group::trusted("Aut(0)", std::move(flat), n), std::move(order)};
    return res;
  } catch (const NotAGroup& err) {
    throw NotAGroupOnLoops(err.what());
  }
}

void validate_functor(const InternalGroupoid& r, const InternalGroupoid& t,
                      const InternalFunctor& f) {
  check_map(f.f0, r.obj.size, t.obj.size, "f0");
  check_map(f.f1, r.arr.size, t.arr.size, "f1");
  check_hom_if_group(r.obj, t.obj, f.f0, "f0");
  check_hom_if_group(r.arr, t.arr, f.f1, "f1");
  for (int x = 0; x < r.arr.size; ++x) {
    if (t.d[f.f1[x]] != f.f0[r.d[x]]) throw AxiomViolation("functor d-square fails" + at(x));
    if (t.c[f.f1[x]] != f.f0[r.c[x]]) throw AxiomViolation("functor c-square fails" + at(x));
  }
  for (int o = 0; o < r.obj.size; ++o)
    if (t.e[f.f0[o]] != f.f1[r.e[o]])
      throw AxiomViolation("functor e-square fails at object " + std::to_string(o));
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    auto [x, y] = r.pairs[i];
    if (f.f1[r.m[i]] != t.compose(f.f1[x], f.f1[y]))
      throw AxiomViolation("functor m-square fails" + at(x));
  }
}

bool validate_nat_trans(const InternalGroupoid& r, const InternalGroupoid& t,
                        const InternalFunctor& f, const InternalFunctor& g,
                        const std::vector<int>& mu) {
  if ((int)mu.size() != r.obj.size) return false;
  for (int o = 0; o < r.obj.size; ++o) {
    int u = mu[o];
    if (u < 0 || u >= t.arr.size) return false;
    if (t.d[u] != f.f0[o]) return false;
    if (t.c[u] != g.f0[o]) return false;
  }
  if (r.obj.is_group && t.arr.is_group) {
    // mu must be structure preserving
    for (int a = 0; a < r.obj.size; ++a)
      for (int b = 0; b < r.obj.size; ++b)
        if (mu[r.obj.group.mul(a, b)] != t.arr.group.mul(mu[a], mu[b])) return false;
  } else if (mu[r.obj.basepoint] != t.arr.basepoint) {
    return false;
  }
  for (int x = 0; x < r.arr.size; ++x)
    if (t.compose(f.f1[x], mu[r.c[x]]) != t.compose(mu[r.d[x]], g.f1[x])) return false;
  return true;
}

std::optional<InternalNatTrans> are_naturally_isomorphic(const InternalGroupoid& r,
                                                         const InternalGroupoid& t,
                                                         const InternalFunctor& f,
                                                         const InternalFunctor& g,
                                                         std::int64_t budget) {
  validate_functor(r, t, f);
  validate_functor(r, t, g);
  if (f.f0 == g.f0 && f.f1 == g.f1) {
    std::vector<int> mu(r.obj.size);
    for (int o = 0; o < r.obj.size; ++o) mu[o] = t.e[f.f0[o]];
    return InternalNatTrans{std::move(mu)};
  }
  if (is_relation(t)) {
    // mu(o) must be the unique arrow f0(o) -> g0(o); build and validate
    std::vector<int> arrow_at((std::size_t)t.obj.size * t.obj.size, -1);
    for (int x = 0; x < t.arr.size; ++x)
      arrow_at[(std::size_t)t.d[x] * t.obj.size + t.c[x]] = x;
    std::vector<int> mu(r.obj.size, -1);
    bool ok = true;
    for (int o = 0; o < r.obj.size && ok; ++o) {
      mu[o] = arrow_at[(std::size_t)f.f0[o] * t.obj.size + g.f0[o]];
      ok = mu[o] >= 0;
    }
    if (ok && validate_nat_trans(r, t, f, g, mu)) return InternalNatTrans{std::move(mu)};
    return std::nullopt;
  }
  // exhaustive search over carrier maps obj -> arr'
  if (r.obj.is_group && t.arr.is_group) {
    auto homs = grp::enumerate_homs(r.obj.group, t.arr.group, std::nullopt, budget);
    for (const auto& h : homs)
      if (validate_nat_trans(r, t, f, g, h.map())) return InternalNatTrans{h.map()};
    return std::nullopt;
  }
  double space = std::pow((double)t.arr.size, (double)r.obj.size);
  if (space > (double)budget) throw SearchBudgetExceeded("natural transformation search");
  std::vector<int> mu(r.obj.size, 0);
  for (;;) {
    if (validate_nat_trans(r, t, f, g, mu)) return InternalNatTrans{mu};
    int i = r.obj.size - 1;
    while (i >= 0 && ++mu[i] == t.arr.size) mu[i--] = 0;
    if (i < 0) break;
  }
  return std::nullopt;
}

grp::Hom induced_map_on_aut(const InternalFunctor& f, const InternalGroupoid&,
                            const InternalGroupoid&, const AutResult& aut_r,
                            const AutResult& aut_t) {
  std::vector<int> m(aut_r.loop_arrows.size());
  for (std::size_t i = 0; i < aut_r.loop_arrows.size(); ++i) {
    int img = f.f1[aut_r.loop_arrows[i]];
    int j = aut_t.arrow_to_elt(img);
    if (j < 0) throw RestrictionEscapes("functor image leaves the loop subobject");
    m[i] = j;
  }
  return Hom::make(aut_r.group, aut_t.group, std::move(m));
}

}  // namespace catgal::gpd
