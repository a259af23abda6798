#include "catgal/graph.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>

namespace catgal::graph {

using io::json;

void Graph::validate() const {
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const Dart& d = darts[i];
    if (d.id != (int)i) throw SchemaError(name + ": dart ids must be positions");
    if (d.reverse < 0 || d.reverse >= (int)darts.size() || d.reverse == d.id)
      throw SchemaError(name + ": reverse must be a fixed-point-free involution");
    if (darts[d.reverse].reverse != d.id)
      throw SchemaError(name + ": reverse is not an involution at dart " + std::to_string(d.id));
    if (d.source < 0 || d.source >= vertices) throw SchemaError(name + ": dart source range");
  }
  if (vertices > 0 && (basepoint < 0 || basepoint >= vertices))
    throw SchemaError(name + ": basepoint range");
}

Graph graph_from_json(const json& j) {
  Graph g;
  g.name = j.value("name", "graph");
  g.vertices = j.at("vertices").get<int>();
  for (const auto& jd : j.at("darts"))
    g.darts.push_back(Dart{jd.at("id").get<int>(), jd.at("reverse").get<int>(),
                           jd.at("source").get<int>()});
  std::sort(g.darts.begin(), g.darts.end(), [](const Dart& a, const Dart& b) { return a.id < b.id; });
  g.basepoint = j.at("basepoint").get<int>();
  g.validate();
  return g;
}

Graph load_graph(const std::string& path) { return graph_from_json(io::load_json(path)); }

GraphCover mk_cover(Graph total, Graph base, std::vector<int> vmap, std::vector<int> dmap) {
  total.validate();
  base.validate();
  if ((int)vmap.size() != total.vertices || dmap.size() != total.darts.size())
    throw SchemaError("cover: map sizes");
  for (int v : vmap)
    if (v < 0 || v >= base.vertices) throw SchemaError("cover: vmap range");
  for (int d : dmap)
    if (d < 0 || d >= (int)base.darts.size()) throw SchemaError("cover: dmap range");
  for (const Dart& d : total.darts) {
    if (base.darts[dmap[d.id]].source != vmap[d.source])
      throw NotEtale("dart " + std::to_string(d.id) + " does not commute with sources");
    if (dmap[d.reverse] != base.darts[dmap[d.id]].reverse)
      throw NotEtale("dart " + std::to_string(d.id) + " does not commute with reverse");
  }
  if (vmap.empty() || vmap[total.basepoint] != base.basepoint)
    throw SchemaError("cover: basepoints not matched");

  GraphCover c;
  c.lift_.assign((std::size_t)total.vertices * base.darts.size(), -1);
  for (int v = 0; v < total.vertices; ++v) {
    std::vector<int> star_count(base.darts.size(), 0);
    for (const Dart& d : total.darts)
      if (d.source == v) {
        if (++star_count[dmap[d.id]] > 1)
          throw NotEtale("vertex " + std::to_string(v) + ": two darts over base dart " +
                         std::to_string(dmap[d.id]));
        c.lift_[(std::size_t)v * base.darts.size() + dmap[d.id]] = d.id;
      }
    for (const Dart& bd : base.darts)
      if (bd.source == vmap[v] && star_count[bd.id] == 0)
        throw NotEtale("vertex " + std::to_string(v) + ": no dart over base dart " +
                       std::to_string(bd.id));
  }
  c.total = std::move(total);
  c.base = std::move(base);
  c.vmap = std::move(vmap);
  c.dmap = std::move(dmap);
  auto comps = pi0(c.base);
  if (comps.count == 1) {
    int s = 0;
    for (int v = 0; v < c.total.vertices; ++v)
      if (c.vmap[v] == c.base.basepoint) ++s;
    c.sheets = s;
  }
  return c;
}

GraphCover load_cover(const std::string& path) {
  json j = io::load_json(path);
  std::string dir = io::dir_of(path);
  auto resolve = [&](const json& jj) {
    if (jj.is_object() && jj.contains("file")) {
      auto p = std::filesystem::path(dir) / jj.at("file").get<std::string>();
      return load_graph(p.lexically_normal().string());
    }
    return graph_from_json(jj);
  };
  return mk_cover(resolve(j.at("total")), resolve(j.at("base")),
                  j.at("vmap").get<std::vector<int>>(), j.at("dmap").get<std::vector<int>>());
}

Pi0 pi0(const Graph& g) {
  Pi0 r;
  r.comp_of.assign(g.vertices, -1);
  for (int v = 0; v < g.vertices; ++v) {
    if (r.comp_of[v] >= 0) continue;
    int id = r.count++;
    r.min_vertex.push_back(v);
    std::vector<int> queue = {v};
    r.comp_of[v] = id;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (const Dart& d : g.darts)
        if (d.source == x) {
          int y = g.target(d.id);
          if (r.comp_of[y] < 0) {
            r.comp_of[y] = id;
            queue.push_back(y);
          }
        }
    }
  }
  r.basepoint_comp = g.vertices > 0 ? r.comp_of[g.basepoint] : 0;
  return r;
}

Word reduce_word(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word concat_reduce(const Word& a, const Word& b) {
  Word out = a;
  for (int letter : b) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Pi1 graph_pi1(const Graph& g) {
  auto comps = pi0(g);
  if (comps.count != 1) throw NotConnected(g.name);
  Pi1 r;
  r.enter_dart.assign(g.vertices, -1);
  r.letter_of.assign(g.darts.size(), 0);
  std::vector<char> visited(g.vertices, 0), tree(g.darts.size(), 0);
  visited[g.basepoint] = 1;
  std::vector<int> queue = {g.basepoint};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const Dart& d : g.darts) {
      if (d.source != v) continue;
      int y = g.target(d.id);
      if (!visited[y]) {
        visited[y] = 1;
        tree[d.id] = tree[d.reverse] = 1;
        r.enter_dart[y] = d.id;
        queue.push_back(y);
      }
    }
  }
  std::vector<char> used(g.darts.size(), 0);
  for (const Dart& d : g.darts) {
    if (tree[d.id] || used[d.id]) continue;
    used[d.id] = used[d.reverse] = 1;
    int k = (int)r.gen_darts.size();
    r.gen_darts.push_back(d.id);
    r.letter_of[d.id] = k + 1;
    r.letter_of[d.reverse] = -(k + 1);
  }
  r.rank = (int)r.gen_darts.size();
  if (r.rank != (int)g.darts.size() / 2 - g.vertices + 1)
    throw std::logic_error("pi1 rank disagrees with E - V + 1");
  return r;
}

std::vector<int> Pi1::letter_loop(const Graph& g, int letter) const {
  int k = std::abs(letter) - 1;
  int d = gen_darts[k];
  if (letter < 0) d = g.darts[d].reverse;
  // tree path basepoint -> src(d), then d, then tree path tgt(d) -> basepoint
  std::vector<int> down;  // from src back to basepoint (reversed entering darts)
  for (int v = g.darts[d].source; enter_dart[v] >= 0; v = g.darts[enter_dart[v]].source)
    down.push_back(enter_dart[v]);
  std::vector<int> loop(down.rbegin(), down.rend());
  loop.push_back(d);
  for (int v = g.target(d); enter_dart[v] >= 0; v = g.darts[enter_dart[v]].source)
    loop.push_back(g.darts[enter_dart[v]].reverse);
  return loop;
}

int lift_path(const GraphCover& c, const Pi1& base_pi1, const Word& w, int start) {
  int v = start;
  for (int letter : w)
    for (int bd : base_pi1.letter_loop(c.base, letter)) {
      int d = c.lift_dart(v, bd);
      v = c.total.target(d);
    }
  return v;
}

int delta_connecting(const GraphCover& c, const Pi1& base_pi1, const Word& w) {
  return lift_path(c, base_pi1, w, c.total.basepoint);
}

int Monodromy::fiber_index(int v) const {
  auto it = std::lower_bound(fiber.begin(), fiber.end(), v);
  return it != fiber.end() && *it == v ? (int)(it - fiber.begin()) : -1;
}

Monodromy monodromy(const GraphCover& c, const Pi1& base_pi1) {
  Monodromy m;
  for (int v = 0; v < c.total.vertices; ++v)
    if (c.vmap[v] == c.base.basepoint) m.fiber.push_back(v);
  for (int k = 0; k < base_pi1.rank; ++k) {
    std::vector<int> sigma(m.fiber.size());
    for (std::size_t i = 0; i < m.fiber.size(); ++i) {
      int end = lift_path(c, base_pi1, {k + 1}, m.fiber[i]);
      sigma[i] = m.fiber_index(end);
      if (sigma[i] < 0) throw std::logic_error("monodromy leaves the fiber");
    }
    m.sigma.push_back(std::move(sigma));
  }
  return m;
}

GraphCover reconstruct_from_monodromy(const Graph& base, const Pi1& base_pi1,
                                      const Monodromy& mono) {
  const int nb = base.vertices;
  const int nd = (int)base.darts.size();
  const int ns = (int)mono.fiber.size();
  // permutation per base dart: tree darts act trivially, generator darts by
  // the corresponding sigma
  std::vector<std::vector<int>> rho(nd);
  std::vector<int> ident(ns);
  std::iota(ident.begin(), ident.end(), 0);
  for (int d = 0; d < nd; ++d) {
    int letter = base_pi1.letter_of[d];
    if (letter == 0) {
      rho[d] = ident;
    } else if (letter > 0) {
      rho[d] = mono.sigma[letter - 1];
    } else {
      std::vector<int> inv(ns);
      for (int i = 0; i < ns; ++i) inv[mono.sigma[-letter - 1][i]] = i;
      rho[d] = std::move(inv);
    }
  }
  Graph total;
  total.name = base.name + ".reconstructed";
  total.vertices = ns * nb;
  std::vector<int> vmap(total.vertices), dmap;
  for (int s = 0; s < ns; ++s)
    for (int b = 0; b < nb; ++b) vmap[s * nb + b] = b;
  for (int s = 0; s < ns; ++s)
    for (int d = 0; d < nd; ++d) {
      Dart dd;
      dd.id = s * nd + d;
      dd.source = s * nb + base.darts[d].source;
      dd.reverse = rho[d][s] * nd + base.darts[d].reverse;
      total.darts.push_back(dd);
      dmap.push_back(d);
    }
  total.basepoint = base.basepoint;  // sheet 0; callers may move it
  return mk_cover(std::move(total), base, std::move(vmap), std::move(dmap));
}

bool isomorphic_over_base(const GraphCover& x, const GraphCover& y) {
  if (!(pi0(x.total).count == 1 && pi0(y.total).count == 1)) return false;
  if (x.total.darts.size() != y.total.darts.size() || x.total.vertices != y.total.vertices)
    return false;
  int v0 = x.total.basepoint;
  for (int w0 = 0; w0 < y.total.vertices; ++w0) {
    if (y.vmap[w0] != x.vmap[v0]) continue;
    // propagate v0 -> w0 through the star bijections
    std::vector<int> img(x.total.vertices, -1);
    img[v0] = w0;
    std::vector<int> queue = {v0};
    bool ok = true;
    while (!queue.empty() && ok) {
      int v = queue.back();
      queue.pop_back();
      for (const Dart& d : x.total.darts) {
        if (d.source != v) continue;
        int yd = y.lift_dart(img[v], x.dmap[d.id]);
        int ty = y.total.target(yd);
        int tx = x.total.target(d.id);
        if (img[tx] < 0) {
          img[tx] = ty;
          queue.push_back(tx);
        } else if (img[tx] != ty) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(y.total.vertices, 0);
    bool bij = true;
    for (int v = 0; v < x.total.vertices && bij; ++v) {
      if (img[v] < 0 || hit[img[v]]) bij = false;
      else hit[img[v]] = 1;
    }
    if (bij) return true;
  }
  return false;
}

DeckResult deck_group(const GraphCover& c) {
  if (pi0(c.total).count != 1) throw NotConnected("deck_group needs a connected total graph");
  const int bp = c.total.basepoint;
  std::vector<std::vector<int>> autos;
  for (int w0 = 0; w0 < c.total.vertices; ++w0) {
    if (c.vmap[w0] != c.vmap[bp]) continue;
    std::vector<int> img(c.total.vertices, -1);
    img[bp] = w0;
    std::vector<int> queue = {bp};
    bool ok = true;
    while (!queue.empty() && ok) {
      int v = queue.back();
      queue.pop_back();
      for (const Dart& d : c.total.darts) {
        if (d.source != v) continue;
        int yd = c.lift_dart(img[v], c.dmap[d.id]);
        int ty = c.total.target(yd);
        int tx = c.total.target(d.id);
        if (img[tx] < 0) {
          img[tx] = ty;
          queue.push_back(tx);
        } else if (img[tx] != ty) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(c.total.vertices, 0);
    bool bij = true;
    for (int v = 0; v < c.total.vertices && bij; ++v) {
      if (img[v] < 0 || hit[img[v]]) bij = false;
      else hit[img[v]] = 1;
    }
    if (bij) autos.push_back(std::move(img));
  }
  // identity first, then by image of the basepoint
  std::sort(autos.begin(), autos.end(), [&](const auto& a, const auto& b) {
    bool ia = a[bp] == bp, ib = b[bp] == bp;
    if (ia != ib) return ia;
    return a[bp] < b[bp];
  });
  const int n = (int)autos.size();
  std::vector<int> flat((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(c.total.vertices);
      for (int v = 0; v < c.total.vertices; ++v) comp[v] = autos[i][autos[j][v]];
      int idx = -1;
      for (int k = 0; k < n; ++k)
        if (autos[k] == comp) {
          idx = k;
          break;
        }
      if (idx < 0) throw std::logic_error("deck transformations not closed");
      flat[(std::size_t)i * n + j] = idx;
    }
  DeckResult r{grp::Group::trusted("Deck", std::move(flat), n), std::move(autos), false};
  // regular iff the action on the fiber is transitive
  std::vector<char> seen(c.total.vertices, 0);
  int orbit = 0, fiber = 0;
  for (int v = 0; v < c.total.vertices; ++v)
    if (c.vmap[v] == c.vmap[bp]) ++fiber;
  for (const auto& a : r.autos)
    if (!seen[a[bp]]) {
      seen[a[bp]] = 1;
      ++orbit;
    }
  r.regular = orbit == fiber;
  return r;
}

GraphCover restrict_to_basepoint_component(const GraphCover& c) {
  auto comps = pi0(c.total);
  std::vector<int> vidx(c.total.vertices, -1);
  Graph sub;
  sub.name = c.total.name + ".E_x";
  for (int v = 0; v < c.total.vertices; ++v)
    if (comps.comp_of[v] == comps.basepoint_comp) {
      vidx[v] = sub.vertices++;
    }
  std::vector<int> didx(c.total.darts.size(), -1);
  std::vector<int> vmap, dmap;
  vmap.resize(sub.vertices);
  for (int v = 0; v < c.total.vertices; ++v)
    if (vidx[v] >= 0) vmap[vidx[v]] = c.vmap[v];
  int nd = 0;
  for (const Dart& d : c.total.darts)
    if (vidx[d.source] >= 0) didx[d.id] = nd++;
  for (const Dart& d : c.total.darts) {
    if (vidx[d.source] < 0) continue;
    Dart dd;
    dd.id = didx[d.id];
    dd.reverse = didx[d.reverse];
    dd.source = vidx[d.source];
    sub.darts.push_back(dd);
    dmap.push_back(c.dmap[d.id]);
  }
  std::sort(sub.darts.begin(), sub.darts.end(),
            [](const Dart& a, const Dart& b) { return a.id < b.id; });
  sub.basepoint = vidx[c.total.basepoint];
  return mk_cover(std::move(sub), c.base, std::move(vmap), std::move(dmap));
}

GraphGaloisResult graph_galois_group(const GraphCover& c) {
  // surjectivity of the covering
  {
    std::vector<char> hit(c.base.vertices, 0);
    for (int v : c.vmap) hit[v] = 1;
    for (char h : hit)
      if (!h) throw NotEtale("cover is not surjective");
  }
  // normality via deck transitivity on the restriction to E_x
  auto restricted = restrict_to_basepoint_component(c);
  auto deck = deck_group(restricted);
  if (!deck.regular) throw NotNormalCover("deck action not transitive on the fiber in E_x");

  // kernel-pair graph Eq(p) with the componentwise structure
  Graph eq;
  eq.name = c.total.name + ".Eq";
  std::vector<std::pair<int, int>> vpairs;
  std::map<std::pair<int, int>, int> vof;
  for (int v = 0; v < c.total.vertices; ++v)
    for (int w = 0; w < c.total.vertices; ++w)
      if (c.vmap[v] == c.vmap[w]) {
        vof[{v, w}] = (int)vpairs.size();
        vpairs.emplace_back(v, w);
      }
  eq.vertices = (int)vpairs.size();
  std::vector<std::pair<int, int>> dpairs;
  std::map<std::pair<int, int>, int> dof;
  for (const Dart& d : c.total.darts)
    for (const Dart& e : c.total.darts)
      if (c.dmap[d.id] == c.dmap[e.id]) {
        dof[{d.id, e.id}] = (int)dpairs.size();
        dpairs.emplace_back(d.id, e.id);
      }
  for (std::size_t i = 0; i < dpairs.size(); ++i) {
    auto [d, e] = dpairs[i];
    Dart dd;
    dd.id = (int)i;
    dd.reverse = dof.at({c.total.darts[d].reverse, c.total.darts[e].reverse});
    dd.source = vof.at({c.total.darts[d].source, c.total.darts[e].source});
    eq.darts.push_back(dd);
  }
  eq.basepoint = vof.at({c.total.basepoint, c.total.basepoint});
  eq.validate();

  // pi0 reflection: carriers are the component sets
  auto ptotal = pi0(c.total);
  auto peq = pi0(eq);
  gpd::GroupoidParts parts;
  parts.obj = gpd::Carrier::pointed_set(ptotal.count, ptotal.basepoint_comp);
  parts.arr = gpd::Carrier::pointed_set(peq.count, peq.basepoint_comp);
  parts.d.assign(peq.count, -1);
  parts.c.assign(peq.count, -1);
  for (int x = 0; x < eq.vertices; ++x) {
    int comp = peq.comp_of[x];
    int dv = ptotal.comp_of[vpairs[x].first];
    int cv = ptotal.comp_of[vpairs[x].second];
    if (parts.d[comp] >= 0 && parts.d[comp] != dv)
      throw NotAGroupoidAfterReflection("d ill-defined on pi0 classes");
    if (parts.c[comp] >= 0 && parts.c[comp] != cv)
      throw NotAGroupoidAfterReflection("c ill-defined on pi0 classes");
    parts.d[comp] = dv;
    parts.c[comp] = cv;
  }
  parts.e.assign(ptotal.count, -1);
  for (int v = 0; v < c.total.vertices; ++v) {
    int comp = ptotal.comp_of[v];
    int val = peq.comp_of[vof.at({v, v})];
    if (parts.e[comp] >= 0 && parts.e[comp] != val)
      throw NotAGroupoidAfterReflection("e ill-defined on pi0 classes");
    parts.e[comp] = val;
  }
  // composition by pasting representatives with matching middles
  parts.m_matrix.assign((std::size_t)peq.count * peq.count, -1);
  std::vector<char> defined((std::size_t)peq.count * peq.count, 0);
  for (int x = 0; x < eq.vertices; ++x)
    for (int y = 0; y < eq.vertices; ++y) {
      if (vpairs[x].second != vpairs[y].first) continue;
      int u = peq.comp_of[x], v = peq.comp_of[y];
      int val = peq.comp_of[vof.at({vpairs[x].first, vpairs[y].second})];
      auto& slot = parts.m_matrix[(std::size_t)u * peq.count + v];
      if (defined[(std::size_t)u * peq.count + v] && slot != val)
        throw NotAGroupoidAfterReflection("pasting ill-defined on pi0 classes");
      slot = val;
      defined[(std::size_t)u * peq.count + v] = 1;
    }
  for (int u = 0; u < peq.count; ++u)
    for (int v = 0; v < peq.count; ++v)
      if (parts.c[u] == parts.d[v] && !defined[(std::size_t)u * peq.count + v])
        throw NotAGroupoidAfterReflection("composable classes with no composable representatives");

  GraphGaloisResult out{grp::Group(), gpd::mk_internal_groupoid(std::move(parts)), 0,
                        deck.group.order()};
  auto aut = gpd::aut_at_zero(out.reflected);
  out.group = aut.group;
  for (int v = 0; v < c.total.vertices; ++v)
    if (c.vmap[v] == c.base.basepoint && ptotal.comp_of[v] == ptotal.basepoint_comp)
      ++out.fiber_in_component;
  return out;
}

ExactSeqReport exact_sequence_check(const GraphCover& c, int word_bound) {
  if (pi0(c.base).count != 1) throw NotConnected("exact_sequence_check needs a connected base");
  ExactSeqReport rep;
  rep.word_bound = word_bound;
  auto base_pi1 = graph_pi1(c.base);
  rep.rank_base = base_pi1.rank;
  auto mono = monodromy(c, base_pi1);

  auto restricted = restrict_to_basepoint_component(c);
  auto total_pi1 = graph_pi1(restricted.total);
  rep.rank_total = total_pi1.rank;

  // base word of each restricted-total generator under p_*
  std::vector<Word> gen_images;
  for (int k = 0; k < total_pi1.rank; ++k) {
    Word img;
    for (int td : total_pi1.letter_loop(restricted.total, k + 1)) {
      int letter = base_pi1.letter_of[restricted.dmap[td]];
      if (letter != 0) {
        if (!img.empty() && img.back() == -letter)
          img.pop_back();
        else
          img.push_back(letter);
      }
    }
    gen_images.push_back(std::move(img));
  }
  auto push_star = [&](const Word& w) {
    Word out;
    for (int letter : w) {
      const Word& gi = gen_images[std::abs(letter) - 1];
      if (letter > 0) {
        out = concat_reduce(out, gi);
      } else {
        Word inv(gi.rbegin(), gi.rend());
        for (int& l : inv) l = -l;
        out = concat_reduce(out, inv);
      }
    }
    return out;
  };

  // (a) p_* injective on reduced total words up to the bound
  {
    std::vector<int> letters;
    for (int k = 1; k <= total_pi1.rank; ++k) {
      letters.push_back(k);
      letters.push_back(-k);
    }
    std::vector<Word> stack = {{}};
    while (!stack.empty() && rep.pi1_injective) {
      Word cur = std::move(stack.back());
      stack.pop_back();
      if (!cur.empty() && push_star(cur).empty()) {
        rep.pi1_injective = false;
        std::string ws;
        for (int l : cur) ws += std::to_string(l) + " ";
        rep.witnesses.push_back("pi1(E) -> pi1(B) kills the word " + ws);
        break;
      }
      if ((int)cur.size() == word_bound) continue;
      for (int l : letters) {
        if (!cur.empty() && cur.back() == -l) continue;
        Word next = cur;
        next.push_back(l);
        stack.push_back(std::move(next));
      }
    }
  }

  // orbit of the basepoint under the monodromy
  std::vector<char> in_orbit(mono.fiber.size(), 0);
  {
    int bp = mono.fiber_index(c.total.basepoint);
    std::vector<int> queue = {bp};
    in_orbit[bp] = 1;
    while (!queue.empty()) {
      int s = queue.back();
      queue.pop_back();
      for (const auto& sigma : mono.sigma) {
        for (int t : {sigma[s]}) {
          if (!in_orbit[t]) {
            in_orbit[t] = 1;
            queue.push_back(t);
          }
        }
        // and the inverse direction
        for (std::size_t i = 0; i < sigma.size(); ++i)
          if (sigma[i] == s && !in_orbit[i]) {
            in_orbit[i] = 1;
            queue.push_back((int)i);
          }
      }
    }
  }

  // (b) image of delta = F cap E_x
  auto ptotal = pi0(c.total);
  for (std::size_t i = 0; i < mono.fiber.size(); ++i) {
    bool in_comp = ptotal.comp_of[mono.fiber[i]] == ptotal.basepoint_comp;
    if (in_orbit[i] != (in_comp ? 1 : 0)) {
      rep.delta_image_matches = false;
      rep.witnesses.push_back("delta image mismatch at fiber vertex " +
                              std::to_string(mono.fiber[i]));
    }
  }

  // (c) preimage of the basepoint component under pi0(F) -> pi0(E) = image
  for (std::size_t i = 0; i < mono.fiber.size(); ++i) {
    bool pre = ptotal.comp_of[mono.fiber[i]] == ptotal.basepoint_comp;
    if (pre != (in_orbit[i] == 1)) {
      rep.preimage_matches = false;
      rep.witnesses.push_back("preimage mismatch at fiber vertex " +
                              std::to_string(mono.fiber[i]));
    }
  }

  // (d) pi0(F) -> pi0(E) surjective
  {
    std::vector<char> hit(ptotal.count, 0);
    for (int v : mono.fiber) hit[ptotal.comp_of[v]] = 1;
    for (int comp = 0; comp < ptotal.count; ++comp)
      if (!hit[comp]) {
        rep.pi0_surjective = false;
        rep.witnesses.push_back("total component " + std::to_string(comp) +
                                " contains no fiber vertex");
      }
  }

  // (e) delta(w) = basepoint iff w in p_* pi1(E,x), decided independently on
  // the cover rebuilt from the monodromy action
  {
    auto rebuilt = reconstruct_from_monodromy(c.base, base_pi1, mono);
    // its basepoint must sit on the sheet of the original total basepoint
    int s0 = mono.fiber_index(c.total.basepoint);
    rebuilt.total.basepoint = s0 * c.base.vertices + c.base.basepoint;
    std::vector<int> letters;
    for (int k = 1; k <= base_pi1.rank; ++k) {
      letters.push_back(k);
      letters.push_back(-k);
    }
    std::vector<Word> stack = {{}};
    while (!stack.empty()) {
      Word cur = std::move(stack.back());
      stack.pop_back();
      bool dir = delta_connecting(c, base_pi1, cur) == c.total.basepoint;
      bool rec = delta_connecting(rebuilt, base_pi1, cur) == rebuilt.total.basepoint;
      if (dir != rec) {
        rep.stabilizer_matches = false;
        std::string ws;
        for (int l : cur) ws += std::to_string(l) + " ";
        rep.witnesses.push_back("stabilizer mismatch at word " + ws);
        break;
      }
      if ((int)cur.size() == word_bound) continue;
      for (int l : letters) {
        if (!cur.empty() && cur.back() == -l) continue;
        Word next = cur;
        next.push_back(l);
        stack.push_back(std::move(next));
      }
    }
  }
  return rep;
}

}  // namespace catgal::graph
