#pragma once

#include <string>
#include <vector>

#include "catgal/group.hpp"
#include "catgal/groupoid.hpp"
#include "catgal/json_io.hpp"

// Combinatorial covering theory on finite graphs with darts: etale maps,
// pi0/pi1, path lifting, monodromy, deck groups, the pi0-reflected kernel
// pair groupoid, and the low-dimensional exact homotopy sequence.

namespace catgal::graph {

struct Dart {
  int id = 0;
  int reverse = 0;
  int source = 0;
};

struct Graph {
  std::string name;
  int vertices = 0;
  std::vector<Dart> darts;  // dart ids are positions
  int basepoint = 0;

  int target(int d) const { return darts[darts[d].reverse].source; }
  void validate() const;  // fixed-point-free involution, ranges
};

Graph graph_from_json(const io::json& j);
Graph load_graph(const std::string& path);

struct GraphCover {
  Graph total, base;
  std::vector<int> vmap, dmap;
  int sheets = -1;  // fiber size over the base basepoint when base connected

  /// the unique dart over base dart bd at total vertex v (star bijection)
  int lift_dart(int v, int bd) const { return lift_[(std::size_t)v * base.darts.size() + bd]; }

  std::vector<int> lift_;  // filled by mk_cover
};

/// Validates the star bijections at every vertex; throws NotEtale naming the
/// failing vertex.
GraphCover mk_cover(Graph total, Graph base, std::vector<int> vmap, std::vector<int> dmap);
GraphCover load_cover(const std::string& path);

struct Pi0 {
  int count = 0;
  std::vector<int> comp_of;    // per vertex; ids ordered by minimal vertex
  std::vector<int> min_vertex; // per component
  int basepoint_comp = 0;
};
Pi0 pi0(const Graph& g);

// free words over the spanning-tree-complement generators: letters are
// +(k+1) or -(k+1) for generator k
using Word = std::vector<int>;
Word reduce_word(const Word& w);
Word concat_reduce(const Word& a, const Word& b);

struct Pi1 {
  int rank = 0;
  std::vector<int> gen_darts;    // canonical dart per non-tree edge
  std::vector<int> enter_dart;   // per vertex: tree dart entering it (-1 at bp)
  std::vector<int> letter_of;    // per dart: 0 tree, else +-(k+1)
  /// the based loop of a letter as a dart sequence
  std::vector<int> letter_loop(const Graph& g, int letter) const;
};
Pi1 graph_pi1(const Graph& g);  // NotConnected

/// Lift the based loop of the word dart-by-dart; returns the end vertex.
int lift_path(const GraphCover& c, const Pi1& base_pi1, const Word& w, int start);

/// delta(w): lift from the total basepoint, valued in the fiber.
int delta_connecting(const GraphCover& c, const Pi1& base_pi1, const Word& w);

struct Monodromy {
  std::vector<int> fiber;                 // total vertices over the base basepoint
  std::vector<std::vector<int>> sigma;    // one fiber permutation per generator
  int fiber_index(int v) const;
};
Monodromy monodromy(const GraphCover& c, const Pi1& base_pi1);

/// Cover rebuilt from the monodromy action: sheet s over vertex b is s*|V|+b.
GraphCover reconstruct_from_monodromy(const Graph& base, const Pi1& base_pi1,
                                      const Monodromy& mono);

/// Isomorphism over the base between two covers with connected totals;
/// brute-force with star propagation.
bool isomorphic_over_base(const GraphCover& x, const GraphCover& y);

struct DeckResult {
  grp::Group group;
  std::vector<std::vector<int>> autos;  // vertex maps, identity first
  bool regular = false;
};
DeckResult deck_group(const GraphCover& c);  // NotConnected when total is not

struct GraphGaloisResult {
  grp::Group group;              // Aut(0) of the pi0-reflected kernel pair
  gpd::InternalGroupoid reflected;
  int fiber_in_component = 0;    // |F cap E_x|
  int deck_order = 0;            // deck group of the restriction to E_x
};
/// Throws NotNormalCover when the restricted cover is not regular.
GraphGaloisResult graph_galois_group(const GraphCover& c);

struct ExactSeqReport {
  bool pi1_injective = true;          // (a) up to the word bound
  bool delta_image_matches = true;    // (b) exact
  bool preimage_matches = true;       // (c) exact
  bool pi0_surjective = true;         // (d) exact
  bool stabilizer_matches = true;     // (e) up to the word bound
  int rank_base = 0, rank_total = 0;  // pi1 ranks (total restricted to E_x)
  int word_bound = 0;
  std::vector<std::string> witnesses;
  bool all() const {
    return pi1_injective && delta_image_matches && preimage_matches && pi0_surjective &&
           stabilizer_matches;
  }
};
ExactSeqReport exact_sequence_check(const GraphCover& c, int word_bound);

/// Restriction of the cover to the component of the total basepoint.
GraphCover restrict_to_basepoint_component(const GraphCover& c);

}  // namespace catgal::graph
