#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catgal/errors.hpp"
#include "catgal/limits.hpp"

namespace catgal::grp {

using Elt = int;

/// A finite group as an indexed multiplication table.  Identity is element 0.
/// Instances are immutable and cheaply copyable (shared state); every derived
/// structure (orders, inverses, a greedy generating set and its BFS word
/// table) is computed eagerly so concurrent reads need no synchronization.
class Group {
public:
  Group() = default;

  /// Validates the full table: identity row/column, Latin square,
  /// associativity, inverses.  Throws NotAGroup with a witness.
  static Group from_table(std::string name, const std::vector<std::vector<Elt>>& rows);

  /// Closure of permutation generators on `degree` points under products,
  /// breadth-first in generator index order.  Throws OrderBound if the
  /// closure exceeds `max_order`.
  static Group from_permutations(std::string name, int degree,
                                 const std::vector<std::vector<Elt>>& perms,
                                 int max_order);

  /// For tables that are closed by construction (quotients, pullbacks,
  /// subgroup tables).  Still fully validated while order <= max_order.
  static Group trusted(std::string name, std::vector<Elt> flat, int order);

  int order() const { return d_->order; }
  Elt mul(Elt a, Elt b) const { return d_->table[(std::size_t)a * d_->order + b]; }
  Elt inv(Elt a) const { return d_->inv[a]; }
  int elt_order(Elt a) const { return d_->elt_order[a]; }
  const std::string& name() const { return d_->name; }
  const std::vector<Elt>& flat_table() const { return d_->table; }
  bool abelian() const { return d_->abelian; }

  bool same_object(const Group& o) const { return d_ == o.d_; }
  bool same_table(const Group& o) const {
    return d_ == o.d_ || (d_->order == o.d_->order && d_->table == o.d_->table);
  }

  /// Greedy generating set: repeatedly adjoin the smallest element outside
  /// the closure so far.
  const std::vector<Elt>& generating_set() const { return d_->gens; }

  /// BFS factorization over the generating set: bfs[0] = 0 and every later
  /// element is parent * gens[gen].
  struct WordTable {
    std::vector<Elt> bfs;
    std::vector<Elt> parent;
    std::vector<int> gen;
  };
  const WordTable& word_table() const { return d_->words; }

  void validate() const;  // full scan, any order

private:
  struct Data {
    std::string name;
    int order = 1;
    std::vector<Elt> table;
    std::vector<Elt> inv;
    std::vector<int> elt_order;
    std::vector<Elt> gens;
    WordTable words;
    bool abelian = true;
  };
  std::shared_ptr<const Data> d_ = finish(std::make_shared<Data>());

  static std::shared_ptr<const Data> finish(std::shared_ptr<Data> d);
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

/// Subgroup of a parent group: a sorted element list containing 0, closed
/// under multiplication and inverses.
struct Subgroup {
  Group parent;
  std::vector<Elt> elems;

  int order() const { return (int)elems.size(); }
  bool contains(Elt x) const;
  int index_of(Elt x) const;  // -1 when absent
  bool is_normal() const;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// The subgroup carrier as a Group of its own (inherited multiplication,
/// elements renumbered in ascending order; identity stays at 0).
Group subgroup_as_group(const Subgroup& s, const std::string& name);

/// Verified structure-preserving map between groups.
class Hom {
public:
  Hom() = default;
  static Hom make(Group dom, Group cod, std::vector<Elt> map);
  static Hom identity(const Group& g);
  /// Composition g(f(x)); cod(f) and dom(g) must be the same table.
  static Hom compose(const Hom& g, const Hom& f);

  const Group& dom() const { return dom_; }
  const Group& cod() const { return cod_; }
  Elt operator()(Elt x) const { return map_[x]; }
  const std::vector<Elt>& map() const { return map_; }

  bool surjective() const;
  bool injective() const;
  bool bijective() const { return injective() && surjective(); }
  Subgroup kernel() const;
  Subgroup image() const;
  bool equal_map(const Hom& o) const { return map_ == o.map_; }

private:
  Group dom_, cod_;
  std::vector<Elt> map_;
};

/// Surjective hom with its kernel cached.
struct Extension {
  Hom hom;
  Subgroup kernel;
  std::string name;

  static Extension make(Hom h, std::string name = "");
  const Group& dom() const { return hom.dom(); }
  const Group& cod() const { return hom.cod(); }
};

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

Subgroup subgroup_generated(const Group& g, const std::vector<Elt>& gens);
Subgroup commutator_subgroup(const Group& g, const Subgroup& h, const Subgroup& k);
Subgroup derived_subgroup(const Group& g);
Subgroup center(const Group& g);
Subgroup whole(const Group& g);
Subgroup trivial_subgroup(const Group& g);

struct QuotientResult {
  Group group;
  Hom proj;
};
/// Cosets are labeled by their minimal member index.
QuotientResult quotient(const Group& g, const Subgroup& n);

/// G / [G,G] together with the unit eta_G.
QuotientResult abelianization(const Group& g);

struct PullbackResult {
  Group group;                             // carrier {(a,c) : f(a) = g(c)}
  Hom p1, p2;                              // projections
  std::vector<std::pair<Elt, Elt>> pairs;  // element i is pairs[i], lex order
  int pair_index(Elt a, Elt c) const;      // -1 when absent
};
PullbackResult pullback(const Hom& f, const Hom& g);

/// Direct product, realized as the pullback over the trivial group.
PullbackResult product(const Group& a, const Group& b);

/// Optional fiber constraint for hom searches: through(h(x)) == target(x).
struct HomConstraint {
  Hom through;  // B -> C
  Hom target;   // A -> C
};

/// All homs A -> B (satisfying the constraint), found by generator-image
/// search with order-divisibility pruning; deterministic order.
std::vector<Hom> enumerate_homs(const Group& a, const Group& b,
                                const std::optional<HomConstraint>& c = std::nullopt,
                                std::int64_t budget = limits().hom_budget);

/// Invariant-factor decomposition d1 | d2 | ... of a finite abelian group,
/// computed from the element-order census.
std::vector<long long> abelian_invariants(const Group& g);

/// Brute-force iso search with order-profile pruning; abelian case goes
/// through invariants first.  Throws OrderBound beyond max_order.
std::optional<Hom> find_isomorphism(const Group& g, const Group& h,
                                    int max_order = limits().max_order);
bool is_isomorphic(const Group& g, const Group& h, int max_order = limits().max_order);

/// Restriction of f to a subgroup carrier, landing in a subgroup carrier of
/// the codomain.  Throws RestrictionEscapes if the image leaves `t`.
Hom restrict_hom(const Hom& f, const Subgroup& s, const Group& s_group,
                 const Subgroup& t, const Group& t_group);

}  // namespace catgal::grp
