#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "catgal/group.hpp"

// Internal categories/groupoids over finite carriers.  Carriers are either
// groups (the Gp side) or pointed sets (the graph/pi0 side); all structure
// maps are validated exhaustively, with the composable-pairs object
// materialized explicitly so every axiom check is a total scan.

namespace catgal::gpd {

struct Carrier {
  bool is_group = false;
  grp::Group group;  // meaningful when is_group
  int size = 1;
  int basepoint = 0;

  static Carrier of_group(grp::Group g) {
    Carrier c;
    c.is_group = true;
    c.size = g.order();
    c.group = std::move(g);
    return c;
  }
  static Carrier pointed_set(int size, int basepoint) {
    Carrier c;
    c.size = size;
    c.basepoint = basepoint;
    return c;
  }
};

struct InternalGroupoid {
  Carrier obj, arr;
  std::vector<int> d, c;  // arr -> obj
  std::vector<int> e;     // obj -> arr
  std::vector<int> s;     // arr -> arr
  std::vector<std::pair<int, int>> pairs;  // composable (x,y): c[x] == d[y], lex
  std::vector<int> m;                      // by pairs position

  int pair_index(int x, int y) const;
  int compose(int x, int y) const;  // m at the composable pair (x,y)
};

/// Construction input: m is a full arr x arr matrix with -1 on non-composable slots.
struct GroupoidParts {
  Carrier obj, arr;
  std::vector<int> d, c, e;
  std::vector<int> m_matrix;            // arr*arr, -1 where undefined
  std::optional<std::vector<int>> s;    // derived when absent
};

/// Validates every axiom exhaustively (structure preservation, units,
/// associativity, the pullback characterization of groupoids, inverses).
/// Throws AxiomViolation naming the failing diagram and a witness.
InternalGroupoid mk_internal_groupoid(GroupoidParts parts);

/// Eq(p) over dom(p): d,c the projections, e the diagonal, m the pasting
/// m((x,y),(y,z)) = (x,z), s the swap.
InternalGroupoid kernel_pair_groupoid(const grp::Extension& p);

/// Same, keeping the pullback realization of Eq(p) (arrow i is eq.pairs[i]).
struct KernelPairData {
  InternalGroupoid g;
  grp::PullbackResult eq;
};
KernelPairData kernel_pair_groupoid_data(const grp::Extension& p);

struct ReflectedGroupoid {
  InternalGroupoid g;
  grp::Hom eta_obj;  // R0 -> I(R0)
  grp::Hom eta_arr;  // R1 -> I(R1)
};

/// Applies the abelianisation reflector to a group-carrier groupoid.  Throws
/// NotAGroupoidAfterReflection when the induced composition is ill-defined;
/// when d and c are trivial coverings, additionally asserts that the
/// composable-pairs object is preserved (comparison bijectivity).
ReflectedGroupoid apply_I_groupoid(const InternalGroupoid& r);

struct AutResult {
  grp::Group group;
  std::vector<int> loop_arrows;  // group element i is the arrow loop_arrows[i]
  int arrow_to_elt(int arrow) const;
};

/// Loops at the basepoint with the groupoid composition as multiplication.
AutResult aut_at_zero(const InternalGroupoid& r);

struct InternalFunctor {
  std::vector<int> f0;  // obj -> obj'
  std::vector<int> f1;  // arr -> arr'
};

/// Checks the d, c, e and m squares; for group carriers also that both
/// components are homs.
void validate_functor(const InternalGroupoid& r, const InternalGroupoid& t,
                      const InternalFunctor& f);

struct InternalNatTrans {
  std::vector<int> mu;  // obj -> arr'
};

bool validate_nat_trans(const InternalGroupoid& r, const InternalGroupoid& t,
                        const InternalFunctor& f, const InternalFunctor& g,
                        const std::vector<int>& mu);

/// For relation-shaped codomains uses the pairing construction directly;
/// otherwise searches carrier maps obj -> arr' up to the budget.
std::optional<InternalNatTrans> are_naturally_isomorphic(
    const InternalGroupoid& r, const InternalGroupoid& t, const InternalFunctor& f,
    const InternalFunctor& g, std::int64_t budget = 1'000'000);

/// Restriction of f1 to the loop groups.  Throws RestrictionEscapes when the
/// image leaves the target loop subobject.
grp::Hom induced_map_on_aut(const InternalFunctor& f, const InternalGroupoid& r,
                            const InternalGroupoid& t, const AutResult& aut_r,
                            const AutResult& aut_t);

/// True when (d, c) is jointly monic, i.e. the groupoid is a relation.
bool is_relation(const InternalGroupoid& r);

}  // namespace catgal::gpd
