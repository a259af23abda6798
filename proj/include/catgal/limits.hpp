#pragma once

#include <cstdint>

namespace catgal {

// Desk-scale resource bounds. All configurable from the CLI; the defaults
// keep full corpus runs under a few minutes.
struct Limits {
  int max_order = 256;                  // isomorphism search bound
  std::int64_t hom_budget = 10'000'000; // node budget for hom enumeration
  int max_word_len = 8;                 // word bound for graph exactness
};

inline Limits& limits() {
  static Limits l;
  return l;
}

}  // namespace catgal
