#pragma once

// Brute-force oracles. These intersect bounded enumerations of principal
// right ideals and must stay independent of the closed-form right_lcm
// implementations they validate; disjointness certificates re-derive the
// family criteria inline instead of calling them.

#include <optional>
#include <vector>

#include "rlcm/semigroup.hpp"

namespace rlcm {

struct OracleResult {
  enum class Kind { Disjoint, Meet, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<Element> generator;

  bool conclusive() const { return kind != Kind::Inconclusive; }
  bool agrees_with(const Semigroup& sg, const LcmOutcome& closed) const;
};

// Intersects s * enumerate(bound) with t * enumerate(bound). Returns Meet(w)
// when a single ideal root w generates the whole bounded intersection,
// Disjoint when the window is empty and the family disjointness criterion
// confirms it, Inconclusive otherwise.
OracleResult lcm_oracle(const Semigroup& sg, const Element& s, const Element& t,
                        unsigned bound);

// Same, with a shared enumeration for batch use.
OracleResult lcm_oracle(const Semigroup& sg, const Element& s, const Element& t,
                        const std::vector<Element>& window);

}  // namespace rlcm
