#include "rlcm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rlcm/families.hpp"

namespace rlcm {

namespace {

// Family disjointness certificates, re-derived here so the oracle does not
// share code with the closed-form right_lcm it validates.

bool prefix_mismatch(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return true;
  return false;
}

bool certify_disjoint(const Semigroup& sg, const Element& s, const Element& t) {
  switch (sg.kind()) {
    case FamilyKind::NxP: {
      const auto& nxp = static_cast<const NxPSemigroup&>(sg);
      long long p = nxp.multiplier_value(s), q = nxp.multiplier_value(t);
      long long g = std::gcd(p, q);
      return ((nxp.additive_part(s) - nxp.additive_part(t)) % g + g) % g != 0;
    }
    case FamilyKind::BaumslagSolitar: {
      const auto& a = std::get<BSPayload>(s.payload);
      const auto& b = std::get<BSPayload>(t.payload);
      return prefix_mismatch(a.letters, b.letters);
    }
    case FamilyKind::MatrixAffine: {
      const auto& mat = static_cast<const MatrixSemigroup&>(sg);
      const auto& a = std::get<MatrixPayload>(s.payload);
      const auto& b = std::get<MatrixPayload>(t.payload);
      unsigned m = std::min(a.n, b.n);
      IntVec diff(a.g.size());
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = b.g[i] - a.g[i];
      return !intlat::solve_integer(mat.config().a.pow(m), diff).has_value();
    }
    case FamilyKind::FreeMonoid:
    case FamilyKind::SelfSimilar: {
      const auto& a = std::get<WordPayload>(s.payload);
      const auto& b = std::get<WordPayload>(t.payload);
      return prefix_mismatch(a.word, b.word);
    }
  }
  return false;
}

}  // namespace

bool OracleResult::agrees_with(const Semigroup& sg, const LcmOutcome& closed) const {
  switch (kind) {
    case Kind::Inconclusive:
      return true;
    case Kind::Disjoint:
      return closed.kind == LcmOutcome::Kind::Disjoint;
    case Kind::Meet:
      if (closed.kind != LcmOutcome::Kind::Meet) return false;
      // Same ideal, and identical canonical representatives.
      return sg.same_ideal(*generator, *closed.generator) &&
             *generator == *closed.generator;
  }
  return false;
}

OracleResult lcm_oracle(const Semigroup& sg, const Element& s, const Element& t,
                        unsigned bound) {
  return lcm_oracle(sg, s, t, sg.enumerate(bound));
}

OracleResult lcm_oracle(const Semigroup& sg, const Element& s, const Element& t,
                        const std::vector<Element>& window) {
  std::set<Element, ElementLess> ideal_s, common;
  for (const Element& r : window) ideal_s.insert(sg.multiply(s, r));
  for (const Element& r : window) {
    Element x = sg.multiply(t, r);
    if (ideal_s.count(x)) common.insert(std::move(x));
  }

  if (common.empty()) {
    if (certify_disjoint(sg, s, t)) return {OracleResult::Kind::Disjoint, std::nullopt};
    return {OracleResult::Kind::Inconclusive, std::nullopt};
  }

  // Meet is conclusive when some common element divides every other one.
  for (const Element& w : common) {
    bool root = true;
    for (const Element& c : common) {
      if (!sg.in_ideal(w, c)) {
        root = false;
        break;
      }
    }
    if (root)
      return {OracleResult::Kind::Meet, sg.canonical_ideal_generator(w)};
  }
  return {OracleResult::Kind::Inconclusive, std::nullopt};
}

}  // namespace rlcm
