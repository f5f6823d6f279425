#pragma once

// Abstract right LCM semigroup: left cancellative, with the intersection of
// two principal right ideals either empty or again principal. Families
// implement the closed forms; enumeration-based oracles validating them are
// in oracle.hpp.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rlcm/element.hpp"
#include "rlcm/error.hpp"

namespace rlcm {

struct LcmOutcome {
  enum class Kind { Disjoint, Meet };
  Kind kind = Kind::Disjoint;
  std::optional<Element> generator;  // canonical, up to right units

  static LcmOutcome disjoint() { return {Kind::Disjoint, std::nullopt}; }
  static LcmOutcome meet(Element w) { return {Kind::Meet, std::move(w)}; }
  bool is_meet() const { return kind == Kind::Meet; }
  bool operator==(const LcmOutcome&) const = default;
};

// One generator token of a canonical factorization, e.g. b^3 decomposes to
// {generator "b", power 3}.
struct GenToken {
  std::string gen;
  long long power = 1;
};

// Report entries relaying established operator-algebra facts; `source` names
// the published work the fact is taken from.
struct CitedFact {
  std::string statement;
  std::string source;
};

class Semigroup {
 public:
  virtual ~Semigroup() = default;

  const FamilyKey& key() const { return key_; }
  FamilyKind kind() const { return key_.kind; }

  virtual Element identity() const = 0;
  bool is_identity(const Element& s) const { return s == identity(); }

  Element multiply(const Element& s, const Element& t) const;
  LcmOutcome right_lcm(const Element& s, const Element& t) const;
  std::optional<Element> left_divide(const Element& s, const Element& x) const;

  // x in sS?
  bool in_ideal(const Element& s, const Element& x) const {
    return left_divide(s, x).has_value();
  }
  bool same_ideal(const Element& s, const Element& t) const {
    return in_ideal(s, t) && in_ideal(t, s);
  }

  // All elements of enumeration length <= max_len, in a deterministic
  // order without duplicates. Throws CapExceeded past the documented caps.
  std::vector<Element> enumerate(unsigned max_len) const;

  // Enumeration length: a proper length with finite levels (see each
  // family for its grid). Distinct from scale_length used by the KMS layer.
  virtual unsigned enum_length(const Element& s) const = 0;

  virtual bool is_unit(const Element& s) const = 0;
  virtual bool is_core(const Element& s) const = 0;
  virtual bool is_core_irreducible(const Element& s) const = 0;

  // Canonical representative of the ideal sS (reduces the generator by
  // right units; identity map for families with trivial units).
  virtual Element canonical_ideal_generator(const Element& s) const;

  // Factorization s = irreducible * core realizing S = S_ci^1 S_c; the
  // first component is core irreducible or the identity.
  virtual std::pair<Element, Element> core_split(const Element& s) const = 0;

  // Internal Zappa-Szep factorization over a transversal of S_ci^1; only
  // families where the transversal forms a semigroup support it.
  virtual std::pair<Element, Element> internal_zs_factor(const Element& s) const;
  virtual bool supports_internal_zs() const { return true; }

  // Monoid generators with printable names, and the canonical decomposition
  // of an element into generator tokens (used by homomorphism checks).
  virtual std::vector<std::pair<std::string, Element>> generators() const = 0;
  virtual std::vector<GenToken> decompose(const Element& s) const = 0;

  virtual std::string format(const Element& s) const = 0;
  virtual Element parse(const std::string& text) const = 0;

  // True when right ideals are totally prefigured by units (S_c = S), the
  // right Ore case; decided by closed form per family.
  virtual bool is_right_ore() const = 0;

  // Re-canonicalize a payload; normalizing twice must be a no-op.
  virtual Element normalize(const Element& s) const { return s; }

 protected:
  explicit Semigroup(FamilyKey key) : key_(std::move(key)) {}

  void check_family(const Element& s) const;

  virtual Element do_multiply(const Element& s, const Element& t) const = 0;
  virtual LcmOutcome do_right_lcm(const Element& s, const Element& t) const = 0;
  virtual std::optional<Element> do_left_divide(const Element& s,
                                                const Element& x) const = 0;
  virtual void do_enumerate(unsigned max_len,
                            std::vector<Element>& out) const = 0;

 private:
  FamilyKey key_;
};

// Default hard cap on enumeration size; override with RLCM_ENUM_CAP.
std::size_t enumeration_cap();

}  // namespace rlcm
