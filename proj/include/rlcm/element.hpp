#pragma once

// Semigroup elements in family-specific canonical normal form. An Element
// is a tagged value; the semantics (multiplication, ideals, lengths) live
// in the Semigroup classes that interpret the payload.

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rlcm/intlat.hpp"

namespace rlcm {

using intlat::Int;
using intlat::IntVec;

enum class FamilyKind : std::uint8_t {
  NxP,         // N x| P for P generated by relatively prime integers
  BaumslagSolitar,
  MatrixAffine,  // Z^d x|_A N
  FreeMonoid,
  SelfSimilar,   // X* |x G (Zappa-Szep of a word monoid and a group)
};

const char* to_string(FamilyKind kind);

// Identifies a family instance; elements of different instances never mix.
struct FamilyKey {
  FamilyKind kind;
  std::string id;  // printable config fingerprint, e.g. "nxp{2,3}"

  auto operator<=>(const FamilyKey&) const = default;
};

// (n, p) with p stored as an exponent vector over the configured prime set,
// so membership of p in P stays exact.
struct NxPPayload {
  long long n = 0;
  std::vector<unsigned> exps;

  bool operator==(const NxPPayload&) const = default;
};

// Normal form w_1 w_2 ... w_m b^tail with w_k = b^{letters[k]} a,
// 0 <= letters[k] <= d-1.
struct BSPayload {
  std::vector<unsigned> letters;
  long long tail = 0;

  bool operator==(const BSPayload&) const = default;
};

// (g, n) in Z^d x|_A N.
struct MatrixPayload {
  IntVec g;
  unsigned n = 0;

  bool operator==(const MatrixPayload&) const = default;
};

// (word, group). For the free monoid the group part is identically 0; for
// self-similar families it is the exponent of the configured generator.
struct WordPayload {
  std::vector<unsigned> word;
  long long g = 0;

  bool operator==(const WordPayload&) const = default;
};

using Payload = std::variant<NxPPayload, BSPayload, MatrixPayload, WordPayload>;

struct Element {
  FamilyKey family;
  Payload payload;

  bool operator==(const Element& other) const = default;
};

// Total order used for deterministic enumeration and set storage.
bool element_less(const Element& a, const Element& b);

struct ElementLess {
  bool operator()(const Element& a, const Element& b) const {
    return element_less(a, b);
  }
};

}  // namespace rlcm
