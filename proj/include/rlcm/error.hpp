#pragma once

#include <stdexcept>
#include <string>

namespace rlcm {

enum class ErrorKind {
  FamilyMismatch,
  Unsupported,
  CapExceeded,
  ParseError,
  Diverges,
  BadConfig,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Verdict for predicates quantified over an infinite semigroup: a bounded
// search can refute (False with witness) or confirm a decidable criterion
// (True), but otherwise only certifies up to the bound it explored.
enum class Truth { True, False, TrueToBound };

struct Verdict {
  Truth truth = Truth::TrueToBound;
  unsigned bound = 0;            // meaningful for TrueToBound
  std::string witness;           // meaningful for False

  bool definite() const noexcept { return truth != Truth::TrueToBound; }
  bool holds() const noexcept { return truth != Truth::False; }

  static Verdict yes() { return {Truth::True, 0, {}}; }
  static Verdict no(std::string w = {}) { return {Truth::False, 0, std::move(w)}; }
  static Verdict to_bound(unsigned b) { return {Truth::TrueToBound, b, {}}; }
};

inline const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    default: return "true-to-bound";
  }
}

}  // namespace rlcm
