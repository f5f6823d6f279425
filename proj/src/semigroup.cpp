#include "rlcm/semigroup.hpp"

#include <algorithm>
#include <cstdlib>

namespace rlcm {

void Semigroup::check_family(const Element& s) const {
  if (s.family != key_)
    throw Error(ErrorKind::FamilyMismatch,
                "element of family '" + s.family.id + "' used with '" + key_.id + "'");
}

Element Semigroup::multiply(const Element& s, const Element& t) const {
  check_family(s);
  check_family(t);
  return do_multiply(s, t);
}

LcmOutcome Semigroup::right_lcm(const Element& s, const Element& t) const {
  check_family(s);
  check_family(t);
  return do_right_lcm(s, t);
}

std::optional<Element> Semigroup::left_divide(const Element& s,
                                              const Element& x) const {
  check_family(s);
  check_family(x);
  return do_left_divide(s, x);
}

std::vector<Element> Semigroup::enumerate(unsigned max_len) const {
  if (max_len > 40)
    throw Error(ErrorKind::CapExceeded, "enumeration length cap is 40");
  std::vector<Element> out;
  do_enumerate(max_len, out);
  if (out.size() > enumeration_cap())
    throw Error(ErrorKind::CapExceeded,
                "enumeration exceeds the element-count cap; raise RLCM_ENUM_CAP");
  // Deterministic order: by level, then payload order within a level.
  std::stable_sort(out.begin(), out.end(), [this](const Element& a, const Element& b) {
    unsigned la = enum_length(a), lb = enum_length(b);
    if (la != lb) return la < lb;
    return element_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Element Semigroup::canonical_ideal_generator(const Element& s) const {
  return s;  // families with trivial units
}

std::pair<Element, Element> Semigroup::internal_zs_factor(const Element& s) const {
  if (!supports_internal_zs())
    throw Error(ErrorKind::Unsupported,
                "family '" + key().id + "' has no internal Zappa-Szep factorization");
  return core_split(s);
}

std::size_t enumeration_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("RLCM_ENUM_CAP")) {
      long long v = std::atoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(2'000'000);
  }();
  return cap;
}

}  // namespace rlcm
