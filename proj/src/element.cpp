#include "rlcm/element.hpp"

namespace rlcm {

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::NxP: return "nxp";
    case FamilyKind::BaumslagSolitar: return "bs";
    case FamilyKind::MatrixAffine: return "matrix";
    case FamilyKind::FreeMonoid: return "free";
    case FamilyKind::SelfSimilar: return "selfsim";
  }
  return "?";
}

namespace {

int cmp_intvec(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

template <typename T>
int cmp_vec(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int cmp_payload(const Payload& a, const Payload& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  switch (a.index()) {
    case 0: {
      const auto& x = std::get<NxPPayload>(a);
      const auto& y = std::get<NxPPayload>(b);
      if (int c = cmp_vec(x.exps, y.exps)) return c;
      if (x.n != y.n) return x.n < y.n ? -1 : 1;
      return 0;
    }
    case 1: {
      const auto& x = std::get<BSPayload>(a);
      const auto& y = std::get<BSPayload>(b);
      if (int c = cmp_vec(x.letters, y.letters)) return c;
      if (x.tail != y.tail) return x.tail < y.tail ? -1 : 1;
      return 0;
    }
    case 2: {
      const auto& x = std::get<MatrixPayload>(a);
      const auto& y = std::get<MatrixPayload>(b);
      if (x.n != y.n) return x.n < y.n ? -1 : 1;
      return cmp_intvec(x.g, y.g);
    }
    default: {
      const auto& x = std::get<WordPayload>(a);
      const auto& y = std::get<WordPayload>(b);
      if (int c = cmp_vec(x.word, y.word)) return c;
      if (x.g != y.g) return x.g < y.g ? -1 : 1;
      return 0;
    }
  }
}

}  // namespace

bool element_less(const Element& a, const Element& b) {
  if (a.family != b.family) return a.family < b.family;
  return cmp_payload(a.payload, b.payload) < 0;
}

}  // namespace rlcm
