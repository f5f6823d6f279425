#pragma once

// The concrete right LCM families: N x| P for P generated by relatively
// prime integers, Baumslag-Solitar monoids BS(c,d)^+, affine lattice
// semigroups Z^d x|_A N, free monoids, and self-similar actions X* |x G.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rlcm/semigroup.hpp"

namespace rlcm {

// --------------------------------------------------------------------------
// N x| P

struct NxPConfig {
  std::vector<long long> primes;  // pairwise relatively prime, each >= 2

  void validate() const;
  std::string id() const;
};

class NxPSemigroup final : public Semigroup {
 public:
  explicit NxPSemigroup(NxPConfig config);

  const NxPConfig& config() const { return config_; }

  Element make(long long n, const std::vector<unsigned>& exps) const;
  // Builds (n, p) from the plain integer p; throws if p does not factor
  // over the configured primes.
  Element make_np(long long n, long long p) const;
  long long multiplier_value(const Element& s) const;  // p as an integer
  long long additive_part(const Element& s) const;     // n

  Element identity() const override;
  unsigned enum_length(const Element& s) const override;
  bool is_unit(const Element& s) const override;
  bool is_core(const Element& s) const override;
  bool is_core_irreducible(const Element& s) const override;
  std::pair<Element, Element> core_split(const Element& s) const override;
  std::pair<Element, Element> internal_zs_factor(const Element& s) const override;
  std::vector<std::pair<std::string, Element>> generators() const override;
  std::vector<GenToken> decompose(const Element& s) const override;
  std::string format(const Element& s) const override;
  Element parse(const std::string& text) const override;
  bool is_right_ore() const override { return config_.primes.empty(); }

 protected:
  Element do_multiply(const Element& s, const Element& t) const override;
  LcmOutcome do_right_lcm(const Element& s, const Element& t) const override;
  std::optional<Element> do_left_divide(const Element& s,
                                        const Element& x) const override;
  void do_enumerate(unsigned max_len, std::vector<Element>& out) const override;

 private:
  NxPConfig config_;
};

// --------------------------------------------------------------------------
// BS(c,d)^+ = <a, b | a b^c = b^d a>

struct BSConfig {
  unsigned c = 1;
  unsigned d = 1;

  void validate() const;
  std::string id() const;
};

class BSSemigroup final : public Semigroup {
 public:
  explicit BSSemigroup(BSConfig config);

  const BSConfig& config() const { return config_; }

  Element make(std::vector<unsigned> letters, long long tail) const;
  // Normalizes a raw word over {a, b} into the unique normal form
  // w_1 ... w_m b^i with w_k = b^{l_k} a, 0 <= l_k <= d-1.
  Element normalize_word(const std::string& word) const;

  Element identity() const override;
  unsigned enum_length(const Element& s) const override;
  bool is_unit(const Element& s) const override;
  bool is_core(const Element& s) const override;
  bool is_core_irreducible(const Element& s) const override;
  std::pair<Element, Element> core_split(const Element& s) const override;
  std::pair<Element, Element> internal_zs_factor(const Element& s) const override;
  std::vector<std::pair<std::string, Element>> generators() const override;
  std::vector<GenToken> decompose(const Element& s) const override;
  std::string format(const Element& s) const override;
  Element parse(const std::string& text) const override;
  // d = 1 collapses the letter alphabet to {a}; every pair of ideals then
  // meets and the monoid is right Ore.
  bool is_right_ore() const override { return config_.d == 1; }
  Element normalize(const Element& s) const override;

  // Carry-out of pushing b^k through the given letter word (the b-tail
  // compatibility arithmetic behind right LCMs and left division).
  long long carry_through(long long k, const std::vector<unsigned>& letters,
                          std::vector<unsigned>* quotient_letters = nullptr) const;

 protected:
  Element do_multiply(const Element& s, const Element& t) const override;
  LcmOutcome do_right_lcm(const Element& s, const Element& t) const override;
  std::optional<Element> do_left_divide(const Element& s,
                                        const Element& x) const override;
  void do_enumerate(unsigned max_len, std::vector<Element>& out) const override;

 private:
  void prepend_b(long long j, BSPayload& nf) const;

  BSConfig config_;
};

// --------------------------------------------------------------------------
// Z^d x|_A N

struct MatrixConfig {
  unsigned dim = 0;
  intlat::IntMatrix a;

  void validate() const;  // det != 0 and |det| > 1
  std::string id() const;
};

class MatrixSemigroup final : public Semigroup {
 public:
  explicit MatrixSemigroup(MatrixConfig config);

  const MatrixConfig& config() const { return config_; }

  Element make(IntVec g, unsigned n) const;

  // Canonical residue of x modulo A^k Z^d, and the full transversal of
  // |det A|^k residues, both derived from the Smith normal form of A^k.
  IntVec canonical_residue(const IntVec& x, unsigned k) const;
  std::vector<IntVec> transversal(unsigned k) const;

  Element identity() const override;
  unsigned enum_length(const Element& s) const override;
  bool is_unit(const Element& s) const override;
  bool is_core(const Element& s) const override;
  bool is_core_irreducible(const Element& s) const override;
  std::pair<Element, Element> core_split(const Element& s) const override;
  bool supports_internal_zs() const override { return false; }
  Element canonical_ideal_generator(const Element& s) const override;
  std::vector<std::pair<std::string, Element>> generators() const override;
  std::vector<GenToken> decompose(const Element& s) const override;
  std::string format(const Element& s) const override;
  Element parse(const std::string& text) const override;
  bool is_right_ore() const override { return false; }

 protected:
  Element do_multiply(const Element& s, const Element& t) const override;
  LcmOutcome do_right_lcm(const Element& s, const Element& t) const override;
  std::optional<Element> do_left_divide(const Element& s,
                                        const Element& x) const override;
  void do_enumerate(unsigned max_len, std::vector<Element>& out) const override;

 private:
  struct PowerData {
    intlat::IntMatrix power;      // A^k
    intlat::SNFResult snf;        // of A^k
  };
  const PowerData& power_data(unsigned k) const;

  MatrixConfig config_;
  mutable std::map<unsigned, PowerData> cache_;
};

// --------------------------------------------------------------------------
// Free monoid X*

struct FreeMonoidConfig {
  unsigned alphabet = 2;  // letters a, b, c, ...

  void validate() const;
  std::string id() const;
};

class FreeMonoid final : public Semigroup {
 public:
  explicit FreeMonoid(FreeMonoidConfig config);

  const FreeMonoidConfig& config() const { return config_; }

  Element make(std::vector<unsigned> word) const;

  Element identity() const override;
  unsigned enum_length(const Element& s) const override;
  bool is_unit(const Element& s) const override;
  bool is_core(const Element& s) const override;
  bool is_core_irreducible(const Element& s) const override;
  std::pair<Element, Element> core_split(const Element& s) const override;
  std::vector<std::pair<std::string, Element>> generators() const override;
  std::vector<GenToken> decompose(const Element& s) const override;
  std::string format(const Element& s) const override;
  Element parse(const std::string& text) const override;
  bool is_right_ore() const override { return config_.alphabet == 1; }

 protected:
  Element do_multiply(const Element& s, const Element& t) const override;
  LcmOutcome do_right_lcm(const Element& s, const Element& t) const override;
  std::optional<Element> do_left_divide(const Element& s,
                                        const Element& x) const override;
  void do_enumerate(unsigned max_len, std::vector<Element>& out) const override;

 private:
  FreeMonoidConfig config_;
};

// --------------------------------------------------------------------------
// Self-similar action X* |x G with G generated by a single automaton state
// of infinite order; group elements are generator exponents. The transition
// table lists, for each letter x, the image g.x and the exponent of the
// restriction g|_x.

struct SelfSimilarConfig {
  unsigned alphabet = 2;
  std::vector<unsigned> action;        // x -> g.x, a permutation of X
  std::vector<long long> restriction;  // x -> exponent of g|_x

  // The base-|X| odometer ("adding machine" for |X| = 2): g.x = x+1 mod |X|
  // with carry g on the top letter.
  static SelfSimilarConfig odometer(unsigned alphabet);

  void validate() const;
  std::string id() const;
};

class SelfSimilarSemigroup final : public Semigroup {
 public:
  explicit SelfSimilarSemigroup(SelfSimilarConfig config);

  const SelfSimilarConfig& config() const { return config_; }

  Element make(std::vector<unsigned> word, long long g) const;

  // g^k acting on a letter: returns (image letter, restriction exponent).
  std::pair<unsigned, long long> act_letter(long long k, unsigned x) const;
  // g^k acting on a word: returns (image word, restriction exponent).
  std::pair<std::vector<unsigned>, long long> act_word(
      long long k, const std::vector<unsigned>& w) const;

  // Closure of g^k under restriction by all letters; nullopt if the closure
  // exceeds cap.
  std::optional<std::set<long long>> restriction_closure(long long k,
                                                         std::size_t cap) const;

  Element identity() const override;
  unsigned enum_length(const Element& s) const override;
  bool is_unit(const Element& s) const override;
  bool is_core(const Element& s) const override;
  bool is_core_irreducible(const Element& s) const override;
  std::pair<Element, Element> core_split(const Element& s) const override;
  std::pair<Element, Element> internal_zs_factor(const Element& s) const override;
  Element canonical_ideal_generator(const Element& s) const override;
  std::vector<std::pair<std::string, Element>> generators() const override;
  std::vector<GenToken> decompose(const Element& s) const override;
  std::string format(const Element& s) const override;
  Element parse(const std::string& text) const override;
  bool is_right_ore() const override { return false; }

 protected:
  Element do_multiply(const Element& s, const Element& t) const override;
  LcmOutcome do_right_lcm(const Element& s, const Element& t) const override;
  std::optional<Element> do_left_divide(const Element& s,
                                        const Element& x) const override;
  void do_enumerate(unsigned max_len, std::vector<Element>& out) const override;

 private:
  SelfSimilarConfig config_;
  std::vector<unsigned> inverse_action_;
};

// --------------------------------------------------------------------------

// Any family instance behind the shared interface.
using SemigroupPtr = std::shared_ptr<const Semigroup>;

SemigroupPtr make_nxp(std::vector<long long> primes);
SemigroupPtr make_bs(unsigned c, unsigned d);
SemigroupPtr make_matrix(const intlat::IntMatrix& a);
SemigroupPtr make_free(unsigned alphabet);
SemigroupPtr make_adding_machine();
SemigroupPtr make_self_similar(SelfSimilarConfig config);

}  // namespace rlcm
