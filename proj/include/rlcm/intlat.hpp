#pragma once

// Exact integer linear algebra: Smith normal form with unimodular
// transforms, integer linear system solving, characteristic polynomials,
// and the unimodular-factor test used to decide whether the chain of
// lattices A^n Z^d has trivial intersection.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/serialize.hpp>

#include <optional>
#include <string>
#include <vector>

#include "rlcm/error.hpp"

namespace rlcm::intlat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVec& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntVec apply(const IntVec& v) const;   // matrix * column vector
  IntMatrix pow(unsigned n) const;       // square only
  Int det() const;                       // fraction-free expansion
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// A = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
// uinv and vinv are the inverse transforms (D = uinv * A * vinv).
struct SNFResult {
  IntMatrix u, d, v;
  IntMatrix uinv, vinv;

  IntVec diagonal() const;
};

SNFResult snf(const IntMatrix& a);

// Some x with A x = b, if any exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

// Monic integer polynomial, coefficients[k] is the coefficient of x^k.
struct IntPoly {
  std::vector<Int> coefficients;  // normalized: trailing zeros stripped

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  Int eval(const Int& x) const;
  bool monic() const;
  std::string to_string() const;
  bool operator==(const IntPoly& other) const = default;
};

IntPoly charpoly(const IntMatrix& a);  // det(xI - A), exact

// Exact polynomial division; nullopt if the division leaves a remainder.
std::optional<IntPoly> poly_divide(const IntPoly& p, const IntPoly& q);

// Factors p into monic irreducible integer polynomials by bounded search
// (degree of a candidate factor at most floor(deg/2), coefficients bounded
// by 2^deg * max |coefficient|, constant terms restricted to divisors of
// p(0)). Adequate for the desk-scale degrees (<= 8) this library targets.
std::vector<IntPoly> factor_monic(const IntPoly& p);

// True iff some monic integer factor of p has constant coefficient +-1.
bool has_unimodular_factor(const IntPoly& p);

// True iff the intersection of A^n Z^d over all n is {0}, decided through
// the characteristic polynomial: a nonzero intersection exists exactly when
// an A-invariant sublattice L with AL = L does, which happens iff charpoly
// has a monic factor with constant term +-1.
bool intersection_is_zero(const IntMatrix& a);

// Empirical cross-check: nonzero vectors v with |v|_inf <= box that lie in
// A^n Z^d for every n <= steps.
std::vector<IntVec> lattice_chain_survivors(const IntMatrix& a, long long box,
                                            unsigned steps);

std::string vec_to_string(const IntVec& v);

}  // namespace rlcm::intlat
