#include "rlcm/intlat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rlcm::intlat {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorKind::BadInput, "matrix data size mismatch");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorKind::BadInput, "ragged matrix initializer");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw Error(ErrorKind::BadInput, "matrix product shape mismatch");
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::BadInput, "matrix-vector shape mismatch");
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::pow(unsigned n) const {
  if (!square()) throw Error(ErrorKind::BadInput, "pow of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

Int IntMatrix::det() const {
  if (!square()) throw Error(ErrorKind::BadInput, "det of non-square matrix");
  // Bareiss fraction-free elimination.
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << at(i, j);
    }
    os << "]";
    if (i + 1 < rows_) os << ",";
  }
  os << "]";
  return os.str();
}

IntVec SNFResult::diagonal() const {
  IntVec out;
  std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

// Row/column operations on the working matrix, mirrored into the
// accumulated transforms so that A = U * D * V stays invariant:
//   D <- E D  implies  U <- U E^{-1},  uinv <- E uinv.
struct SnfWork {
  IntMatrix d, u, v, uinv, vinv;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
    for (std::size_t k = 0; k < u.rows(); ++k) std::swap(u.at(k, i), u.at(k, j));
    for (std::size_t k = 0; k < uinv.cols(); ++k) std::swap(uinv.at(i, k), uinv.at(j, k));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
    for (std::size_t k = 0; k < v.cols(); ++k) std::swap(v.at(i, k), v.at(j, k));
    for (std::size_t k = 0; k < vinv.rows(); ++k) std::swap(vinv.at(k, i), vinv.at(k, j));
  }
  // row i += q * row j
  void row_add(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) += q * d.at(j, k);
    for (std::size_t k = 0; k < u.rows(); ++k) u.at(k, j) -= q * u.at(k, i);
    for (std::size_t k = 0; k < uinv.cols(); ++k) uinv.at(i, k) += q * uinv.at(j, k);
  }
  // col i += q * col j
  void col_add(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, i) += q * d.at(k, j);
    for (std::size_t k = 0; k < v.cols(); ++k) v.at(j, k) -= q * v.at(i, k);
    for (std::size_t k = 0; k < vinv.rows(); ++k) vinv.at(k, i) += q * vinv.at(k, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
    for (std::size_t k = 0; k < u.rows(); ++k) u.at(k, i) = -u.at(k, i);
    for (std::size_t k = 0; k < uinv.cols(); ++k) uinv.at(i, k) = -uinv.at(i, k);
  }
};

}  // namespace

SNFResult snf(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
            IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t r = std::min(m, n);

  for (std::size_t t = 0; t < r; ++t) {
    // Pivot: the nonzero entry of smallest magnitude in the trailing block.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = w.d.at(i, j);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    // Clear row and column t; repeat until clean since reductions can
    // reintroduce entries.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.row_add(i, t, -q);
        if (w.d.at(i, t) != 0) {
          w.row_swap(t, i);  // smaller remainder becomes the pivot
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.col_add(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.col_swap(t, j);
          dirty = true;
        }
      }
    }

    // Divisibility: fold any entry the pivot does not divide into column t.
    bool chain_ok = false;
    while (!chain_ok) {
      chain_ok = true;
      for (std::size_t i = t + 1; i < m && chain_ok; ++i)
        for (std::size_t j = t + 1; j < n && chain_ok; ++j) {
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.col_add(t, j, 1);
            chain_ok = false;
            // Re-clear column t.
            bool dirty2 = true;
            while (dirty2) {
              dirty2 = false;
              for (std::size_t i2 = t + 1; i2 < m; ++i2) {
                if (w.d.at(i2, t) == 0) continue;
                Int q = w.d.at(i2, t) / w.d.at(t, t);
                w.row_add(i2, t, -q);
                if (w.d.at(i2, t) != 0) {
                  w.row_swap(t, i2);
                  dirty2 = true;
                }
              }
              for (std::size_t j2 = t + 1; j2 < n; ++j2) {
                if (w.d.at(t, j2) == 0) continue;
                Int q = w.d.at(t, j2) / w.d.at(t, t);
                w.col_add(j2, t, -q);
                if (w.d.at(t, j2) != 0) {
                  w.col_swap(t, j2);
                  dirty2 = true;
                }
              }
            }
          }
        }
    }

    if (w.d.at(t, t) < 0) w.row_negate(t);
  }

  return SNFResult{w.u, w.d, w.v, w.uinv, w.vinv};
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  if (b.size() != a.rows())
    throw Error(ErrorKind::BadInput, "solve_integer shape mismatch");
  SNFResult s = snf(a);
  IntVec y = s.uinv.apply(b);  // D (V x) = U^{-1} b
  IntVec z(a.cols(), Int(0));
  const std::size_t r = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Int di = i < r ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % di != 0) return std::nullopt;
      z[i] = y[i] / di;
    }
  }
  return s.vinv.apply(z);
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

bool IntPoly::monic() const {
  return !coefficients.empty() && coefficients.back() == 1;
}

std::string IntPoly::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coefficients[k];
    if (c == 0 && degree() > 0) continue;
    Int ac = abs_int(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || ac != 1) os << ac;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPoly charpoly(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::BadInput, "charpoly of non-square matrix");
  // Faddeev-LeVerrier: all intermediate divisions are exact over Z.
  const std::size_t n = a.rows();
  std::vector<Int> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = A * M_{k-1} + c_{n-k+1} I
      m = a * m;
      for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
    }
    IntMatrix am = a * m;
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
    c[n - k] = -tr / Int(k);
  }
  return IntPoly{std::move(c)};
}

std::optional<IntPoly> poly_divide(const IntPoly& p, const IntPoly& q) {
  if (q.coefficients.empty() || !q.monic())
    throw Error(ErrorKind::BadInput, "poly_divide expects a monic divisor");
  if (p.degree() < q.degree()) return std::nullopt;
  std::vector<Int> rem = p.coefficients;
  std::vector<Int> quot(p.degree() - q.degree() + 1);
  for (int k = p.degree() - q.degree(); k >= 0; --k) {
    Int lead = rem[k + q.degree()];
    quot[k] = lead;
    if (lead == 0) continue;
    for (int j = 0; j <= q.degree(); ++j)
      rem[k + j] -= lead * q.coefficients[j];
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly{std::move(quot)};
}

namespace {

std::vector<Int> signed_divisors(const Int& n) {
  std::vector<Int> out;
  Int an = abs_int(n);
  for (Int d = 1; d * d <= an; ++d) {
    if (an % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      Int e = an / d;
      if (e != d) {
        out.push_back(e);
        out.push_back(-e);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) {
    Int aa = abs_int(a), ab = abs_int(b);
    return aa != ab ? aa < ab : a > b;
  });
  return out;
}

// Smallest-degree monic factor with 1 <= deg <= floor(deg(p)/2), or nullopt
// when p is irreducible over Z (within the documented search bounds).
std::optional<IntPoly> find_monic_factor(const IntPoly& p) {
  const int deg = p.degree();
  if (deg <= 1) return std::nullopt;
  if (deg > 8)
    throw Error(ErrorKind::CapExceeded,
                "factor search supports degree <= 8 (desk-scale cap)");

  // x | p fast path.
  if (p.coefficients[0] == 0) {
    return IntPoly{{Int(0), Int(1)}};
  }

  Int maxc = 0;
  for (const Int& c : p.coefficients) maxc = std::max(maxc, abs_int(c));
  Int bound = maxc;
  for (int i = 0; i < deg; ++i) bound *= 2;  // 2^deg * max |coeff|
  const std::vector<Int> consts = signed_divisors(p.coefficients[0]);

  // Degree-1 fast path (rational root test): x - r with r | p(0).
  for (const Int& r : consts) {
    if (p.eval(r) == 0) return IntPoly{{Int(-r), Int(1)}};
  }

  for (int dq = 2; dq <= deg / 2; ++dq) {
    // Candidate q = x^dq + m_{dq-1} x^{dq-1} + ... + m_1 x + c0 with
    // c0 | p(0) and middle coefficients in [-bound, bound].
    std::vector<Int> mid(dq - 1, -bound);
    while (true) {
      for (const Int& c0 : consts) {
        std::vector<Int> coeffs;
        coeffs.reserve(dq + 1);
        coeffs.push_back(c0);
        for (const Int& m : mid) coeffs.push_back(m);
        coeffs.push_back(1);
        IntPoly q{coeffs};
        if (poly_divide(p, q)) return q;
      }
      int pos = 0;
      while (pos < dq - 1) {
        if (mid[pos] < bound) {
          ++mid[pos];
          break;
        }
        mid[pos] = -bound;
        ++pos;
      }
      if (pos == dq - 1) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<IntPoly> factor_monic(const IntPoly& p) {
  if (!p.monic()) throw Error(ErrorKind::BadInput, "factor_monic expects a monic polynomial");
  std::vector<IntPoly> out;
  std::vector<IntPoly> stack{p};
  while (!stack.empty()) {
    IntPoly cur = stack.back();
    stack.pop_back();
    if (cur.degree() < 1) continue;
    auto q = find_monic_factor(cur);
    if (!q) {
      out.push_back(cur);
      continue;
    }
    stack.push_back(*q);
    stack.push_back(*poly_divide(cur, *q));
  }
  std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients < b.coefficients;
  });
  return out;
}

bool has_unimodular_factor(const IntPoly& p) {
  if (!p.monic()) throw Error(ErrorKind::BadInput, "has_unimodular_factor expects monic input");
  if (p.degree() < 1) return false;
  Int c0 = abs_int(p.coefficients[0]);
  if (c0 == 1) return true;
  // A product of monic integer polynomials has constant term +-1 iff each
  // factor in it does, so it suffices to inspect irreducible factors.
  for (const IntPoly& q : factor_monic(p)) {
    if (abs_int(q.coefficients[0]) == 1) return true;
  }
  return false;
}

bool intersection_is_zero(const IntMatrix& a) {
  if (!a.square()) throw Error(ErrorKind::BadInput, "intersection_is_zero expects square A");
  if (a.det() == 0) throw Error(ErrorKind::BadInput, "intersection_is_zero expects det A != 0");
  return !has_unimodular_factor(charpoly(a));
}

std::vector<IntVec> lattice_chain_survivors(const IntMatrix& a, long long box,
                                            unsigned steps) {
  if (!a.square()) throw Error(ErrorKind::BadInput, "lattice probe expects square A");
  const std::size_t d = a.rows();
  std::vector<IntVec> survivors;
  IntVec v(d, Int(0));
  // Enumerate the box [-box, box]^d.
  std::vector<long long> idx(d, -box);
  bool done = false;
  while (!done) {
    bool zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = idx[i];
      if (idx[i] != 0) zero = false;
    }
    if (!zero) survivors.push_back(v);
    std::size_t pos = 0;
    while (pos < d) {
      if (idx[pos] < box) {
        ++idx[pos];
        break;
      }
      idx[pos] = -box;
      ++pos;
    }
    if (pos == d) done = true;
  }

  IntMatrix an = IntMatrix::identity(d);
  for (unsigned n = 1; n <= steps && !survivors.empty(); ++n) {
    an = an * a;
    std::vector<IntVec> next;
    for (const IntVec& w : survivors)
      if (solve_integer(an, w)) next.push_back(w);
    survivors = std::move(next);
  }
  return survivors;
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace rlcm::intlat
