#pragma once

// Exact convex-hull membership by phase-one simplex.
//
// The tableau is kept fraction-free: every entry is an integer and the value it
// stands for is entry / D, where D is the previous pivot (Edmonds' integer
// pivoting). Entries stay minors of the input, so for 0/1 generator matrices
// machine integers suffice; the int64 path reports overflow and the caller
// retries over GMP integers. Bland's rule on both the entering and leaving
// choice rules out cycling.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "elhgeo/bitvector.hpp"

namespace elhgeo {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

template <class Integer>
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
template <class Integer>
using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

struct IntegerOverflow : std::overflow_error {
  IntegerOverflow() : std::overflow_error("int64 tableau overflow") {}
};

namespace detail {

// (a*b - c*d) / den, exact.
inline std::int64_t cross_div(std::int64_t a, std::int64_t b, std::int64_t c,
                              std::int64_t d, std::int64_t den) {
  std::int64_t ab, cd, diff;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &diff))
    throw IntegerOverflow();
  return den == 1 ? diff : diff / den;
}

inline BigInt cross_div(const BigInt& a, const BigInt& b, const BigInt& c,
                        const BigInt& d, const BigInt& den) {
  BigInt diff = a * b - c * d;
  if (den != 1) diff /= den;
  return diff;
}

// Sign of a/b - c/d for b, d > 0.
inline int compare_ratio(std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t d) {
  const __int128 l = static_cast<__int128>(a) * d;
  const __int128 r = static_cast<__int128>(c) * b;
  return (l > r) - (l < r);
}

inline int compare_ratio(const BigInt& a, const BigInt& b, const BigInt& c,
                         const BigInt& d) {
  const BigInt l = a * d;
  const BigInt r = c * b;
  return (l > r) - (l < r);
}

}  // namespace detail

/// Finds x ≥ 0 with A x = b, or reports that none exists. Returns x as
/// exact rationals.
template <class Integer>
std::optional<RationalVector> phase_one(const IntegerMatrix<Integer>& A,
                                        const IntegerVector<Integer>& b) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  // Rows 0..m-1 are constraints, row m the phase-one objective. Column n is
  // the right-hand side. Artificial columns are not stored: an artificial
  // that leaves the basis is fixed at zero for good.
  IntegerMatrix<Integer> t(m + 1, n + 1);
  t.setZero();
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool negate = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) t(i, j) = negate ? Integer(-A(i, j)) : A(i, j);
    t(i, n) = negate ? Integer(-b(i)) : b(i);
    for (Eigen::Index j = 0; j <= n; ++j) t(m, j) -= t(i, j);
  }
  // basis[i] < n: structural variable; basis[i] >= n: artificial of row i.
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;
  Integer den = 1;

  while (t(m, n) != 0) {
    Eigen::Index q = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (t(m, j) < 0) {
        q = j;
        break;
      }
    if (q < 0) break;  // optimal with positive infeasibility

    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, q) <= 0) continue;
      if (p < 0) {
        p = i;
        continue;
      }
      const int c = detail::compare_ratio(t(i, n), t(i, q), t(p, n), t(p, q));
      if (c < 0 || (c == 0 && basis[i] < basis[p])) p = i;
    }
    // A negative reduced cost with no positive entry would mean an unbounded
    // phase-one objective, which cannot happen since it is bounded below by 0.
    if (p < 0) break;

    const Integer piv = t(p, q);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == p) continue;
      const Integer tiq = t(i, q);
      if (tiq == 0) {
        if (piv != den)
          for (Eigen::Index j = 0; j <= n; ++j)
            if (t(i, j) != 0) t(i, j) = detail::cross_div(piv, t(i, j), Integer(0), Integer(0), den);
        continue;
      }
      for (Eigen::Index j = 0; j <= n; ++j)
        t(i, j) = detail::cross_div(piv, t(i, j), tiq, t(p, j), den);
    }
    den = piv;
    basis[p] = q;
  }

  if (t(m, n) != 0) return std::nullopt;
  RationalVector x = RationalVector::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] < n) x(basis[i]) = Rational(BigInt(t(i, n))) / Rational(BigInt(den));
  return x;
}

/// x ≥ 0 with A x = b over the rationals. Rows are scaled to integers; the
/// int64 tableau is tried first.
std::optional<RationalVector> nonnegative_solution(const RationalMatrix& A,
                                                   const RationalVector& b);

struct HullResult {
  bool member = false;
  RationalVector lambda;  // convex weights, one per generator, when member
};

/// The convex hull S* of a finite set S of binary vectors, kept as its
/// generator matrix (one column per generator).
class ConvexHull {
 public:
  explicit ConvexHull(std::vector<BinaryVector> generators);

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<BinaryVector>& generators() const noexcept { return gens_; }

  /// v ∈ S*. Throws Error(DimensionMismatch).
  bool contains(const BinaryVector& v) const;
  HullResult contains(const RationalVector& v) const;

 private:
  std::vector<BinaryVector> gens_;
  std::size_t dim_ = 0;
  IntegerMatrix<std::int64_t> a_;  // [G; 1ᵀ]
};

HullResult hull_member(const std::vector<BinaryVector>& gens,
                       const RationalVector& v);
bool hull_member(const std::vector<BinaryVector>& gens, const BinaryVector& v);

}  // namespace elhgeo
