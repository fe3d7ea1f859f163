#include "elhgeo/hull.hpp"

#include <limits>

#include "elhgeo/error.hpp"

namespace elhgeo {
namespace {

bool fits_int64(const IntegerMatrix<BigInt>& a, const IntegerVector<BigInt>& b) {
  // Leave headroom: the tableau multiplies entries pairwise.
  const BigInt bound = BigInt(1) << 24;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (abs(a.data()[i]) >= bound) return false;
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (abs(b(i)) >= bound) return false;
  return true;
}

std::optional<RationalVector> solve_integer(const IntegerMatrix<BigInt>& a,
                                            const IntegerVector<BigInt>& b) {
  if (fits_int64(a, b)) {
    try {
      const IntegerMatrix<std::int64_t> a64 = a.unaryExpr(
          [](const BigInt& x) { return x.convert_to<std::int64_t>(); });
      const IntegerVector<std::int64_t> b64 = b.unaryExpr(
          [](const BigInt& x) { return x.convert_to<std::int64_t>(); });
      return phase_one<std::int64_t>(a64, b64);
    } catch (const IntegerOverflow&) {
    }
  }
  return phase_one<BigInt>(a, b);
}

}  // namespace

std::optional<RationalVector> nonnegative_solution(const RationalMatrix& A,
                                                   const RationalVector& b) {
  if (A.rows() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "A and b disagree on row count");
  IntegerMatrix<BigInt> ai(A.rows(), A.cols());
  IntegerVector<BigInt> bi(b.size());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    BigInt scale = denominator(b(i));
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      scale = lcm(scale, BigInt(denominator(A(i, j))));
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      ai(i, j) = numerator(A(i, j)) * (scale / denominator(A(i, j)));
    bi(i) = numerator(b(i)) * (scale / denominator(b(i)));
  }
  return solve_integer(ai, bi);
}

ConvexHull::ConvexHull(std::vector<BinaryVector> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) return;
  dim_ = gens_.front().size();
  const auto k = static_cast<Eigen::Index>(gens_.size());
  const auto d = static_cast<Eigen::Index>(dim_);
  a_.resize(d + 1, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const auto& g = gens_[static_cast<std::size_t>(j)];
    if (g.size() != dim_)
      throw Error(ErrorKind::DimensionMismatch,
                  "generators of different lengths");
    for (Eigen::Index i = 0; i < d; ++i)
      a_(i, j) = g.get(static_cast<std::size_t>(i)) ? 1 : 0;
    a_(d, j) = 1;
  }
}

bool ConvexHull::contains(const BinaryVector& v) const {
  if (gens_.empty()) return false;
  if (v.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "probe length differs from hull");
  IntegerVector<std::int64_t> b(a_.rows());
  for (std::size_t i = 0; i < dim_; ++i)
    b(static_cast<Eigen::Index>(i)) = v.get(i) ? 1 : 0;
  b(a_.rows() - 1) = 1;
  try {
    return phase_one<std::int64_t>(a_, b).has_value();
  } catch (const IntegerOverflow&) {
    const IntegerMatrix<BigInt> a = a_.cast<BigInt>();
    return phase_one<BigInt>(a, b.cast<BigInt>()).has_value();
  }
}

HullResult ConvexHull::contains(const RationalVector& v) const {
  HullResult out;
  if (gens_.empty()) return out;
  if (static_cast<std::size_t>(v.size()) != dim_)
    throw Error(ErrorKind::DimensionMismatch, "probe length differs from hull");
  // Row i of G λ = v is scaled by the denominator of v_i.
  IntegerMatrix<BigInt> a = a_.cast<BigInt>();
  IntegerVector<BigInt> b(a_.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const BigInt den = denominator(v(i));
    a.row(i) *= den;
    b(i) = numerator(v(i));
  }
  b(a_.rows() - 1) = 1;
  if (auto x = solve_integer(a, b)) {
    out.member = true;
    out.lambda = std::move(*x);
  }
  return out;
}

HullResult hull_member(const std::vector<BinaryVector>& gens,
                       const RationalVector& v) {
  return ConvexHull(gens).contains(v);
}

bool hull_member(const std::vector<BinaryVector>& gens, const BinaryVector& v) {
  return ConvexHull(gens).contains(v);
}

}  // namespace elhgeo
