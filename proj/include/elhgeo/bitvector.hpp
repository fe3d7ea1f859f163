#pragma once

// Packed binary vectors, the points of every region the embedding builds.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace elhgeo {

/// A vector in {0,1}^n. Bit i lives in word i/64 at position 63 - i%64, so
/// comparing words as unsigned integers orders vectors lexicographically
/// (bit 0 most significant).
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}
  /// From a 0/1 sequence; any non-zero entry is read as 1.
  static BinaryVector from_bits(const std::vector<int>& bits);
  /// From a string of '0'/'1' characters.
  static BinaryVector parse(const std::string& bits);

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (63 - (i & 63))) & 1U;
  }
  bool operator[](std::size_t i) const noexcept { return get(i); }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { set(i, !get(i)); }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }

  /// Bits [offset, offset + length).
  BinaryVector slice(std::size_t offset, std::size_t length) const;

  std::vector<int> bits() const;
  std::string str() const;

  template <class Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> to_dense() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v(static_cast<Eigen::Index>(size_));
    for (std::size_t i = 0; i < size_; ++i)
      v(static_cast<Eigen::Index>(i)) = Scalar(get(i) ? 1 : 0);
    return v;
  }

  std::size_t hash() const noexcept;

  /// Shorter vectors first, then lexicographic.
  friend std::strong_ordering operator<=>(const BinaryVector& a,
                                          const BinaryVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }
  friend bool operator==(const BinaryVector& a, const BinaryVector& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  friend BinaryVector concat(const BinaryVector& u, const BinaryVector& v);

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// u ⊕ v. Throws Error(DimensionMismatch) unless |u| = |v|.
BinaryVector concat(const BinaryVector& u, const BinaryVector& v);

struct BinaryVectorHash {
  std::size_t operator()(const BinaryVector& v) const noexcept {
    return v.hash();
  }
};

}  // namespace elhgeo
