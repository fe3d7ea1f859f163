#include "elhgeo/bitvector.hpp"

#include <bit>

#include "elhgeo/error.hpp"

namespace elhgeo {

BinaryVector BinaryVector::from_bits(const std::vector<int>& bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] != 0) v.set(i);
  return v;
}

BinaryVector BinaryVector::parse(const std::string& bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw Error(ErrorKind::Format, "not a bit string: " + bits);
  }
  return v;
}

std::size_t BinaryVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BinaryVector BinaryVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > size_)
    throw Error(ErrorKind::DimensionMismatch, "slice out of range");
  BinaryVector out(length);
  const std::size_t first = offset >> 6;
  const std::size_t shift = offset & 63;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t word = words_[first + w] << shift;
    if (shift != 0 && first + w + 1 < words_.size())
      word |= words_[first + w + 1] >> (64 - shift);
    out.words_[w] = word;
  }
  // Clear the tail beyond `length`.
  if (const std::size_t tail = length & 63; tail != 0)
    out.words_.back() &= ~std::uint64_t{0} << (64 - tail);
  return out;
}

std::vector<int> BinaryVector::bits() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string BinaryVector::str() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) out[i] = '1';
  return out;
}

std::size_t BinaryVector::hash() const noexcept {
  // FNV-1a over the words, seeded with the length.
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

BinaryVector concat(const BinaryVector& u, const BinaryVector& v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::DimensionMismatch,
                "concat of vectors of length " + std::to_string(u.size()) +
                    " and " + std::to_string(v.size()));
  BinaryVector out(u.size() + v.size());
  for (std::size_t w = 0; w < u.words_.size(); ++w) out.words_[w] = u.words_[w];
  const std::size_t base = u.size() >> 6;
  const std::size_t shift = u.size() & 63;
  for (std::size_t w = 0; w < v.words_.size(); ++w) {
    const std::uint64_t word = v.words_[w];
    out.words_[base + w] |= word >> shift;
    if (shift != 0 && base + w + 1 < out.words_.size())
      out.words_[base + w + 1] |= word << (64 - shift);
  }
  return out;
}

}  // namespace elhgeo
