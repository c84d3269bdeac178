#ifndef FILTRA_POINT_SET_HPP
#define FILTRA_POINT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "filtra/error.hpp"

namespace filtra {

// A subset of the points of a fixed universe, stored as a bitmask. Bit i is
// point i in universe order. Every set knows the size of its universe so
// complements are exact and mixing universes is caught.
class PointSet {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  PointSet() = default;
  explicit PointSet(std::size_t universe_size, std::uint64_t bits = 0)
      : bits_(bits), size_(static_cast<std::uint8_t>(universe_size)) {
    if (universe_size > kMaxPoints) {
      throw LimitError("universe has more than 64 points");
    }
    if ((bits & ~mask()) != 0) {
      throw InvariantError("point set bits exceed universe size");
    }
  }

  static PointSet empty_over(std::size_t n) { return PointSet(n); }
  static PointSet full_over(std::size_t n) {
    return PointSet(n, full_mask(n));
  }
  static PointSet singleton(std::size_t n, std::size_t i) {
    return PointSet(n, std::uint64_t{1} << i);
  }

  std::size_t universe_size() const { return size_; }
  std::uint64_t bits() const { return bits_; }

  bool empty() const { return bits_ == 0; }
  bool full() const { return bits_ == mask(); }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(std::size_t i) const { return i < size_ && ((bits_ >> i) & 1U) != 0; }

  bool subset_of(const PointSet& other) const {
    same_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const PointSet& other) const {
    same_universe(other);
    return (bits_ & other.bits_) != 0;
  }

  PointSet complement() const { return PointSet(size_, ~bits_ & mask()); }

  PointSet& insert(std::size_t i) {
    if (i >= size_) throw InvariantError("point index out of range");
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend PointSet operator|(const PointSet& a, const PointSet& b) {
    a.same_universe(b);
    return PointSet(a.size_, a.bits_ | b.bits_);
  }
  friend PointSet operator&(const PointSet& a, const PointSet& b) {
    a.same_universe(b);
    return PointSet(a.size_, a.bits_ & b.bits_);
  }
  // Set difference.
  friend PointSet operator-(const PointSet& a, const PointSet& b) {
    a.same_universe(b);
    return PointSet(a.size_, a.bits_ & ~b.bits_);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet& a, const PointSet& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  std::uint64_t mask() const { return full_mask(size_); }
  void same_universe(const PointSet& other) const {
    if (size_ != other.size_) {
      throw UniverseMismatch("point sets over universes of different size");
    }
  }

  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

}  // namespace filtra

#endif  // FILTRA_POINT_SET_HPP
