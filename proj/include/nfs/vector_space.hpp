#pragma once

#include <cstdint>
#include <vector>

namespace nfs {

/// Index of a point of V = GF(p)^b. Coordinates are the base-p digits of the
/// index, least significant digit first, so the zero vector is index 0 and the
/// i-th standard basis vector is p^i.
using Point = std::uint32_t;

/// Coordinate arithmetic on V = GF(p)^b over point indices.
class VectorSpace {
 public:
  VectorSpace() = default;
  VectorSpace(std::uint32_t p, std::uint32_t dim);

  std::uint32_t prime() const { return p_; }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t size() const { return size_; }

  Point basis(std::uint32_t i) const { return pow_[i]; }
  std::uint32_t digit(Point x, std::uint32_t i) const { return (x / pow_[i]) % p_; }
  std::vector<std::uint32_t> digits(Point x) const;
  Point from_digits(const std::vector<std::uint32_t>& d) const;

  Point add(Point x, Point y) const;
  Point sub(Point x, Point y) const;
  Point neg(Point x) const;
  Point scale(std::uint32_t c, Point x) const;

  /// Dimension of the span of the given vectors.
  std::uint32_t rank(const std::vector<Point>& vectors) const;

  bool operator==(const VectorSpace& o) const { return p_ == o.p_ && dim_ == o.dim_; }

 private:
  std::uint32_t p_ = 2;
  std::uint32_t dim_ = 0;
  std::uint32_t size_ = 1;
  std::vector<std::uint32_t> pow_;
  std::vector<std::uint32_t> add_table_;  // only for small spaces
};

}  // namespace nfs
