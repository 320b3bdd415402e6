#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace nfs {

/// A permutation of {0..N-1} stored as its image array. Products compose left
/// to right: (a * b)(x) = b(a(x)).
class Perm {
 public:
  Perm() = default;
  /// Validates bijectivity.
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::uint32_t degree);
  static Perm unchecked(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  std::uint32_t fixed_point_count() const;
  std::uint32_t order() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace nfs
