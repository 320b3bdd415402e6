#include "nfs/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace nfs {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("Perm: image array is not a bijection");
    seen[y] = 1;
  }
}

Perm Perm::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0u);
  return unchecked(std::move(id));
}

Perm Perm::unchecked(std::vector<std::uint32_t> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return unchecked(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint32_t Perm::fixed_point_count() const {
  std::uint32_t c = 0;
  for (std::uint32_t x = 0; x < images_.size(); ++x) c += images_[x] == x;
  return c;
}

std::uint32_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<std::uint32_t>(result);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Perm product: degree mismatch");
  std::vector<std::uint32_t> r(a.images_.size());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = b.images_[a.images_[x]];
  return Perm::unchecked(std::move(r));
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace nfs
