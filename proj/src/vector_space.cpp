#include "nfs/vector_space.hpp"

#include <stdexcept>

namespace nfs {

namespace {
constexpr std::uint32_t kAddTableMax = 1024;
}

VectorSpace::VectorSpace(std::uint32_t p, std::uint32_t dim) : p_(p), dim_(dim) {
  if (p < 2) throw std::invalid_argument("VectorSpace: p must be at least 2");
  pow_.resize(dim + 1);
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i <= dim; ++i) {
    if (acc > (1ull << 31)) throw std::invalid_argument("VectorSpace: too large");
    pow_[i] = static_cast<std::uint32_t>(acc);
    acc *= p;
  }
  size_ = pow_[dim];
  if (size_ <= kAddTableMax && p_ != 2) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (Point x = 0; x < size_; ++x) {
      for (Point y = 0; y < size_; ++y) {
        Point r = 0;
        for (std::uint32_t i = 0; i < dim_; ++i) {
          r += ((digit(x, i) + digit(y, i)) % p_) * pow_[i];
        }
        add_table_[static_cast<std::size_t>(x) * size_ + y] = r;
      }
    }
  }
}

std::vector<std::uint32_t> VectorSpace::digits(Point x) const {
  std::vector<std::uint32_t> d(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Point VectorSpace::from_digits(const std::vector<std::uint32_t>& d) const {
  Point r = 0;
  for (std::uint32_t i = 0; i < dim_; ++i) r += (d[i] % p_) * pow_[i];
  return r;
}

Point VectorSpace::add(Point x, Point y) const {
  if (p_ == 2) return x ^ y;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(x) * size_ + y];
  Point r = 0;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    r += s * pow_[i];
    x /= p_;
    y /= p_;
  }
  return r;
}

Point VectorSpace::neg(Point x) const {
  if (p_ == 2) return x;
  Point r = 0;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    std::uint32_t c = x % p_;
    r += ((p_ - c) % p_) * pow_[i];
    x /= p_;
  }
  return r;
}

Point VectorSpace::sub(Point x, Point y) const { return add(x, neg(y)); }

Point VectorSpace::scale(std::uint32_t c, Point x) const {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return x;
  Point r = 0;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    r += ((x % p_) * c % p_) * pow_[i];
    x /= p_;
  }
  return r;
}

std::uint32_t VectorSpace::rank(const std::vector<Point>& vectors) const {
  // Gaussian elimination over GF(p) on digit rows.
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(vectors.size());
  for (Point v : vectors) rows.push_back(digits(v));
  std::uint32_t r = 0;
  for (std::uint32_t col = 0; col < dim_ && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    // inverse of the pivot entry by search; p is small
    std::uint32_t inv = 1;
    while (rows[r][col] * inv % p_ != 1) ++inv;
    for (auto& e : rows[r]) e = e * inv % p_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      std::uint32_t f = rows[i][col];
      for (std::uint32_t k = 0; k < dim_; ++k) {
        rows[i][k] = (rows[i][k] + (p_ - f) * rows[r][k]) % p_;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace nfs
