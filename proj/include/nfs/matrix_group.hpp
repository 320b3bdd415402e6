#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "nfs/perm.hpp"
#include "nfs/perm_group.hpp"
#include "nfs/vector_space.hpp"

namespace nfs {

/// A b×b matrix over GF(p) acting on row vectors, v -> v·M. Row i is stored
/// as the point index of the image of the i-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::vector<Point> rows) : rows_(std::move(rows)) {}
  static Matrix identity(const VectorSpace& space);
  /// Matrix of a permutation of V that is assumed linear.
  static Matrix from_linear_perm(const VectorSpace& space, const Perm& g);

  const std::vector<Point>& rows() const { return rows_; }
  Point apply(const VectorSpace& space, Point v) const;
  Perm to_perm(const VectorSpace& space) const;
  bool is_invertible(const VectorSpace& space) const;
  /// Entry (i, k) is digit k of row i.
  std::uint32_t entry(const VectorSpace& space, std::uint32_t i, std::uint32_t k) const {
    return space.digit(rows_[i], k);
  }
  /// Row-major entries, one base-36 character each.
  std::string digit_string(const VectorSpace& space) const;

  bool operator==(const Matrix& o) const { return rows_ == o.rows_; }
  bool operator!=(const Matrix& o) const { return rows_ != o.rows_; }
  bool operator<(const Matrix& o) const { return rows_ < o.rows_; }

 private:
  std::vector<Point> rows_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept;
};

/// a then b: v·a·b.
Matrix multiply(const VectorSpace& space, const Matrix& a, const Matrix& b);
Matrix inverse(const VectorSpace& space, const Matrix& a);
Matrix matrix_power(const VectorSpace& space, Matrix a, std::uint64_t k);

/// Finite subgroup of GL(V) held as an explicit sorted element list.
class MatrixGroup {
 public:
  /// Validates invertibility and closure.
  MatrixGroup(VectorSpace space, std::vector<Matrix> elements);
  static MatrixGroup generated_by(const VectorSpace& space, const std::vector<Matrix>& generators);

  const VectorSpace& space() const { return space_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const std::vector<Matrix>& generators() const { return gens_; }
  bool contains(const Matrix& m) const { return set_.count(m) > 0; }
  bool contains_group(const MatrixGroup& other) const;
  bool is_abelian() const;

  /// Orbit id of every point of V, ids numbered by smallest point.
  std::vector<std::uint32_t> orbit_ids() const;
  std::vector<Perm> as_perms() const;
  PermGroup as_perm_group() const;

  bool operator==(const MatrixGroup& o) const { return space_ == o.space_ && elements_ == o.elements_; }

 private:
  VectorSpace space_;
  std::vector<Matrix> elements_;
  std::unordered_set<Matrix, MatrixHash> set_;
  std::vector<Matrix> gens_;
};

/// |GL(b, p)|, saturating at 2^64-1.
std::uint64_t gl_order(std::uint32_t p, std::uint32_t b);

/// Budget on row choices tried by the rank-extension searches below.
inline constexpr std::uint64_t kLinearSearchBound = 50'000'000;

/// Every element of GL(V), by rank extension. Throws BoundExceeded when
/// |GL(V)| exceeds `bound`.
std::vector<Matrix> enumerate_gl(const VectorSpace& space, std::uint64_t bound = kLinearSearchBound);

/// Every h in GL(V) with orbit_id[v·h] == orbit_id[v] for all v.
std::vector<Matrix> partition_stabilizer(const VectorSpace& space, const std::vector<std::uint32_t>& orbit_id,
                                         std::uint64_t bound = kLinearSearchBound);

/// Visits, in rank-extension order, every g in GL(V) that maps each block of
/// partition `a` onto a block of partition `b`. The visitor returns true to
/// stop. Throws BoundExceeded once `bound` row choices have been tried.
void search_partition_maps(const VectorSpace& space, const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b, const std::function<bool(const Matrix&)>& visit,
                           std::uint64_t bound = kLinearSearchBound);

/// Linear closure: the largest subgroup of GL(V) with the same orbits on V.
MatrixGroup linear_closure(const MatrixGroup& group, std::uint64_t bound = kLinearSearchBound);

/// g in GL(V) with g^-1·A·g = B, or nullopt.
std::optional<Matrix> find_conjugator(const MatrixGroup& a, const MatrixGroup& b,
                                      std::uint64_t bound = kLinearSearchBound);

/// No proper nonzero subspace is invariant: the span of every orbit v·G is V.
bool is_irreducible(const MatrixGroup& group);

}  // namespace nfs
