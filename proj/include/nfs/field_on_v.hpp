#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nfs/finite_field.hpp"
#include "nfs/matrix_group.hpp"

namespace nfs {

/// A field structure on the points of V whose addition is that of V.
/// Multiplication goes through exp/log tables over a fixed generator.
class FieldOnV {
 public:
  static FieldOnV from_field(const FiniteField& field);
  /// Field L spanned by `matrices` inside End(V), transported to V by
  /// f -> u·f. nullopt unless the span is a field with |V| elements.
  static std::optional<FieldOnV> from_span(const VectorSpace& space, const std::vector<Matrix>& matrices, Point u);

  const VectorSpace& space() const { return space_; }
  Point one() const { return one_; }
  Point generator() const { return exp_[1 % exp_.size()]; }
  Point mul(Point x, Point y) const;
  Point exp(std::uint64_t k) const { return exp_[k % exp_.size()]; }
  std::uint32_t log(Point x) const;
  /// x^(p^j).
  Point frobenius(Point x, std::uint32_t j) const;
  /// Matrix of x -> c·x.
  Matrix multiplication_matrix(Point c) const;

 private:
  FieldOnV() = default;
  VectorSpace space_;
  Point one_ = 1;
  std::vector<Point> exp_;
  std::vector<std::uint32_t> log_;
};

/// j such that v·g = c·v^(p^j) for all v, where c = 1·g; nullopt if g is not
/// of that form.
std::optional<std::uint32_t> semilinear_exponent(const Matrix& g, const FieldOnV& field);

/// Every element of `group` lies in ΓL₁(field); checked elementwise.
bool is_semilinear(const MatrixGroup& group, const FieldOnV& field);

/// Every generator of `group` normalizes the Singer cycle field^×.
bool normalizes_singer(const MatrixGroup& group, const FieldOnV& field);

}  // namespace nfs
