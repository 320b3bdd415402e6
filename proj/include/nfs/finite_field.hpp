#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nfs/vector_space.hpp"

namespace nfs {

/// Elements of GF(p^e) are points of V = GF(p)^e: the index encodes the
/// coefficient vector of the polynomial-basis representation, coefficient of
/// t^i in base-p digit i.
using FieldElement = Point;

inline constexpr std::uint64_t kDefaultFieldBound = 1u << 20;

/// GF(p^e) with the lexicographically smallest monic irreducible modulus and
/// full exp/log tables for the lexicographically smallest primitive element.
/// Immutable once built.
class FiniteField {
 public:
  std::uint32_t characteristic() const { return space_.prime(); }
  std::uint32_t degree() const { return space_.dim(); }
  std::uint32_t order() const { return space_.size(); }
  const VectorSpace& space() const { return space_; }

  /// Coefficients c_0..c_{e-1} of the monic modulus t^e + sum c_i t^i.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement generator() const { return exp_[1 % exp_.size()]; }
  const std::vector<FieldElement>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  FieldElement one() const { return 1; }
  FieldElement add(FieldElement x, FieldElement y) const { return space_.add(x, y); }
  FieldElement sub(FieldElement x, FieldElement y) const { return space_.sub(x, y); }
  FieldElement neg(FieldElement x) const { return space_.neg(x); }
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t k) const;
  /// g^k for the fixed primitive element g.
  FieldElement exp(std::uint64_t k) const { return exp_[k % (order() - 1)]; }
  /// Discrete logarithm to base g; throws on zero.
  std::uint32_t log(FieldElement x) const;

  /// x^(q^j) with q = p^d. Throws if d does not divide the degree.
  FieldElement frobenius(FieldElement x, std::uint64_t j, std::uint32_t d = 1) const;

  std::vector<std::uint32_t> coeffs(FieldElement x) const { return space_.digits(x); }
  FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const;

  /// Builds from serialized tables, re-validating every invariant.
  static FiniteField from_tables(std::uint32_t p, std::uint32_t e,
                                 std::vector<std::uint32_t> modulus,
                                 std::vector<FieldElement> exp_table);

  bool operator==(const FiniteField& other) const {
    return space_ == other.space_ && modulus_ == other.modulus_ && exp_ == other.exp_;
  }

 private:
  friend FiniteField make_field(std::uint32_t, std::uint32_t, std::uint64_t);
  FiniteField() = default;
  void validate() const;

  VectorSpace space_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElement> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint64_t> pdeg_;  // p^i mod (order-1)
};

FiniteField make_field(std::uint32_t p, std::uint32_t e, std::uint64_t bound = kDefaultFieldBound);

/// Lexicographically smallest element (constant coefficient most significant)
/// of multiplicative order p^e - 1.
FieldElement primitive_element(const FiniteField& field);

std::uint32_t discrete_log(const FiniteField& field, FieldElement x);

FieldElement frobenius(const FiniteField& field, FieldElement x, std::uint64_t j, std::uint32_t d);

/// Lexicographic rank of a coefficient vector, comparing from the constant
/// term upward.
std::uint64_t lex_key(const VectorSpace& space, Point x);

namespace poly {
/// Dense polynomials over GF(p), coefficient i of t^i, trimmed of leading zeros.
using Poly = std::vector<std::uint32_t>;
Poly mul_mod(const Poly& a, const Poly& b, const Poly& monic_mod, std::uint32_t p);
Poly rem(Poly a, const Poly& monic_divisor, std::uint32_t p);
bool is_irreducible(const Poly& monic, std::uint32_t p);
}  // namespace poly

}  // namespace nfs
