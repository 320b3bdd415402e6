#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nfs/finite_field.hpp"
#include "nfs/finite_group.hpp"

namespace nfs {

/// (q, n) with q = p^d.
struct DicksonPair {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t d = 0;
};

/// True iff every prime factor of n divides q-1 and 4 | n implies 4 | q-1.
/// Throws std::invalid_argument when q is not a prime power or n < 1.
bool validate_dickson_pair(std::uint64_t q, std::uint32_t n);

/// phi(n)/k with k the multiplicative order of p modulo n.
std::uint64_t count_dickson_nearfields(std::uint64_t q, std::uint32_t n);

/// Representatives (smallest in class, ascending) of the units mod n modulo
/// the subgroup generated by p; variant i of construct_nearfield uses entry i.
std::vector<std::uint32_t> variant_units(std::uint64_t q, std::uint32_t n);

/// A Dickson near-field on the additive group of GF(q^n):
/// a∘b = a^(q^j(b)) · b, where j(b) is fixed by the coset of b modulo the
/// subgroup of n-th powers. Immutable after construction.
class NearField {
 public:
  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  const DicksonPair& pair() const { return pair_; }
  std::uint32_t variant() const { return variant_; }
  std::uint32_t unit() const { return unit_; }
  std::uint32_t order() const { return field_->order(); }
  const VectorSpace& space() const { return field_->space(); }
  /// Coupling table: coset index c in [0, n) -> Frobenius exponent j.
  const std::vector<std::uint32_t>& coupling() const { return coupling_; }
  /// True when the coupling is constant zero, i.e. the multiplication is the
  /// field multiplication.
  bool is_field() const;

  FieldElement one() const { return 1; }
  FieldElement add(FieldElement x, FieldElement y) const { return field_->add(x, y); }
  FieldElement sub(FieldElement x, FieldElement y) const { return field_->sub(x, y); }

  /// a∘b. The Frobenius twist is selected by the right factor b.
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t mb = field_->log_table()[b];
    const std::uint32_t j = coupling_[coset_index_of_log(mb)];
    const std::uint64_t m = order() - 1;
    return field_->exp_table()[(static_cast<std::uint64_t>(field_->log_table()[a]) * qpow_[j] + mb) % m];
  }
  /// Frobenius exponent j with a∘x = a^(q^j)·x.
  std::uint32_t twist(FieldElement x) const;
  FieldElement inverse(FieldElement x) const;

  /// Near-field built from an arbitrary coupling, without validation; used to
  /// construct negative controls for the axiom checker.
  static NearField from_coupling(std::shared_ptr<const FiniteField> field, DicksonPair pair,
                                 std::vector<std::uint32_t> coupling, std::uint32_t unit = 1);

 private:
  friend NearField construct_nearfield(std::shared_ptr<const FiniteField>, std::uint64_t, std::uint32_t,
                                       std::uint32_t);
  NearField() = default;
  std::uint32_t coset_index_of_log(std::uint32_t m) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(m % pair_.n) * unit_inv_ % pair_.n);
  }
  void init_powers();

  std::shared_ptr<const FiniteField> field_;
  DicksonPair pair_;
  std::uint32_t variant_ = 0;
  std::uint32_t unit_ = 1;
  std::uint32_t unit_inv_ = 1;
  std::vector<std::uint32_t> coupling_;
  std::vector<std::uint64_t> qpow_;  // q^j mod (order-1)
};

/// Same, over an already built GF(q^n) (for instance one read from a cache).
NearField construct_nearfield(std::shared_ptr<const FiniteField> field, std::uint64_t q, std::uint32_t n,
                              std::uint32_t variant = 0);
NearField construct_nearfield(std::uint64_t q, std::uint32_t n, std::uint32_t variant = 0,
                              std::uint64_t bound = kDefaultFieldBound);

/// Symmetric spelling of NearField::mul: returns y∘x.
inline FieldElement nf_multiply(const NearField& nf, FieldElement x, FieldElement y) { return nf.mul(y, x); }

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::array<FieldElement, 3> witness{};
};

struct NearFieldAxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

inline constexpr std::uint32_t kAxiomCheckBound = 1u << 12;

/// Exhaustive check of right distributivity, associativity, identity,
/// inverses and the zero laws. Failing checks carry a witness triple.
NearFieldAxiomReport verify_nearfield_axioms(const NearField& nf, std::uint32_t bound = kAxiomCheckBound);

/// (K^×, ∘) with group index i standing for the point i+1.
struct MultGroup {
  FiniteGroup group;
  FieldElement point(std::uint32_t i) const { return i + 1; }
  std::uint32_t index(FieldElement x) const { return x - 1; }
};

MultGroup multiplicative_group(const NearField& nf);

/// Subgroups of K^× as sorted point lists, ordered by (order, lex).
std::vector<std::vector<FieldElement>> nearfield_subgroups(const NearField& nf);

/// Additive and multiplicative bijection a -> b, or nullopt.
std::optional<std::vector<FieldElement>> find_nearfield_isomorphism(const NearField& a, const NearField& b);

/// Class label per variant of (q, n) under near-field isomorphism.
std::vector<std::uint32_t> classify_variants(std::uint64_t q, std::uint32_t n);

/// CSV table: row log x, column log y, entry log(y∘x).
void export_multiplication_csv(const NearField& nf, std::ostream& out);

}  // namespace nfs
