#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nfs/field_on_v.hpp"
#include "nfs/matrix_group.hpp"
#include "nfs/nearfield.hpp"

namespace nfs {

/// Colored complete digraph on N points. Class 0 is the diagonal.
struct AssociationScheme {
  std::uint32_t n = 0;
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> colors;  // row-major N×N

  std::uint32_t color(std::uint32_t x, std::uint32_t y) const {
    return colors[static_cast<std::size_t>(x) * n + y];
  }
  bool operator==(const AssociationScheme& o) const { return n == o.n && rank == o.rank && colors == o.colors; }
};

/// Cyc(K, 𝕂): (x, y) in R_a iff y - x in a∘K. Classes are numbered by the
/// smallest element of their coset, which is also their lex-first pair (0, a).
struct CyclotomicScheme {
  NearField nf;
  std::vector<FieldElement> subgroup;  // sorted
  AssociationScheme scheme;
  std::uint32_t valency = 0;
  std::vector<FieldElement> coset_reps;  // coset_reps[c - 1] represents class c

  bool is_trivial() const { return scheme.rank == 2; }
};

/// Throws invalid_argument unless K is a subgroup of 𝕂^×.
CyclotomicScheme build_cyclotomic(const NearField& nf, std::vector<FieldElement> subgroup);

/// Difference-coset coloring for a multiplication `act(a, k)` = a·k on V with
/// subgroup K. Used for both near-field and field-on-V schemes.
AssociationScheme cyclotomic_coloring(const VectorSpace& space, const std::function<Point(Point, Point)>& act,
                                      const std::vector<Point>& subgroup, std::vector<Point>* coset_reps = nullptr);

/// Nonzero intersection numbers p^t_{rs}, sorted by (t, r, s).
struct IntersectionTensor {
  std::uint32_t rank = 0;
  std::vector<std::uint32_t> transpose;  // class of the transposed relation
  std::vector<std::array<std::uint32_t, 4>> entries;  // (t, r, s, value)
  std::uint32_t operator()(std::uint32_t t, std::uint32_t r, std::uint32_t s) const;
};

struct SchemeViolation {
  std::string kind;  // diagonal, range, empty_class, transpose, intersection
  std::uint32_t u = 0, w = 0;
  std::uint32_t r = 0, s = 0;
  std::uint32_t expected = 0, found = 0;
};

struct SchemeAxiomResult {
  bool ok = false;
  IntersectionTensor tensor;
  std::optional<SchemeViolation> witness;
};

inline constexpr std::uint32_t kSchemeAxiomBound = 1u << 10;

/// Cubic scan: every class triple, every pair of each class.
SchemeAxiomResult verify_scheme_axioms(const AssociationScheme& scheme, std::uint32_t bound = kSchemeAxiomBound);

/// Every nonzero class graph is connected.
bool is_primitive(const AssociationScheme& scheme);

inline constexpr std::uint32_t kUnionEnumerationRankBound = 16;

/// No union of classes containing class 0, other than Δ and V², is an
/// equivalence relation. Enumerates all unions; needs rank <= 16.
bool is_primitive_by_unions(const AssociationScheme& scheme, const IntersectionTensor& tensor);

/// Matrices of x -> x∘b over the prime field, b in K.
MatrixGroup base_group(const NearField& nf, const std::vector<FieldElement>& subgroup);

enum class ReductionStatus { ok, not_primitive, not_abelian, span_not_field };
const char* to_string(ReductionStatus s);

struct FieldReduction {
  ReductionStatus status = ReductionStatus::not_primitive;
  std::optional<FieldOnV> field;
  std::vector<Point> subgroup;  // K' in field^×, sorted
  std::optional<AssociationScheme> scheme;
  bool colors_identical = false;
};

/// Field L(G) spanned by an abelian base group, and the scheme Cyc(K', L(G))
/// transported to V through f -> u·f with u = 1.
FieldReduction abelian_field_reduction(const CyclotomicScheme& cyc);

/// JSON with N, rank, valency, colors and the intersection tensor.
void write_scheme_json(const CyclotomicScheme& cyc, const IntersectionTensor& tensor, std::ostream& out);

}  // namespace nfs
