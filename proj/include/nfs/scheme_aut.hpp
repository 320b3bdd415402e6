#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nfs/matrix_group.hpp"
#include "nfs/perm_group.hpp"
#include "nfs/scheme.hpp"

namespace nfs {

/// Aut(C) as T·Ḡ, with Ḡ the linear closure of the base group.
struct AutResult {
  bool trivial = false;               // rank 2: group is the Sym(V) marker
  std::optional<MatrixGroup> closure;  // Ḡ, absent for trivial schemes
  PermGroup group;
};

/// Throws logic_error if a generator fails to preserve the colors or the
/// order is not |V|·|Ḡ|.
AutResult aut_group(const CyclotomicScheme& cyc, std::uint64_t bound = kLinearSearchBound);

struct IsoResult {
  bool isomorphic = false;
  std::optional<Perm> witness;       // verified classwise
  std::optional<Matrix> conjugator;  // g with g^-1·Ḡ·g = Ḡ'
};

/// Conjugacy of the linear closures in GL(V). Trivial schemes are
/// isomorphic exactly when both are trivial.
IsoResult are_isomorphic(const CyclotomicScheme& a, const CyclotomicScheme& b,
                         std::uint64_t bound = kLinearSearchBound);

/// Every strong generator of the stabilizer of 0 is additive on V.
bool stabilizer_is_linear(const PermGroup& aut, const VectorSpace& space);
bool is_additive(const Perm& g, const VectorSpace& space);

/// Imprimitive: Aut is Frobenius with kernel T and equals Γ(K, 𝕂).
/// Primitive: T is the unique minimal normal subgroup when |Aut| <= bound,
/// otherwise only normality of T is checked.
struct StructureCheck {
  bool ok = false;
  bool full = false;  // false when only the weaker normality check ran
  std::string detail;
};
StructureCheck check_aut_structure(const CyclotomicScheme& cyc, const PermGroup& aut, bool primitive,
                                   std::uint64_t bound = kElementEnumerationBound);

}  // namespace nfs
