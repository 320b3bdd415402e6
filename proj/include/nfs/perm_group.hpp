#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfs/nearfield.hpp"
#include "nfs/perm.hpp"

namespace nfs {

inline constexpr std::uint64_t kElementEnumerationBound = 1'000'000;

/// Permutation group given by generators, backed by a deterministic
/// Schreier-Sims stabilizer chain. Full symmetric groups are represented by a
/// marker without a chain.
class PermGroup {
 public:
  /// Throws on degree mismatch.
  PermGroup(std::uint32_t degree, std::vector<Perm> generators);
  /// Same group, with a chain whose base starts with `base_prefix`.
  PermGroup(std::uint32_t degree, std::vector<Perm> generators, std::vector<std::uint32_t> base_prefix);
  static PermGroup symmetric(std::uint32_t degree);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool is_symmetric_marker() const { return symmetric_; }

  /// Throws OverflowError if the order does not fit in 64 bits.
  std::uint64_t order() const;
  std::string order_string() const;
  bool contains(const Perm& g) const;
  bool contains_group(const PermGroup& other) const;
  bool operator==(const PermGroup& other) const;

  /// All elements, sorted. Throws BoundExceeded above `bound`.
  std::vector<Perm> elements(std::uint64_t bound = kElementEnumerationBound) const;

  std::vector<std::vector<std::uint32_t>> orbits() const;
  bool is_transitive() const;
  const std::vector<std::uint32_t>& base() const { return base_; }
  std::vector<std::uint32_t> basic_orbit_lengths() const;
  /// Mixed-radix index of a member in [0, order), or nullopt for non-members.
  std::optional<std::uint64_t> element_index(const Perm& g) const;
  /// Inverse of element_index.
  Perm element_at(std::uint64_t index) const;
  /// Strong generators fixing the first `level` base points.
  std::vector<Perm> stabilizer_generators(std::size_t level) const;

  /// Subgroup fixing `point`, read off the chain when `point` is the first
  /// base point, otherwise via a rebuilt chain.
  PermGroup stabilizer(std::uint32_t point) const;

 private:
  struct Level {
    std::uint32_t base_point;
    std::vector<std::int32_t> orbit_pos;  // -1 if not in orbit
    std::vector<std::uint32_t> orbit;
    std::vector<Perm> transversal;         // maps base_point to orbit[i]
  };
  void build_chain();
  std::vector<const Perm*> level_gens(std::size_t level) const;
  void compute_orbit(std::size_t level);
  /// Returns residue and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t start) const;

  std::uint32_t degree_;
  std::vector<Perm> gens_;
  bool symmetric_ = false;
  std::vector<Perm> strong_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
};

PermGroup group_from_generators(std::uint32_t degree, std::vector<Perm> generators);

/// Orbit partition of the coordinatewise action on V×V. `cls[x*N + y]` is the
/// class index; classes are numbered by their lexicographically first pair.
struct TwoOrbits {
  std::uint32_t degree = 0;
  std::uint32_t count = 0;
  std::vector<std::uint32_t> cls;
  std::uint32_t of(std::uint32_t x, std::uint32_t y) const { return cls[static_cast<std::size_t>(x) * degree + y]; }
};

TwoOrbits two_orbits(const PermGroup& group);

/// Γ(K, 𝕂) = { x -> x∘b + c : b in K, c in 𝕂 } on the points of 𝕂.
PermGroup affine_group(const NearField& nf, const std::vector<FieldElement>& subgroup);

/// Translation group of V.
PermGroup translation_group(const VectorSpace& space);

/// Minimal normal subgroups, by full element enumeration. Each is the normal
/// closure of a conjugacy class; the minimal ones among those are returned,
/// sorted by (order, element list).
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group,
                                                std::uint64_t bound = kElementEnumerationBound);

struct FrobeniusResult {
  bool is_frobenius = false;
  std::optional<PermGroup> kernel;
};

inline constexpr std::uint32_t kFrobeniusDegreeBound = 1u << 12;

/// Frobenius test for a transitive group: only the identity fixes two points.
/// The kernel (identity plus fixed-point-free elements) is verified to be a
/// normal subgroup of order equal to the degree.
FrobeniusResult is_frobenius(const PermGroup& group);

/// Subgroup generated by the conjugates of `elements` under `group`.
PermGroup normal_closure(const PermGroup& group, const std::vector<Perm>& elements);

bool is_normal_subgroup(const PermGroup& group, const PermGroup& sub);

}  // namespace nfs
