#pragma once

#include <cstdint>
#include <vector>

namespace nfs {

/// A finite group given by an explicit Cayley table on 0..order-1.
class FiniteGroup {
 public:
  /// `table[a * order + b]` is the product a*b. Identity and inverses are
  /// always located; associativity is checked exhaustively when `verify`.
  FiniteGroup(std::uint32_t order, std::vector<std::uint32_t> table, bool verify = true);

  std::uint32_t order() const { return order_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t element_order(std::uint32_t a) const;
  bool is_abelian() const;

  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;
  bool is_subgroup(const std::vector<std::uint32_t>& elements) const;

  /// Cyclic group Z_n and direct constructions used as fixtures.
  static FiniteGroup cyclic(std::uint32_t n);
  /// Permutation group on {0..deg-1} given by its full element list.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& elements);

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

inline constexpr std::uint32_t kSubgroupEnumerationBound = 1u << 12;

/// All subgroups as sorted element lists, deduplicated and sorted by
/// (order, lexicographic element list). Built by closing joins of cyclic
/// subgroups until no new subgroup appears.
std::vector<std::vector<std::uint32_t>> enumerate_subgroups(const FiniteGroup& group,
                                                            std::uint32_t bound = kSubgroupEnumerationBound);

}  // namespace nfs
