#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nfs/perm.hpp"
#include "nfs/perm_group.hpp"
#include "nfs/scheme.hpp"

namespace nfs {

inline constexpr std::uint32_t kBacktrackDegreeBound = 169;
inline constexpr std::uint32_t kFullScanDegreeBound = 9;

/// g preserves every class: color(x, y) == color(g(x), g(y)).
bool preserves_colors(const AssociationScheme& scheme, const Perm& g);

/// f maps every class of `a` onto a class of `b` (colors may be renamed).
bool is_color_isomorphism(const AssociationScheme& a, const AssociationScheme& b, const Perm& f);

/// Color-preserving permutations, by scanning all of Sym(N). N <= 9.
std::vector<Perm> automorphisms_full_scan(const AssociationScheme& scheme);

/// All color isomorphisms a -> b, by scanning Sym(N). N <= 9.
std::vector<Perm> isomorphisms_full_scan(const AssociationScheme& a, const AssociationScheme& b);

/// The full color-automorphism group, by backtracking with candidate
/// refinement along a stabilizer chain based at 0. For N <= 9 the result is
/// also compared with the full scan (logic_error on disagreement). Rank-2
/// schemes return the symmetric group without searching.
PermGroup aut_bruteforce(const AssociationScheme& scheme);

/// A color isomorphism a -> b found by backtracking, or nullopt.
std::optional<Perm> find_color_isomorphism(const AssociationScheme& a, const AssociationScheme& b);

}  // namespace nfs
