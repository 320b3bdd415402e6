#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nfs/perm_group.hpp"
#include "nfs/scheme.hpp"

namespace nfs {

using i128 = __int128;

/// Primes r > k dividing q^n - 1 but no q^i - 1 with 1 <= i < n, ascending.
/// Throws OverflowError when q^n - 1 does not fit in 64 bits.
std::vector<std::uint64_t> zsigmondy_primes(std::uint64_t q, std::uint32_t n, std::uint64_t k = 0);

/// Integer coefficients of Φ_n, constant term first.
std::vector<std::int64_t> cyclotomic_poly_coefficients(std::uint32_t n);

/// Φ_n(α, β) = β^φ(n)·Φ_n(α/β). Throws OverflowError outside 128 bits.
i128 cyclotomic_poly_value(std::uint32_t n, std::int64_t alpha, std::int64_t beta);

/// P[x]: greatest prime factor of |x|; 1 for |x| <= 1.
std::uint64_t greatest_prime_factor(i128 x);

/// D(x): number of distinct prime factors.
std::uint32_t distinct_prime_count(std::uint64_t x);

/// Smallest prime r dividing the valency m with r in Z_{2dn+1}(p, dn), for a
/// nontrivial scheme over a near-field with parameters (p, d, n).
std::optional<std::uint64_t> thm14_hypothesis(const CyclotomicScheme& cyc);

struct Thm14Check {
  bool applicable = false;
  std::uint64_t r = 0;
  bool primitive = false;
  bool semilinear = false;       // Aut_0 ≤ ΓL₁(L(⟨c⟩)), checked elementwise
  bool normalizes_singer = false;  // same via the normalizer form
  bool ok() const { return !applicable || (primitive && semilinear && normalizes_singer); }
};

/// With c of order r in the base group, builds the field L(⟨c⟩) on V and
/// tests that the stabilizer of 0 in `aut` lies in ΓL₁ of that field.
/// `aut` must fix 0 only through linear maps.
Thm14Check thm14_conclusion_check(const CyclotomicScheme& cyc, const PermGroup& aut);

}  // namespace nfs
