#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace nfs {

using u128 = unsigned __int128;

struct PrimePower {
  std::uint64_t p;
  std::uint32_t d;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization as ascending (prime, exponent) pairs. Trial division
/// for small factors, Pollard rho beyond.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// q = p^d with p prime, or nullopt.
std::optional<PrimePower> prime_power(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);

/// Order of a modulo n (gcd(a,n) = 1 required); 1 when n = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// base^exp, throwing OverflowError when the result exceeds `limit`.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp,
                          std::uint64_t limit = ~std::uint64_t{0});

/// Inverse of a modulo n, or nullopt if not a unit.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace nfs
