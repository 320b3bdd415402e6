#include "nfs/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "nfs/errors.hpp"

namespace nfs {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, std::uint32_t>> result;
  for (std::uint64_t p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  std::uint64_t order = euler_phi(n);
  for (auto [p, e] : factorize(order)) {
    for (std::uint32_t i = 0; i < e && order % p == 0 && mod_pow(a, order / p, n) == 1; ++i) {
      order /= p;
    }
  }
  return order;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  u128 acc = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) throw OverflowError("checked_pow: result exceeds limit");
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = n, new_r = a % n;
  while (new_r != 0) {
    __int128 quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += n;
  return static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t current = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nfs
