#include "nfs/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "nfs/arith.hpp"
#include "nfs/errors.hpp"

namespace nfs {

namespace poly {

namespace {
void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
}  // namespace

Poly rem(Poly a, const Poly& monic_divisor, std::uint32_t p) {
  trim(a);
  const std::size_t dd = monic_divisor.size() - 1;
  while (a.size() > dd) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * monic_divisor[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& monic_mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return rem(std::move(r), monic_mod, p);
}

bool is_irreducible(const Poly& monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg <= 1) return deg == 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(k + 1);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        divisor[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      divisor[k] = 1;
      if (rem(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

std::uint64_t lex_key(const VectorSpace& space, Point x) {
  std::uint64_t key = 0;
  for (std::uint32_t i = 0; i < space.dim(); ++i) key = key * space.prime() + space.digit(x, i);
  return key;
}

namespace {

Point point_from_lex_key(const VectorSpace& space, std::uint64_t key) {
  std::vector<std::uint32_t> d(space.dim());
  for (std::uint32_t i = space.dim(); i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(key % space.prime());
    key /= space.prime();
  }
  return space.from_digits(d);
}

poly::Poly to_poly(const VectorSpace& space, Point x) {
  poly::Poly a = space.digits(x);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Point from_poly(const VectorSpace& space, const poly::Poly& a) {
  std::vector<std::uint32_t> d(space.dim(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i];
  return space.from_digits(d);
}

}  // namespace

FiniteField make_field(std::uint32_t p, std::uint32_t e, std::uint64_t bound) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("make_field: degree must be at least 1");
  std::uint64_t order;
  try {
    order = checked_pow(p, e, bound);
  } catch (const OverflowError&) {
    throw BoundExceeded("make_field: " + std::to_string(p) + "^" + std::to_string(e) +
                        " exceeds bound " + std::to_string(bound));
  }

  FiniteField f;
  f.space_ = VectorSpace(p, e);
  const VectorSpace& space = f.space_;

  poly::Poly mod;
  for (std::uint64_t key = 0; key < order; ++key) {
    Point c = point_from_lex_key(space, key);
    mod = space.digits(c);
    mod.push_back(1);
    if (poly::is_irreducible(mod, p)) break;
    mod.clear();
  }
  if (mod.empty()) throw std::logic_error("make_field: no irreducible polynomial found");
  f.modulus_.assign(mod.begin(), mod.end() - 1);

  // Primitive element: smallest lex key whose order is exactly order-1.
  const std::uint64_t group_order = order - 1;
  const auto primes = distinct_prime_factors(group_order);
  auto poly_pow = [&](poly::Poly base, std::uint64_t k) {
    poly::Poly result{1};
    while (k > 0) {
      if (k & 1) result = poly::mul_mod(result, base, mod, p);
      base = poly::mul_mod(base, base, mod, p);
      k >>= 1;
    }
    return result;
  };
  Point g = 0;
  for (std::uint64_t key = 1; key < order; ++key) {
    Point c = point_from_lex_key(space, key);
    if (c == 0) continue;
    poly::Poly a = to_poly(space, c);
    bool primitive = true;
    for (std::uint64_t r : primes) {
      if (poly_pow(a, group_order / r) == poly::Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (g == 0) throw std::logic_error("make_field: no primitive element found");

  f.exp_.resize(group_order);
  f.log_.assign(order, 0);
  poly::Poly gp = to_poly(space, g);
  poly::Poly cur{1};
  for (std::uint64_t k = 0; k < group_order; ++k) {
    Point x = from_poly(space, cur);
    f.exp_[k] = x;
    f.log_[x] = static_cast<std::uint32_t>(k);
    cur = poly::mul_mod(cur, gp, mod, p);
  }
  f.pdeg_.resize(e);
  for (std::uint32_t i = 0; i < e; ++i) f.pdeg_[i] = group_order == 1 ? 0 : mod_pow(p, i, group_order);
  f.validate();
  return f;
}

void FiniteField::validate() const {
  const std::uint32_t n = order();
  poly::Poly mod(modulus_.begin(), modulus_.end());
  mod.push_back(1);
  if (modulus_.size() != degree() || !poly::is_irreducible(mod, characteristic())) {
    throw std::invalid_argument("FiniteField: modulus is not irreducible of the right degree");
  }
  if (exp_.size() != n - 1) throw std::invalid_argument("FiniteField: exp table has wrong size");
  std::vector<bool> seen(n, false);
  for (FieldElement x : exp_) {
    if (x == 0 || x >= n || seen[x]) throw std::invalid_argument("FiniteField: exp table is not a bijection");
    seen[x] = true;
  }
  if (exp_[0] != 1) throw std::invalid_argument("FiniteField: exp table must start at 1");
  // g^(k+1) = g^k * g must hold in the polynomial representation.
  if (n > 2) {
    poly::Poly gp = to_poly(space_, exp_[1]);
    for (std::size_t k = 0; k < exp_.size(); ++k) {
      poly::Poly next = poly::mul_mod(to_poly(space_, exp_[k]), gp, mod, characteristic());
      if (from_poly(space_, next) != exp_[(k + 1) % exp_.size()]) {
        throw std::invalid_argument("FiniteField: exp table inconsistent with modulus");
      }
    }
  }
}

FiniteField FiniteField::from_tables(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus,
                                     std::vector<FieldElement> exp_table) {
  if (!is_prime(p) || e < 1) throw std::invalid_argument("FiniteField::from_tables: bad parameters");
  FiniteField f;
  f.space_ = VectorSpace(p, e);
  f.modulus_ = std::move(modulus);
  f.exp_ = std::move(exp_table);
  f.validate();
  f.log_.assign(f.order(), 0);
  for (std::size_t k = 0; k < f.exp_.size(); ++k) f.log_[f.exp_[k]] = static_cast<std::uint32_t>(k);
  const std::uint64_t group_order = f.order() - 1;
  f.pdeg_.resize(e);
  for (std::uint32_t i = 0; i < e; ++i) f.pdeg_[i] = group_order == 1 ? 0 : mod_pow(p, i, group_order);
  return f;
}

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const {
  if (x == 0 || y == 0) return 0;
  std::uint32_t s = log_[x] + log_[y];
  const std::uint32_t m = order() - 1;
  if (s >= m) s -= m;
  return exp_[s];
}

FieldElement FiniteField::inv(FieldElement x) const {
  if (x == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  const std::uint32_t m = order() - 1;
  return exp_[(m - log_[x]) % m];
}

FieldElement FiniteField::pow(FieldElement x, std::uint64_t k) const {
  if (x == 0) return k == 0 ? 1 : 0;
  const std::uint64_t m = order() - 1;
  return exp_[static_cast<std::uint64_t>(static_cast<u128>(log_[x]) * (k % m) % m)];
}

std::uint32_t FiniteField::log(FieldElement x) const {
  if (x == 0 || x >= order()) throw std::domain_error("FiniteField::log: argument must be a nonzero element");
  return log_[x];
}

FieldElement FiniteField::frobenius(FieldElement x, std::uint64_t j, std::uint32_t d) const {
  if (d == 0 || degree() % d != 0) {
    throw std::invalid_argument("frobenius: subfield degree " + std::to_string(d) + " does not divide " +
                                std::to_string(degree()));
  }
  if (x == 0) return 0;
  const std::uint64_t m = order() - 1;
  const std::uint64_t k = (j % (degree() / d)) * d;  // power of p, reduced mod e
  return exp_[static_cast<std::uint64_t>(static_cast<u128>(log_[x]) * pdeg_[k % degree()] % m)];
}

FieldElement FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != degree()) throw std::invalid_argument("from_coeffs: wrong length");
  for (auto v : c) {
    if (v >= characteristic()) throw std::invalid_argument("from_coeffs: coefficient out of range");
  }
  return space_.from_digits(c);
}

FieldElement primitive_element(const FiniteField& field) { return field.generator(); }

std::uint32_t discrete_log(const FiniteField& field, FieldElement x) { return field.log(x); }

FieldElement frobenius(const FiniteField& field, FieldElement x, std::uint64_t j, std::uint32_t d) {
  return field.frobenius(x, j, d);
}

}  // namespace nfs
