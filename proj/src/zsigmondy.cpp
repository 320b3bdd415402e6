#include "nfs/zsigmondy.hpp"

#include <algorithm>
#include <stdexcept>

#include "nfs/arith.hpp"
#include "nfs/errors.hpp"
#include "nfs/field_on_v.hpp"

namespace nfs {

std::vector<std::uint64_t> zsigmondy_primes(std::uint64_t q, std::uint32_t n, std::uint64_t k) {
  if (q < 2 || n < 1) throw std::invalid_argument("zsigmondy_primes: need q >= 2, n >= 1");
  const std::uint64_t qn = checked_pow(q, n) - 1;
  std::vector<std::uint64_t> out;
  for (const auto& [r, e] : factorize(qn)) {
    (void)e;
    if (r <= k) continue;
    bool primitive = true;
    for (std::uint32_t i = 1; i < n && primitive; ++i) primitive = mod_pow(q % r, i, r) != 1;
    if (primitive) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division by a monic integer polynomial.
Poly divide_monic(Poly a, const Poly& d) {
  const std::size_t deg = d.size() - 1;
  Poly quot(a.size() - deg, 0);
  for (std::size_t i = a.size(); i-- > deg;) {
    const std::int64_t c = a[i];
    quot[i - deg] = c;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * d[j];
  }
  for (std::size_t i = 0; i < deg; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic: inexact division");
  }
  return quot;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyclotomic_poly_value: overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyclotomic_poly_value: overflow");
  return r;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly_coefficients(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly_coefficients: n = 0");
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    p = divide_monic(p, cyclotomic_poly_coefficients(static_cast<std::uint32_t>(d)));
  }
  return p;
}

i128 cyclotomic_poly_value(std::uint32_t n, std::int64_t alpha, std::int64_t beta) {
  const auto c = cyclotomic_poly_coefficients(n);
  const std::size_t deg = c.size() - 1;
  std::vector<i128> bpow(deg + 1, 1);
  for (std::size_t i = 1; i <= deg; ++i) bpow[i] = checked_mul(bpow[i - 1], beta);
  i128 acc = 0, apow = 1;
  for (std::size_t i = 0; i <= deg; ++i) {
    acc = checked_add(acc, checked_mul(checked_mul(c[i], apow), bpow[deg - i]));
    if (i < deg) apow = checked_mul(apow, alpha);
  }
  return acc;
}

std::uint64_t greatest_prime_factor(i128 x) {
  if (x < 0) x = -x;
  if (x <= 1) return 1;
  if (x > static_cast<i128>(~std::uint64_t{0})) throw OverflowError("greatest_prime_factor: beyond 64 bits");
  const auto f = factorize(static_cast<std::uint64_t>(x));
  return f.back().first;
}

std::uint32_t distinct_prime_count(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<std::uint32_t>(factorize(x).size());
}

std::optional<std::uint64_t> thm14_hypothesis(const CyclotomicScheme& cyc) {
  const auto& pr = cyc.nf.pair();
  const std::uint64_t m = cyc.valency;
  if (m >= cyc.nf.order() - 1) return std::nullopt;
  const std::uint32_t dn = pr.d * pr.n;
  for (auto r : zsigmondy_primes(pr.p, dn, 2ull * dn + 1)) {
    if (m % r == 0) return r;
  }
  return std::nullopt;
}

Thm14Check thm14_conclusion_check(const CyclotomicScheme& cyc, const PermGroup& aut) {
  Thm14Check out;
  const auto r = thm14_hypothesis(cyc);
  if (!r) return out;
  out.applicable = true;
  out.r = *r;
  out.primitive = is_primitive(cyc.scheme);

  const VectorSpace& space = cyc.nf.space();
  const MatrixGroup g = base_group(cyc.nf, cyc.subgroup);
  const Matrix id = Matrix::identity(space);
  std::optional<Matrix> c;
  for (const auto& m : g.elements()) {
    if (m != id && matrix_power(space, m, *r) == id) {
      c = m;
      break;
    }
  }
  if (!c) throw std::logic_error("thm14_conclusion_check: no element of order r in the base group");
  std::vector<Matrix> powers{id};
  for (std::uint64_t i = 1; i < *r; ++i) powers.push_back(multiply(space, powers.back(), *c));
  const auto field = FieldOnV::from_span(space, powers, 1);
  if (!field) throw std::logic_error("thm14_conclusion_check: L(<c>) is not a field");

  const PermGroup stab = aut.stabilizer(0);
  std::vector<Matrix> gens;
  for (const auto& s : stab.generators()) {
    if (s(0) != 0) throw std::logic_error("thm14_conclusion_check: stabilizer generator moves 0");
    gens.push_back(Matrix::from_linear_perm(space, s));
    if (gens.back().to_perm(space) != s) {
      out.semilinear = out.normalizes_singer = false;
      return out;  // not linear, so not in ΓL₁
    }
  }
  const MatrixGroup stab_m = MatrixGroup::generated_by(space, gens);
  out.semilinear = is_semilinear(stab_m, *field);
  out.normalizes_singer = nfs::normalizes_singer(stab_m, *field);
  return out;
}

}  // namespace nfs
