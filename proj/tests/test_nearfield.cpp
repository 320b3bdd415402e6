#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "nfs/arith.hpp"
#include "nfs/nearfield.hpp"
#include "oracles.hpp"

using namespace nfs;

namespace {

bool dickson_by_definition(std::uint64_t q, std::uint32_t n) {
  for (auto r : oracle::prime_factors(n)) {
    if ((q - 1) % r != 0) return false;
  }
  return n % 4 != 0 || (q - 1) % 4 == 0;
}

// y∘x from the defining formula with naive field arithmetic.
struct NaiveNearField {
  oracle::NaiveField f;
  std::uint64_t q;
  std::uint32_t n, u;
  std::uint32_t g = 0;
  std::vector<std::uint32_t> log;
  NaiveNearField(std::uint32_t p, std::uint32_t d, std::uint32_t n_, std::uint32_t unit)
      : f(p, d * n_), q(oracle::ipow(p, d)), n(n_), u(unit) {
    // lexicographically smallest element of full order, constant term first
    std::vector<std::uint32_t> by_key(f.size);
    for (std::uint32_t x = 0; x < f.size; ++x) {
      std::uint32_t key = 0, y = x;
      for (std::uint32_t i = 0; i < f.e; ++i) {
        key = key * p + y % p;
        y /= p;
      }
      by_key[key] = x;
    }
    for (auto x : by_key) {
      if (x != 0 && f.order(x) == f.size - 1) {
        g = x;
        break;
      }
    }
    log.assign(f.size, 0);
    std::uint32_t y = 1;
    for (std::uint32_t k = 0; k + 1 < f.size; ++k, y = f.mul(y, g)) log[y] = k;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {  // a∘b
    if (a == 0 || b == 0) return 0;
    std::uint64_t c = 0;  // coset index of b for generator g^u
    for (std::uint64_t k = 0; k < n; ++k) {
      if (k * u % n == log[b] % n) c = k;
    }
    for (std::uint32_t j = 0; j < n; ++j) {
      if ((oracle::ipow(q, j) - 1) / (q - 1) % n == c) return f.mul(f.pow(a, oracle::ipow(q, j)), b);
    }
    return ~0u;
  }
};

std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs_up_to(std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (!prime_power(q)) continue;
    std::uint64_t qn = q;
    for (std::uint32_t n = 1; qn <= bound; ++n, qn *= q) {
      if (dickson_by_definition(q, n)) out.push_back({q, n});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Dickson pair conditions") {
  CHECK(validate_dickson_pair(3, 2));
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 6}, {2, 4}, {4, 2}, {8, 2}}) {
    CHECK_FALSE(validate_dickson_pair(q, n));
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 27}) CHECK(validate_dickson_pair(q, 1));
  for (std::uint64_t q = 2; q < 60; ++q) {
    if (!prime_power(q)) {
      CHECK_THROWS(validate_dickson_pair(q, 2));
      continue;
    }
    for (std::uint32_t n = 1; n < 30; ++n) CHECK(validate_dickson_pair(q, n) == dickson_by_definition(q, n));
  }
}

TEST_CASE("count is phi(n)/k") {
  CHECK(count_dickson_nearfields(3, 2) == 1);
  CHECK(count_dickson_nearfields(5, 4) == 2);
  CHECK(count_dickson_nearfields(7, 3) == 2);
  CHECK(count_dickson_nearfields(11, 1) == 1);
  CHECK_THROWS(count_dickson_nearfields(2, 6));
  for (std::uint64_t q : {3, 5, 7, 9, 13, 25, 49}) {
    const auto p = prime_power(q)->p;
    for (std::uint32_t n = 2; n < 40; ++n) {
      if (!dickson_by_definition(q, n)) continue;
      CHECK(count_dickson_nearfields(q, n) == oracle::phi(n) / oracle::mult_order(p, n));
      CHECK(variant_units(q, n).size() == count_dickson_nearfields(q, n));
    }
  }
}

TEST_CASE("variant units are sorted smallest coset representatives") {
  const auto u = variant_units(7, 9);  // units mod 9 modulo <7> = {1,7,4}
  CHECK(u == std::vector<std::uint32_t>{1, 2});
  CHECK(variant_units(5, 4) == std::vector<std::uint32_t>{1, 3});
}

TEST_CASE("multiplication matches the defining formula") {
  for (auto [q, n] : pairs_up_to(125)) {
    const auto pp = *prime_power(q);
    const auto units = variant_units(q, n);
    for (std::uint32_t v = 0; v < units.size(); ++v) {
      const auto nf = construct_nearfield(q, n, v);
      const NaiveNearField ref(static_cast<std::uint32_t>(pp.p), pp.d, n, units[v]);
      CAPTURE(q);
      CAPTURE(n);
      CAPTURE(v);
      REQUIRE(nf.field().generator() == ref.g);
      for (FieldElement a = 0; a < nf.order(); ++a) {
        for (FieldElement b = 0; b < nf.order(); ++b) REQUIRE(nf.mul(a, b) == ref.mul(a, b));
      }
    }
  }
}

TEST_CASE("order-9 near-field") {
  const auto nf = construct_nearfield(3, 2);
  const auto& f = nf.field();
  // y∘x = y·x for even log x, y^3·x for odd log x
  for (FieldElement x = 1; x < 9; ++x) {
    for (FieldElement y = 0; y < 9; ++y) {
      const FieldElement expect = f.log(x) % 2 == 0 ? f.mul(y, x) : f.mul(f.pow(y, 3), x);
      CHECK(nf.mul(y, x) == expect);
    }
  }
  CHECK(nf_multiply(nf, 4, 2) == nf.mul(2, 4));
  // element orders: one involution, six of order 4
  std::map<std::uint32_t, std::uint32_t> orders;
  for (FieldElement x = 1; x < 9; ++x) {
    std::uint32_t k = 1;
    for (FieldElement y = x; y != 1; y = nf.mul(y, x)) ++k;
    ++orders[k];
  }
  CHECK(orders == std::map<std::uint32_t, std::uint32_t>{{1, 1}, {2, 1}, {4, 6}});
  bool noncommuting = false;
  for (FieldElement x = 1; x < 9; ++x) {
    for (FieldElement y = 1; y < 9; ++y) noncommuting |= nf.mul(x, y) != nf.mul(y, x);
  }
  CHECK(noncommuting);
  CHECK_FALSE(multiplicative_group(nf).group.is_abelian());
  CHECK(multiplicative_group(nf).group.order() == 8);
}

TEST_CASE("near-field axioms on every pair up to 125 and every variant") {
  for (auto [q, n] : pairs_up_to(125)) {
    for (std::uint32_t v = 0; v < count_dickson_nearfields(q, n); ++v) {
      const auto report = verify_nearfield_axioms(construct_nearfield(q, n, v));
      CAPTURE(q);
      CAPTURE(n);
      CHECK(report.all_passed());
      CHECK(report.find("right_distributivity") != nullptr);
    }
  }
}

TEST_CASE("axiom check catches a wrong coupling") {
  const auto nf = construct_nearfield(3, 2);
  const auto bad = NearField::from_coupling(nf.field_ptr(), nf.pair(), {1, 1});
  const auto report = verify_nearfield_axioms(bad);
  CHECK_FALSE(report.all_passed());
  CHECK_FALSE(report.find("identity")->passed);
  const auto swapped = NearField::from_coupling(nf.field_ptr(), nf.pair(), {1, 0});
  CHECK_FALSE(verify_nearfield_axioms(swapped).all_passed());
}

TEST_CASE("the n = 1 near-field is the field") {
  const auto nf = construct_nearfield(8, 1);
  CHECK(nf.is_field());
  for (FieldElement a = 0; a < 8; ++a) {
    for (FieldElement b = 0; b < 8; ++b) CHECK(nf.mul(a, b) == nf.field().mul(a, b));
  }
  CHECK_THROWS(construct_nearfield(3, 2, 1));
  CHECK_THROWS(construct_nearfield(6, 1));
}

TEST_CASE("inverses and twist") {
  for (auto [q, n] : pairs_up_to(81)) {
    const auto nf = construct_nearfield(q, n);
    for (FieldElement x = 1; x < nf.order(); ++x) {
      CHECK(nf.mul(nf.inverse(x), x) == 1);
      CHECK(nf.mul(x, nf.inverse(x)) == 1);
      CHECK(nf.twist(x) < n);
    }
  }
}

TEST_CASE("subgroups of Q8 by subset enumeration") {
  const auto nf = construct_nearfield(3, 2);
  std::set<std::vector<FieldElement>> brute;
  for (std::uint32_t mask = 1; mask < 256; ++mask) {
    std::vector<FieldElement> s;
    for (std::uint32_t i = 0; i < 8; ++i) {
      if (mask >> i & 1) s.push_back(i + 1);
    }
    bool closed = true;
    for (auto a : s) {
      for (auto b : s) closed = closed && std::binary_search(s.begin(), s.end(), nf.mul(a, b));
    }
    if (closed) brute.insert(s);
  }
  const auto subs = nearfield_subgroups(nf);
  CHECK(subs.size() == 6);
  CHECK(std::set<std::vector<FieldElement>>(subs.begin(), subs.end()) == brute);
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].size() <= subs[i].size());
}

TEST_CASE("subgroups of cyclic groups match divisors") {
  for (std::uint64_t q : {7, 13, 16, 31, 64}) {
    const auto nf = construct_nearfield(q, 1);
    const auto subs = nearfield_subgroups(nf);
    CHECK(subs.size() == divisors(q - 1).size());
  }
}

TEST_CASE("variant classification") {
  const auto l54 = classify_variants(5, 4);
  CHECK(l54 == std::vector<std::uint32_t>{0, 1});
  CHECK(classify_variants(7, 3) == std::vector<std::uint32_t>{0, 1});
  CHECK(classify_variants(3, 2) == std::vector<std::uint32_t>{0});
  // isomorphism maps are verified to be additive multiplicative bijections
  const auto a = construct_nearfield(7, 2);
  const auto iso = find_nearfield_isomorphism(a, a);
  REQUIRE(iso.has_value());
  std::set<FieldElement> image(iso->begin(), iso->end());
  CHECK(image.size() == 49);
  for (FieldElement x = 0; x < 49; ++x) {
    for (FieldElement y = 0; y < 49; ++y) {
      REQUIRE((*iso)[a.mul(x, y)] == a.mul((*iso)[x], (*iso)[y]));
      REQUIRE((*iso)[a.space().add(x, y)] == a.space().add((*iso)[x], (*iso)[y]));
    }
  }
  CHECK_FALSE(find_nearfield_isomorphism(construct_nearfield(5, 4, 0), construct_nearfield(5, 4, 1)));
}

TEST_CASE("multiplication table export") {
  std::ostringstream out;
  export_multiplication_csv(construct_nearfield(3, 2), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "log_x,0,1,2,3,4,5,6,7");
  std::getline(in, line);
  CHECK(line == "0,0,1,2,3,4,5,6,7");  // x = 1
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
}
