#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nfs/errors.hpp"
#include "nfs/nearfield.hpp"
#include "nfs/perm_group.hpp"
#include "oracles.hpp"

using namespace nfs;

namespace {

Perm random_perm(std::mt19937& rng, std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

Perm cycle(std::uint32_t n, std::vector<std::uint32_t> c) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (std::size_t i = 0; i < c.size(); ++i) v[c[i]] = c[(i + 1) % c.size()];
  return Perm(v);
}

std::set<std::vector<std::uint32_t>> closure_of(const std::vector<Perm>& gens, std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> g;
  for (const auto& p : gens) g.push_back(p.images());
  return oracle::perm_closure(g, n);
}

}  // namespace

TEST_CASE("perm basics") {
  const Perm a({1, 2, 0, 3});
  const Perm b({0, 1, 3, 2});
  CHECK((a * b)(2) == b(a(2)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);
  CHECK(a.fixed_point_count() == 1);
  CHECK_THROWS(Perm({0, 0, 1}));
  CHECK_THROWS(Perm({0, 3}));
}

TEST_CASE("orders match closure on random groups") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t n = 3 + trial % 6;
    std::vector<Perm> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      // mix in small-support elements so that proper subgroups show up
      gens.push_back(trial % 2 ? random_perm(rng, n) : cycle(n, {0, static_cast<std::uint32_t>(1 + i % (n - 1))}));
    }
    const PermGroup g(n, gens);
    const auto ref = closure_of(gens, n);
    CAPTURE(trial);
    REQUIRE(g.order() == ref.size());
    const auto elems = g.elements();
    CHECK(elems.size() == ref.size());
    for (const auto& e : elems) CHECK(ref.count(e.images()) == 1);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (std::uint64_t i = 0; i < g.order(); ++i) {
      const auto e = g.element_at(i);
      REQUIRE(g.element_index(e) == i);
    }
    // non-members
    for (int t = 0; t < 10; ++t) {
      const auto r = random_perm(rng, n);
      CHECK(g.contains(r) == (ref.count(r.images()) == 1));
      CHECK(g.element_index(r).has_value() == g.contains(r));
    }
  }
}

TEST_CASE("symmetric and alternating groups") {
  for (std::uint32_t n = 3; n <= 9; ++n) {
    const PermGroup s(n, {cycle(n, {0, 1}), [&] {
                            std::vector<std::uint32_t> c(n);
                            std::iota(c.begin(), c.end(), 0u);
                            return cycle(n, c);
                          }()});
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i <= n; ++i) fact *= i;
    CHECK(s.order() == fact);
    CHECK(s == PermGroup::symmetric(n));
    CHECK(PermGroup::symmetric(n).order() == fact);
    std::vector<Perm> three;
    for (std::uint32_t i = 2; i < n; ++i) three.push_back(cycle(n, {0, 1, i}));
    CHECK(PermGroup(n, three).order() == fact / 2);
    CHECK(s.contains_group(PermGroup(n, three)));
  }
  CHECK(PermGroup::symmetric(30).order_string() == "265252859812191058636308480000000");
  CHECK_THROWS_AS(PermGroup::symmetric(30).order(), OverflowError);
}

TEST_CASE("base prefix and stabilizers") {
  const std::uint32_t n = 7;
  const PermGroup g(n, {cycle(n, {0, 1, 2, 3, 4, 5, 6}), cycle(n, {1, 2, 4}) * cycle(n, {3, 6, 5})});
  CHECK(g.order() == 21);
  const PermGroup h(n, g.generators(), {3});
  CHECK(h.base().front() == 3);
  CHECK(h == g);
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto st = g.stabilizer(x);
    CHECK(st.order() == 3);
    for (const auto& e : st.elements()) CHECK(e(x) == x);
  }
  CHECK(g.is_transitive());
  CHECK(g.orbits().size() == 1);
  const PermGroup split(6, {cycle(6, {0, 1}), cycle(6, {2, 3, 4})});
  CHECK(split.orbits() == std::vector<std::vector<std::uint32_t>>{{0, 1}, {2, 3, 4}, {5}});
  CHECK_THROWS(PermGroup(5, {cycle(6, {0, 1})}));
}

TEST_CASE("two-orbits of the affine group of a near-field") {
  const auto nf = construct_nearfield(3, 2);
  const auto subs = nearfield_subgroups(nf);
  for (const auto& k : subs) {
    const auto g = affine_group(nf, k);
    CHECK(g.order() == 9 * k.size());
    const auto t = two_orbits(g);
    CHECK(t.count == 1 + 8 / k.size());
    // classes numbered by lexicographically first pair
    std::uint32_t next = 0;
    for (std::uint32_t x = 0; x < 9; ++x) {
      for (std::uint32_t y = 0; y < 9; ++y) {
        if (t.of(x, y) == next) ++next;
        CHECK(t.of(x, y) < next);
      }
    }
    CHECK(t.of(0, 0) == 0);
  }
  CHECK(two_orbits(affine_group(nf, subs[2])).count == 3);  // |K| = 4
}

TEST_CASE("translations and Frobenius groups") {
  const VectorSpace v(3, 2);
  const auto t = translation_group(v);
  CHECK(t.order() == 9);
  for (auto q : {3ull, 5ull, 7ull}) {
    const auto nf = construct_nearfield(q, 2);
    for (const auto& k : nearfield_subgroups(nf)) {
      if (k.size() == 1) continue;
      const auto g = affine_group(nf, k);
      const auto fr = is_frobenius(g);
      REQUIRE(fr.is_frobenius);
      CHECK(*fr.kernel == translation_group(nf.space()));
      CHECK(is_normal_subgroup(g, *fr.kernel));
    }
  }
  CHECK_FALSE(is_frobenius(PermGroup::symmetric(4)).is_frobenius);
  CHECK(is_frobenius(PermGroup(5, {cycle(5, {0, 1, 2, 3, 4}), Perm({0, 4, 3, 2, 1})})).is_frobenius);
}

TEST_CASE("minimal normal subgroups") {
  // T·K with K fixed-point-free: minimal normal subgroups are the K-invariant
  // lines, or T itself when there is none
  const auto nf = construct_nearfield(5, 2);
  const auto& v = nf.space();
  const auto t = translation_group(v);
  for (const auto& k : nearfield_subgroups(nf)) {
    if (k.size() == 1) continue;
    std::uint32_t lines = 0;
    for (std::uint32_t x = 1; x < 25; ++x) {
      bool smallest = true, invariant = true;
      std::set<std::uint32_t> line;
      for (std::uint32_t c = 1; c < 5; ++c) {
        smallest = smallest && v.scale(c, x) >= x;
        line.insert(v.scale(c, x));
      }
      for (auto b : k) invariant = invariant && line.count(nf.mul(x, b));
      lines += smallest && invariant;
    }
    const auto mins = minimal_normal_subgroups(affine_group(nf, k));
    CAPTURE(k.size());
    CHECK(mins.size() == (lines == 0 ? 1 : lines));
    for (const auto& m : mins) CHECK(t.contains_group(m));
    if (lines == 0) CHECK(mins[0] == t);
  }
  // S4: V4 is the unique minimal normal subgroup
  const auto s4 = PermGroup::symmetric(4);
  const auto m4 = minimal_normal_subgroups(PermGroup(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}));
  REQUIRE(m4.size() == 1);
  CHECK(m4[0].order() == 4);
  (void)s4;
  // C2 x C2 acting on 4 points: three minimal normal subgroups
  const auto v4 = PermGroup(4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  const auto m = minimal_normal_subgroups(v4);
  CHECK(m.size() == 3);
  for (const auto& s : m) CHECK(s.order() == 2);
  // cross-check normality by brute force
  const auto g = PermGroup(6, {cycle(6, {0, 1, 2}), cycle(6, {0, 1}), cycle(6, {3, 4, 5})});
  for (const auto& s : minimal_normal_subgroups(g)) {
    for (const auto& x : g.elements()) {
      for (const auto& y : s.generators()) CHECK(s.contains(x.inverse() * y * x));
    }
  }
}

TEST_CASE("normal closure") {
  const auto s4 = PermGroup(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  CHECK(normal_closure(s4, {cycle(4, {0, 1, 2})}).order() == 12);
  CHECK(normal_closure(s4, {Perm({1, 0, 3, 2})}).order() == 4);
  CHECK(normal_closure(s4, {cycle(4, {0, 1})}).order() == 24);
  CHECK_FALSE(is_normal_subgroup(s4, PermGroup(4, {cycle(4, {0, 1})})));
}
