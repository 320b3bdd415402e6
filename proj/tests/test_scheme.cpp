#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "nfs/arith.hpp"
#include "nfs/nearfield.hpp"
#include "nfs/perm_group.hpp"
#include "nfs/scheme.hpp"

using namespace nfs;

namespace {

struct Case {
  std::uint64_t q;
  std::uint32_t n;
  std::uint32_t variant;
};

std::vector<Case> cases_up_to(std::uint64_t bound) {
  std::vector<Case> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (!prime_power(q)) continue;
    std::uint64_t qn = q;
    for (std::uint32_t n = 1; qn <= bound; ++n, qn *= q) {
      if (!validate_dickson_pair(q, n)) continue;
      for (std::uint32_t v = 0; v < count_dickson_nearfields(q, n); ++v) out.push_back({q, n, v});
    }
  }
  return out;
}

// p^t_{rs} counted directly at every pair of class t.
bool intersection_numbers_by_counting(const AssociationScheme& s, const IntersectionTensor& tensor) {
  for (std::uint32_t x = 0; x < s.n; ++x) {
    for (std::uint32_t y = 0; y < s.n; ++y) {
      std::vector<std::uint32_t> count(s.rank * s.rank, 0);
      for (std::uint32_t z = 0; z < s.n; ++z) ++count[s.color(x, z) * s.rank + s.color(z, y)];
      for (std::uint32_t r = 0; r < s.rank; ++r) {
        for (std::uint32_t t = 0; t < s.rank; ++t) {
          if (count[r * s.rank + t] != tensor(s.color(x, y), r, t)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("coloring equals the two-orbits of the affine group") {
  for (const auto& c : cases_up_to(81)) {
    const auto nf = construct_nearfield(c.q, c.n, c.variant);
    for (const auto& k : nearfield_subgroups(nf)) {
      const auto cyc = build_cyclotomic(nf, k);
      const auto orb = two_orbits(affine_group(nf, k));
      CAPTURE(c.q);
      CAPTURE(c.n);
      CAPTURE(k.size());
      REQUIRE(cyc.scheme.colors == orb.cls);
      CHECK(cyc.scheme.rank == 1 + (nf.order() - 1) / k.size());
      CHECK(cyc.valency == k.size());
      for (std::uint32_t cls = 1; cls < cyc.scheme.rank; ++cls) {
        std::uint32_t size = 0;
        for (std::uint32_t y = 0; y < nf.order(); ++y) size += cyc.scheme.color(0, y) == cls;
        CHECK(size == k.size());
        CHECK(cyc.scheme.color(0, cyc.coset_reps[cls - 1]) == cls);
      }
    }
  }
}

TEST_CASE("order-9 scheme with |K| = 4") {
  const auto nf = construct_nearfield(3, 2);
  const auto subs = nearfield_subgroups(nf);
  const auto& k = subs[2];
  REQUIRE(k.size() == 4);
  const auto cyc = build_cyclotomic(nf, k);
  CHECK(cyc.scheme.rank == 3);
  CHECK(cyc.valency == 4);
  CHECK_FALSE(cyc.is_trivial());
  const auto res = verify_scheme_axioms(cyc.scheme);
  REQUIRE(res.ok);
  CHECK(res.tensor(0, 1, 1) == 4);
  CHECK(intersection_numbers_by_counting(cyc.scheme, res.tensor));
  CHECK(is_primitive(cyc.scheme));
  CHECK(build_cyclotomic(nf, subs.back()).is_trivial());
}

TEST_CASE("axioms and intersection numbers up to 49") {
  for (const auto& c : cases_up_to(49)) {
    const auto nf = construct_nearfield(c.q, c.n, c.variant);
    for (const auto& k : nearfield_subgroups(nf)) {
      const auto cyc = build_cyclotomic(nf, k);
      const auto res = verify_scheme_axioms(cyc.scheme);
      REQUIRE(res.ok);
      CHECK(intersection_numbers_by_counting(cyc.scheme, res.tensor));
      // the transpose of R_a is R_{-a}
      for (std::uint32_t cls = 1; cls < cyc.scheme.rank; ++cls) {
        const auto a = cyc.coset_reps[cls - 1];
        CHECK(res.tensor.transpose[cls] == cyc.scheme.color(0, nf.space().neg(a)));
      }
    }
  }
}

TEST_CASE("perturbed colorings are rejected with a witness") {
  const auto nf = construct_nearfield(5, 2);
  const auto cyc = build_cyclotomic(nf, nearfield_subgroups(nf)[2]);
  auto bad = cyc.scheme;
  // swap the colors of one pair and its transpose
  const std::uint32_t x = 3, y = 17;
  std::swap(bad.colors[x * bad.n + y], bad.colors[y * bad.n + 2]);
  const auto res = verify_scheme_axioms(bad);
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness.has_value());
  auto diag = cyc.scheme;
  diag.colors[0] = 1;
  const auto d = verify_scheme_axioms(diag);
  CHECK_FALSE(d.ok);
  CHECK(d.witness->kind == "diagonal");
  CHECK_THROWS(verify_scheme_axioms(cyc.scheme, 10));
}

TEST_CASE("primitivity two ways and irreducibility of the base group") {
  for (const auto& c : cases_up_to(81)) {
    const auto nf = construct_nearfield(c.q, c.n, c.variant);
    for (const auto& k : nearfield_subgroups(nf)) {
      const auto cyc = build_cyclotomic(nf, k);
      const auto res = verify_scheme_axioms(cyc.scheme);
      const bool prim = is_primitive(cyc.scheme);
      if (cyc.scheme.rank <= kUnionEnumerationRankBound) CHECK(prim == is_primitive_by_unions(cyc.scheme, res.tensor));
      CHECK(prim == is_irreducible(base_group(nf, k)));
    }
  }
  // over a prime field every scheme is primitive
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const auto nf = construct_nearfield(p, 1);
    for (const auto& k : nearfield_subgroups(nf)) CHECK(is_primitive(build_cyclotomic(nf, k).scheme));
  }
  // GF(9) with K = GF(3)^x splits into lines
  const auto nf = construct_nearfield(9, 1);
  const auto sub2 = nearfield_subgroups(nf)[1];
  REQUIRE(sub2.size() == 2);
  CHECK_FALSE(is_primitive(build_cyclotomic(nf, sub2).scheme));
}

TEST_CASE("base group") {
  const auto nf = construct_nearfield(3, 2);
  for (const auto& k : nearfield_subgroups(nf)) {
    const auto g = base_group(nf, k);
    CHECK(g.order() == k.size());
    for (const auto& m : g.elements()) {
      const auto b = m.apply(nf.space(), 1);  // 1∘b = b
      CHECK(std::binary_search(k.begin(), k.end(), b));
      for (Point x = 0; x < 9; ++x) CHECK(m.apply(nf.space(), x) == nf.mul(x, b));
    }
  }
}

TEST_CASE("field reduction") {
  // fields reduce to themselves
  for (std::uint64_t q : {4, 8, 9, 25, 27}) {
    const auto nf = construct_nearfield(q, 1);
    for (const auto& k : nearfield_subgroups(nf)) {
      const auto cyc = build_cyclotomic(nf, k);
      const auto red = abelian_field_reduction(cyc);
      if (!is_primitive(cyc.scheme)) {
        CHECK(red.status == ReductionStatus::not_primitive);
        continue;
      }
      REQUIRE(red.status == ReductionStatus::ok);
      CHECK(red.colors_identical);
      CHECK(red.subgroup == std::vector<Point>(k.begin(), k.end()));
    }
  }
  // Q8 is not abelian; its cyclic subgroups of order 4 act irreducibly
  const auto nf = construct_nearfield(3, 2);
  const auto subs = nearfield_subgroups(nf);
  CHECK(abelian_field_reduction(build_cyclotomic(nf, subs.back())).status == ReductionStatus::not_abelian);
  for (const auto& k : subs) {
    const auto cyc = build_cyclotomic(nf, k);
    const auto red = abelian_field_reduction(cyc);
    if (red.status != ReductionStatus::ok) continue;
    CHECK(red.colors_identical);
    CHECK(red.subgroup.size() == k.size());
    CHECK(*red.scheme == cyc.scheme);
  }
  CHECK(std::string(to_string(ReductionStatus::span_not_field)) == "span not a field");
}

TEST_CASE("subgroup validation") {
  const auto nf = construct_nearfield(3, 2);
  CHECK_THROWS_AS(build_cyclotomic(nf, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(build_cyclotomic(nf, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_cyclotomic(nf, {}), std::invalid_argument);
  CHECK_NOTHROW(build_cyclotomic(nf, {1}));
}

TEST_CASE("scheme json") {
  const auto nf = construct_nearfield(3, 2);
  const auto cyc = build_cyclotomic(nf, nearfield_subgroups(nf)[2]);
  const auto res = verify_scheme_axioms(cyc.scheme);
  std::ostringstream out;
  write_scheme_json(cyc, res.tensor, out);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["N"] == 9);
  CHECK(j["rank"] == 3);
  CHECK(j["valency"] == 4);
  REQUIRE(j["colors"].size() == 81);  // row-major
  for (std::uint32_t i = 0; i < 81; ++i) CHECK(j["colors"][i] == cyc.scheme.colors[i]);
  CHECK(j["intersection_numbers"].size() == res.tensor.entries.size());
}
