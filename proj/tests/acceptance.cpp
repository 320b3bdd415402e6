// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "nfs/arith.hpp"
#include "nfs/backtrack.hpp"
#include "nfs/census.hpp"
#include "nfs/nearfield.hpp"
#include "nfs/scheme.hpp"
#include "nfs/scheme_aut.hpp"
#include "nfs/zsigmondy.hpp"
#include "oracles.hpp"

using namespace nfs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs_with_order(const std::function<bool(std::uint64_t)>& keep,
                                                                       std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (const auto& p : dickson_pairs_up_to(bound)) {
    if (keep(oracle::ipow(p.q, p.n))) out.push_back({p.q, p.n});
  }
  return out;
}

// Every scheme over every near-field variant with the given orders.
void for_each_scheme(const std::function<bool(std::uint64_t)>& keep, std::uint64_t bound,
                     const std::function<void(const CyclotomicScheme&)>& visit) {
  for (auto [q, n] : pairs_with_order(keep, bound)) {
    for (std::uint32_t v = 0; v < count_dickson_nearfields(q, n); ++v) {
      const auto nf = construct_nearfield(q, n, v);
      for (const auto& k : nearfield_subgroups(nf)) visit(build_cyclotomic(nf, k));
    }
  }
}

std::string label(const CyclotomicScheme& c) {
  std::ostringstream s;
  s << "q=" << c.nf.pair().q << " n=" << c.nf.pair().n << " variant=" << c.nf.variant() << " |K|=" << c.subgroup.size();
  return s.str();
}

Outcome nearfield_axioms() {
  Outcome o;
  std::size_t count = 0;
  for (auto [q, n] : pairs_with_order([](std::uint64_t) { return true; }, 343)) {
    for (std::uint32_t v = 0; v < count_dickson_nearfields(q, n); ++v) {
      const auto report = verify_nearfield_axioms(construct_nearfield(q, n, v));
      ++count;
      if (!report.all_passed()) o.fail("axioms fail at q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " near-fields";
  return o;
}

Outcome class_counts() {
  Outcome o;
  std::ostringstream d;
  for (auto [q, n] : pairs_with_order([](std::uint64_t N) { return N == 9 || N == 25 || N == 49 || N == 121 || N == 625; },
                                      625)) {
    const auto labels = classify_variants(q, n);
    const std::uint32_t classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    const auto p = prime_power(q)->p;
    const auto expect = oracle::phi(n) / oracle::mult_order(p, n);
    d << "(" << q << "," << n << "):" << classes << " ";
    if (classes != expect) o.fail("class count mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n));
  }
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome q8_structure() {
  Outcome o;
  const auto nf = construct_nearfield(3, 2);
  std::map<std::uint32_t, std::uint32_t> orders;
  for (FieldElement x = 1; x < 9; ++x) {
    std::uint32_t k = 1;
    for (FieldElement y = x; y != 1; y = nf.mul(y, x)) ++k;
    ++orders[k];
  }
  if (orders != std::map<std::uint32_t, std::uint32_t>{{1, 1}, {2, 1}, {4, 6}}) o.fail("element orders differ from Q8");
  bool noncommuting = false;
  for (FieldElement x = 1; x < 9; ++x) {
    for (FieldElement y = 1; y < 9; ++y) noncommuting |= nf.mul(x, y) != nf.mul(y, x);
  }
  if (!noncommuting) o.fail("multiplication is commutative");
  if (o.ok) o.detail = "1 involution, 6 elements of order 4, nonabelian";
  return o;
}

Outcome scheme_axioms() {
  Outcome o;
  std::size_t count = 0;
  for_each_scheme([](std::uint64_t N) { return N <= 121; }, 121, [&](const CyclotomicScheme& c) {
    ++count;
    if (!verify_scheme_axioms(c.scheme).ok) o.fail("axioms fail at " + label(c));
  });
  if (o.ok) o.detail = std::to_string(count) + " schemes";
  return o;
}

Outcome primitivity() {
  Outcome o;
  std::size_t count = 0, primitive = 0;
  for_each_scheme([](std::uint64_t N) { return N <= 121; }, 121, [&](const CyclotomicScheme& c) {
    ++count;
    const bool prim = is_primitive(c.scheme);
    primitive += prim;
    if (prim != is_irreducible(base_group(c.nf, c.subgroup))) o.fail("mismatch at " + label(c));
    if (c.scheme.rank <= kUnionEnumerationRankBound &&
        prim != is_primitive_by_unions(c.scheme, verify_scheme_axioms(c.scheme).tensor)) {
      o.fail("union enumeration disagrees at " + label(c));
    }
  });
  if (o.ok) o.detail = std::to_string(count) + " schemes, " + std::to_string(primitive) + " primitive";
  return o;
}

Outcome agl_containment() {
  Outcome o;
  std::size_t count = 0;
  for_each_scheme([](std::uint64_t N) { return N == 9; }, 9, [&](const CyclotomicScheme& c) {
    if (c.is_trivial()) return;
    ++count;
    for (const auto& g : automorphisms_full_scan(c.scheme)) {
      if (g(0) == 0 && !is_additive(g, c.nf.space())) o.fail("nonlinear automorphism at " + label(c));
    }
  });
  for_each_scheme([](std::uint64_t N) { return N == 25 || N == 49 || N == 121 || N == 169; }, 169,
                  [&](const CyclotomicScheme& c) {
                    if (c.is_trivial()) return;
                    ++count;
                    if (!stabilizer_is_linear(aut_bruteforce(c.scheme), c.nf.space())) {
                      o.fail("nonlinear stabilizer at " + label(c));
                    }
                  });
  if (o.ok) o.detail = std::to_string(count) + " nontrivial schemes";
  return o;
}

Outcome aut_equals_oracle() {
  Outcome o;
  std::size_t count = 0;
  for_each_scheme([](std::uint64_t N) { return N <= 121; }, 121, [&](const CyclotomicScheme& c) {
    if (c.is_trivial()) return;
    ++count;
    if (!(aut_group(c).group == aut_bruteforce(c.scheme))) o.fail("groups differ at " + label(c));
  });
  if (o.ok) o.detail = std::to_string(count) + " nontrivial schemes";
  return o;
}

Outcome aut_structure() {
  Outcome o;
  std::size_t full = 0, skipped = 0;
  for_each_scheme([](std::uint64_t N) { return N <= 121; }, 121, [&](const CyclotomicScheme& c) {
    if (c.is_trivial()) return;
    const auto aut = aut_group(c);
    if (aut.group.order() > 1'000'000) {
      ++skipped;
      return;
    }
    const auto res = check_aut_structure(c, aut.group, is_primitive(c.scheme), 1'000'000);
    if (!res.ok || !res.full) o.fail("structure check fails at " + label(c) + ": " + res.detail);
    ++full;
  });
  if (o.ok) o.detail = std::to_string(full) + " checked, " + std::to_string(skipped) + " above 10^6";
  return o;
}

Outcome field_reduction() {
  Outcome o;
  std::size_t reduced = 0, nonabelian = 0;
  for_each_scheme([](std::uint64_t N) { return N <= 121; }, 121, [&](const CyclotomicScheme& c) {
    if (!is_primitive(c.scheme)) return;
    const auto red = abelian_field_reduction(c);
    if (red.status == ReductionStatus::not_abelian) {
      ++nonabelian;
      return;
    }
    if (red.status != ReductionStatus::ok || !red.colors_identical) {
      o.fail(std::string(to_string(red.status)) + " at " + label(c));
      return;
    }
    ++reduced;
  });
  if (o.ok) o.detail = std::to_string(reduced) + " reduced, " + std::to_string(nonabelian) + " nonabelian skipped";
  return o;
}

Outcome order_169() {
  Outcome o;
  std::size_t count = 0;
  for (std::uint32_t v = 0; v < count_dickson_nearfields(13, 2); ++v) {
    const auto nf = construct_nearfield(13, 2, v);
    for (const auto& k : nearfield_subgroups(nf)) {
      if (k.size() % 7 != 0 || k.size() >= 168) continue;
      const auto cyc = build_cyclotomic(nf, k);
      const auto oracle_aut = aut_bruteforce(cyc.scheme);
      const auto res = thm14_conclusion_check(cyc, oracle_aut);
      ++count;
      if (!res.applicable || !res.primitive || !res.semilinear || !res.normalizes_singer) {
        o.fail("conclusion fails at " + label(cyc));
      }
      if (!is_primitive(cyc.scheme)) o.fail("imprimitive at " + label(cyc));
    }
  }
  if (count == 0) o.fail("no subgroups with 7 | |K|");
  if (o.ok) o.detail = std::to_string(count) + " subgroups";
  return o;
}

Outcome zsigmondy_suite() {
  Outcome o;
  std::size_t count = 0, exceptions = 0;
  for (std::uint64_t q = 2; q <= (1u << 16); ++q) {
    const auto pp = prime_power(q);
    if (!pp) continue;
    for (std::uint32_t n = 1; oracle::ipow(q, n) <= (1u << 16); ++n) {
      ++count;
      const auto z = zsigmondy_primes(q, n);
      const std::uint64_t q1 = q + 1;
      const bool exception = (q == 2 && n == 6) || (n == 2 && (q1 & (q1 - 1)) == 0) || (q == 2 && n == 1);
      exceptions += z.empty();
      const std::string at = " at q=" + std::to_string(q) + " n=" + std::to_string(n);
      if (z.empty() != exception) o.fail("existence mismatch" + at);
      const auto phi = cyclotomic_poly_value(n, static_cast<std::int64_t>(q), 1);
      if ((static_cast<i128>(oracle::ipow(q, n)) - 1) % phi != 0) o.fail("Phi_n(q) does not divide q^n - 1" + at);
      for (auto r : z) {
        if ((r - 1) % n != 0) o.fail("r not 1 mod n" + at);
        if (oracle::mult_order(q % r, r) != n) o.fail("order of q mod r is not n" + at);
        if (phi % r != 0) o.fail("r does not divide Phi_n(q)" + at);
      }
      // P[Phi_dn(p)] is the largest Zsigmondy prime of (p, dn) unless it is at most dn
      if (pp->d == 1 && !z.empty() && greatest_prime_factor(phi) != z.back() && greatest_prime_factor(phi) > n) {
        o.fail("greatest prime factor of Phi_n(p) is not a Zsigmondy prime" + at);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " pairs, " + std::to_string(exceptions) + " exceptions";
  return o;
}

Outcome census_determinism() {
  Outcome o;
  CensusOptions opt;
  opt.max_order = 121;
  std::ostringstream a, b;
  const auto first = run_census(opt);
  write_report_json(first, a);
  write_report_json(run_census(opt), b);
  if (a.str() != b.str()) o.fail("reports differ");
  if (first.summary.failures != 0 || first.summary.errors != 0) {
    o.fail(std::to_string(first.summary.failures) + " failures, " + std::to_string(first.summary.errors) + " errors");
  }
  if (o.ok) o.detail = std::to_string(first.summary.records) + " records, " + std::to_string(a.str().size()) + " bytes";
  return o;
}

// If r = (N-1)/m is prime and r^2 does not divide N-1, the subgroups of order
// m are Hall subgroups, so all of them give isomorphic schemes.
Outcome hall_conjugacy() {
  Outcome o;
  std::size_t families = 0;
  for (auto [q, n] : pairs_with_order([](std::uint64_t N) { return N == 9 || N == 25 || N == 121; }, 121)) {
    for (std::uint32_t v = 0; v < count_dickson_nearfields(q, n); ++v) {
      const auto nf = construct_nearfield(q, n, v);
      const auto subs = nearfield_subgroups(nf);
      const std::uint64_t units = nf.order() - 1;
      for (auto m : divisors(units)) {
        const auto r = units / m;
        if (!oracle::is_prime(r) || units % (r * r) == 0) continue;
        std::vector<CyclotomicScheme> same;
        for (const auto& k : subs) {
          if (k.size() == m) same.push_back(build_cyclotomic(nf, k));
        }
        ++families;
        for (std::size_t i = 1; i < same.size(); ++i) {
          if (!are_isomorphic(same[0], same[i]).isomorphic) o.fail("non-isomorphic Hall schemes at " + label(same[i]));
          if (!same[0].is_trivial() && !find_color_isomorphism(same[0].scheme, same[i].scheme)) {
            o.fail("oracle finds no isomorphism at " + label(same[i]));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(families) + " subgroup families";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no target
  };
  const std::vector<Criterion> criteria = {
      {"criterion 1 near-field axioms, q^n <= 343", nearfield_axioms, 10},
      {"criterion 2 isomorphism classes = phi(n)/k at 9, 25, 49, 121, 625", class_counts, 60},
      {"criterion 3 order-9 multiplicative group is Q8", q8_structure, 0},
      {"criterion 4 scheme axioms, q^n <= 121", scheme_axioms, 30},
      {"criterion 5 primitive iff base group irreducible, q^n <= 121", primitivity, 0},
      {"criterion 6 Aut fixing 0 is linear at 9, 25, 49, 121, 169", agl_containment, 600},
      {"criterion 7 Aut = T.closure equals oracle, q^n <= 121", aut_equals_oracle, 0},
      {"criterion 8 Frobenius / socle structure, |Aut| <= 10^6", aut_structure, 0},
      {"criterion 9 abelian base group reduces to a field scheme, q^n <= 121", field_reduction, 0},
      {"criterion 10 order 169, 7 | |K| < 168: primitive and semilinear", order_169, 900},
      {"criterion 11 Zsigmondy suite, q^n <= 2^16", zsigmondy_suite, 60},
      {"criterion 12 census at 121 is deterministic with zero failures", census_determinism, 0},
      {"property Hall subgroups give isomorphic schemes at 9, 25, 121", hall_conjugacy, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, target " + std::to_string(c.limit_seconds) + " s");
    }
    std::printf("[%s] %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
