#include "nfs/nearfield.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "nfs/arith.hpp"
#include "nfs/errors.hpp"

namespace nfs {

namespace {

PrimePower require_prime_power(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

}  // namespace

bool validate_dickson_pair(std::uint64_t q, std::uint32_t n) {
  require_prime_power(q);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n == 1) return true;
  for (auto r : distinct_prime_factors(n)) {
    if ((q - 1) % r != 0) return false;
  }
  if (n % 4 == 0 && (q - 1) % 4 != 0) return false;
  return true;
}

std::vector<std::uint32_t> variant_units(std::uint64_t q, std::uint32_t n) {
  const auto pp = require_prime_power(q);
  if (n == 1) return {1};
  std::vector<char> covered(n, 0);
  std::vector<std::uint32_t> reps;
  const std::uint64_t p = pp.p % n;
  for (std::uint32_t u = 1; u < n; ++u) {
    if (covered[u] || std::gcd<std::uint64_t>(u, n) != 1) continue;
    reps.push_back(u);
    std::uint64_t v = u;
    do {
      covered[v] = 1;
      v = v * p % n;
    } while (v != u);
  }
  return reps;
}

std::uint64_t count_dickson_nearfields(std::uint64_t q, std::uint32_t n) {
  if (!validate_dickson_pair(q, n)) {
    throw std::invalid_argument("(" + std::to_string(q) + ", " + std::to_string(n) + ") is not a Dickson pair");
  }
  if (n == 1) return 1;
  const auto pp = require_prime_power(q);
  return euler_phi(n) / multiplicative_order(pp.p, n);
}

bool NearField::is_field() const {
  return std::all_of(coupling_.begin(), coupling_.end(), [](std::uint32_t j) { return j == 0; });
}

std::uint32_t NearField::twist(FieldElement x) const {
  if (x == 0) return 0;
  return coupling_[coset_index_of_log(field_->log_table()[x])];
}

FieldElement NearField::inverse(FieldElement x) const {
  if (x == 0) throw std::domain_error("NearField::inverse: zero");
  // y^(q^j)·x = 1  =>  y = (x^-1)^(q^(n-j))
  const std::uint32_t j = twist(x);
  const FieldElement xi = field_->inv(x);
  return field_->frobenius(xi, (pair_.n - j) % pair_.n, pair_.d);
}

void NearField::init_powers() {
  const std::uint64_t m = order() - 1;
  qpow_.resize(pair_.n);
  for (std::uint32_t j = 0; j < pair_.n; ++j) qpow_[j] = m == 1 ? 0 : mod_pow(pair_.q, j, m);
  auto inv = mod_inverse(unit_, pair_.n);
  if (!inv) throw std::invalid_argument("NearField: variant unit is not invertible mod n");
  unit_inv_ = static_cast<std::uint32_t>(*inv % pair_.n);
  if (pair_.n == 1) unit_inv_ = 0;
}

NearField NearField::from_coupling(std::shared_ptr<const FiniteField> field, DicksonPair pair,
                                   std::vector<std::uint32_t> coupling, std::uint32_t unit) {
  if (coupling.size() != pair.n) throw std::invalid_argument("from_coupling: coupling size must equal n");
  NearField nf;
  nf.field_ = std::move(field);
  nf.pair_ = pair;
  nf.unit_ = unit;
  nf.coupling_ = std::move(coupling);
  nf.init_powers();
  return nf;
}

NearField construct_nearfield(std::uint64_t q, std::uint32_t n, std::uint32_t variant, std::uint64_t bound) {
  const auto pp = require_prime_power(q);
  if (!validate_dickson_pair(q, n)) {
    throw std::invalid_argument("(" + std::to_string(q) + ", " + std::to_string(n) + ") is not a Dickson pair");
  }
  return construct_nearfield(
      std::make_shared<const FiniteField>(make_field(static_cast<std::uint32_t>(pp.p), pp.d * n, bound)), q, n, variant);
}

NearField construct_nearfield(std::shared_ptr<const FiniteField> field, std::uint64_t q, std::uint32_t n,
                              std::uint32_t variant) {
  const auto pp = require_prime_power(q);
  if (!validate_dickson_pair(q, n)) {
    throw std::invalid_argument("(" + std::to_string(q) + ", " + std::to_string(n) + ") is not a Dickson pair");
  }
  const auto units = variant_units(q, n);
  if (variant >= units.size()) {
    throw std::invalid_argument("variant " + std::to_string(variant) + " out of range; pair has " +
                                std::to_string(units.size()));
  }
  NearField nf;
  nf.pair_ = DicksonPair{q, n, static_cast<std::uint32_t>(pp.p), pp.d};
  if (!field || field->characteristic() != pp.p || field->degree() != pp.d * n) {
    throw std::invalid_argument("construct_nearfield: field is not GF(q^n)");
  }
  nf.field_ = std::move(field);
  if ((nf.order() - 1) % n != 0) throw std::logic_error("construct_nearfield: n does not divide q^n - 1");
  nf.variant_ = variant;
  nf.unit_ = units[variant];

  // coupling[(q^j - 1)/(q - 1) mod n] = j
  nf.coupling_.assign(n, n);
  std::uint64_t c = 0;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (nf.coupling_[c] != n) throw std::logic_error("construct_nearfield: coupling residues collide");
    nf.coupling_[c] = j;
    c = (c * (q % n) + 1) % n;
  }
  nf.init_powers();
  return nf;
}

bool NearFieldAxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* NearFieldAxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

NearFieldAxiomReport verify_nearfield_axioms(const NearField& nf, std::uint32_t bound) {
  const std::uint32_t n = nf.order();
  if (n > bound) throw BoundExceeded("verify_nearfield_axioms: order " + std::to_string(n) + " exceeds bound");
  const VectorSpace& space = nf.space();

  std::vector<FieldElement> table(static_cast<std::size_t>(n) * n);
  for (FieldElement a = 0; a < n; ++a) {
    for (FieldElement b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = nf.mul(a, b);
  }
  auto mul = [&](FieldElement a, FieldElement b) { return table[static_cast<std::size_t>(a) * n + b]; };
  std::vector<FieldElement> sum(static_cast<std::size_t>(n) * n);
  for (FieldElement a = 0; a < n; ++a) {
    for (FieldElement b = 0; b < n; ++b) sum[static_cast<std::size_t>(a) * n + b] = space.add(a, b);
  }
  auto add = [&](FieldElement a, FieldElement b) { return sum[static_cast<std::size_t>(a) * n + b]; };

  NearFieldAxiomReport report;

  AxiomCheck distrib{"right_distributivity"};
  for (FieldElement z = 0; z < n && distrib.passed; ++z) {
    for (FieldElement x = 0; x < n && distrib.passed; ++x) {
      const FieldElement xz = mul(x, z);
      for (FieldElement y = 0; y < n; ++y) {
        if (mul(add(x, y), z) != add(xz, mul(y, z))) {
          distrib = {"right_distributivity", false, {x, y, z}};
          break;
        }
      }
    }
  }
  report.checks.push_back(distrib);

  AxiomCheck assoc{"associativity"};
  for (FieldElement a = 1; a < n && assoc.passed; ++a) {
    for (FieldElement b = 1; b < n && assoc.passed; ++b) {
      const FieldElement ab = mul(a, b);
      for (FieldElement c = 1; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          assoc = {"associativity", false, {a, b, c}};
          break;
        }
      }
    }
  }
  report.checks.push_back(assoc);

  AxiomCheck identity{"identity", false, {0, 0, 0}};
  FieldElement e = 0;
  for (FieldElement cand = 1; cand < n && !identity.passed; ++cand) {
    bool ok = true;
    for (FieldElement x = 1; x < n && ok; ++x) ok = mul(cand, x) == x && mul(x, cand) == x;
    if (ok) {
      identity.passed = true;
      e = cand;
    }
  }
  report.checks.push_back(identity);

  AxiomCheck inverses{"inverses"};
  if (!identity.passed) {
    inverses.passed = false;
  } else {
    for (FieldElement x = 1; x < n && inverses.passed; ++x) {
      bool found = false;
      for (FieldElement y = 1; y < n && !found; ++y) found = mul(x, y) == e && mul(y, x) == e;
      if (!found) inverses = {"inverses", false, {x, 0, 0}};
    }
  }
  report.checks.push_back(inverses);

  AxiomCheck zero{"zero_laws"};
  for (FieldElement x = 0; x < n; ++x) {
    if (mul(x, 0) != 0 || mul(0, x) != 0) {
      zero = {"zero_laws", false, {x, 0, 0}};
      break;
    }
  }
  report.checks.push_back(zero);
  return report;
}

MultGroup multiplicative_group(const NearField& nf) {
  const std::uint32_t m = nf.order() - 1;
  if (m > kSubgroupEnumerationBound) {
    throw BoundExceeded("multiplicative_group: order " + std::to_string(m) + " exceeds Cayley table bound");
  }
  std::vector<std::uint32_t> table(static_cast<std::size_t>(m) * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = nf.mul(a + 1, b + 1) - 1;
  }
  // Associativity is the near-field axiom checker's job.
  return MultGroup{FiniteGroup(m, std::move(table), false)};
}

std::vector<std::vector<FieldElement>> nearfield_subgroups(const NearField& nf) {
  const MultGroup mg = multiplicative_group(nf);
  auto subs = enumerate_subgroups(mg.group);
  for (auto& s : subs) {
    for (auto& x : s) x = mg.point(x);
  }
  return subs;
}

namespace {

std::vector<std::uint32_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint32_t> orders(g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) orders[a] = g.element_order(a);
  return orders;
}

}  // namespace

std::optional<std::vector<FieldElement>> find_nearfield_isomorphism(const NearField& a, const NearField& b) {
  if (a.order() != b.order() || a.field().characteristic() != b.field().characteristic()) return std::nullopt;
  const std::uint32_t n = a.order();
  const MultGroup ga = multiplicative_group(a);
  const MultGroup gb = multiplicative_group(b);
  const auto oa = element_orders(ga.group);
  const auto ob = element_orders(gb.group);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Greedy generating set of A^×, largest order first.
  std::vector<std::uint32_t> by_order(ga.group.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](auto x, auto y) { return oa[x] > oa[y]; });
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> span{ga.group.identity()};
  for (std::uint32_t x : by_order) {
    if (span.size() == ga.group.order()) break;
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = ga.group.closure(gens);
  }

  std::vector<std::vector<std::uint32_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::uint32_t y = 0; y < gb.group.order(); ++y) {
      if (ob[y] == oa[gens[i]]) candidates[i].push_back(y);
    }
  }

  const VectorSpace& space = a.space();
  std::vector<std::uint32_t> images(gens.size());
  std::vector<std::uint32_t> hom(ga.group.order());
  std::vector<char> assigned(ga.group.order());
  std::vector<char> used(gb.group.order());
  std::vector<std::uint32_t> queue;

  // Extends the generator images to a homomorphism of the multiplicative
  // groups and tests bijectivity and additivity.
  auto try_images = [&]() -> std::optional<std::vector<FieldElement>> {
    std::fill(assigned.begin(), assigned.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    queue.assign(1, ga.group.identity());
    hom[ga.group.identity()] = gb.group.identity();
    assigned[ga.group.identity()] = 1;
    used[gb.group.identity()] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::uint32_t x = queue[qi];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::uint32_t xg = ga.group.mul(x, gens[i]);
        const std::uint32_t img = gb.group.mul(hom[x], images[i]);
        if (assigned[xg]) {
          if (hom[xg] != img) return std::nullopt;
        } else {
          if (used[img]) return std::nullopt;
          assigned[xg] = 1;
          used[img] = 1;
          hom[xg] = img;
          queue.push_back(xg);
        }
      }
    }
    std::vector<FieldElement> f(n, 0);
    for (std::uint32_t x = 0; x < ga.group.order(); ++x) f[ga.point(x)] = gb.point(hom[x]);
    for (FieldElement x = 1; x < n; ++x) {
      for (FieldElement y = x; y < n; ++y) {
        if (f[space.add(x, y)] != b.space().add(f[x], f[y])) return std::nullopt;
      }
    }
    return f;
  };

  std::optional<std::vector<FieldElement>> result;
  auto search = [&](auto&& self, std::size_t level) -> bool {
    if (level == gens.size()) {
      result = try_images();
      return result.has_value();
    }
    for (std::uint32_t y : candidates[level]) {
      images[level] = y;
      if (self(self, level + 1)) return true;
    }
    return false;
  };
  search(search, 0);
  return result;
}

std::vector<std::uint32_t> classify_variants(std::uint64_t q, std::uint32_t n) {
  const auto count = variant_units(q, n).size();
  std::vector<NearField> variants;
  for (std::uint32_t v = 0; v < count; ++v) variants.push_back(construct_nearfield(q, n, v));
  std::vector<std::uint32_t> label(count);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < count; ++i) {
    label[i] = next;
    for (std::size_t j = 0; j < i; ++j) {
      if (find_nearfield_isomorphism(variants[j], variants[i])) {
        label[i] = label[j];
        break;
      }
    }
    if (label[i] == next) ++next;
  }
  return label;
}

void export_multiplication_csv(const NearField& nf, std::ostream& out) {
  const std::uint32_t m = nf.order() - 1;
  const FiniteField& f = nf.field();
  out << "log_x";
  for (std::uint32_t ly = 0; ly < m; ++ly) out << ',' << ly;
  out << '\n';
  for (std::uint32_t lx = 0; lx < m; ++lx) {
    out << lx;
    const FieldElement x = f.exp(lx);
    for (std::uint32_t ly = 0; ly < m; ++ly) out << ',' << f.log(nf.mul(f.exp(ly), x));
    out << '\n';
  }
}

}  // namespace nfs
