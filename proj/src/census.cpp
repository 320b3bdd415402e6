#include "nfs/census.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "nfs/arith.hpp"
#include "nfs/backtrack.hpp"
#include "nfs/cache.hpp"
#include "nfs/scheme.hpp"
#include "nfs/scheme_aut.hpp"
#include "nfs/zsigmondy.hpp"

namespace nfs {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"nearfield", "axioms",    "primitivity", "aut",      "oracle",
                                              "structure", "agl",       "semilinear",  "reduction"};
  return names;
}

Check parse_check(const std::string& name) {
  const auto& names = check_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<Check>(i);
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

const char* to_string(Check c) { return check_names()[static_cast<std::size_t>(c)].c_str(); }

namespace {

bool needs_aut_bound(Check c) {
  return c == Check::aut || c == Check::oracle || c == Check::structure || c == Check::agl || c == Check::semilinear;
}

std::set<Check> effective_checks(const CensusOptions& o) {
  if (!o.checks.empty()) return o.checks;
  std::set<Check> all;
  for (std::size_t i = 0; i < check_names().size(); ++i) all.insert(static_cast<Check>(i));
  return all;
}

}  // namespace

void validate_options(const CensusOptions& options) {
  if (options.max_order < 2) throw std::invalid_argument("--max-order must be at least 2");
  if (options.max_order > kCensusArithmeticOrderBound) {
    throw std::invalid_argument("--max-order is limited to " + std::to_string(kCensusArithmeticOrderBound));
  }
  if (options.max_order > kCensusAutOrderBound) {
    for (auto c : effective_checks(options)) {
      if (needs_aut_bound(c)) {
        throw std::invalid_argument(std::string("check '") + to_string(c) + "' needs --max-order <= " +
                                    std::to_string(kCensusAutOrderBound));
      }
    }
  }
}

std::uint32_t CensusRecord::failure_count() const {
  std::uint32_t f = error.empty() ? 0 : 1;
  for (const auto* flag : {&aut_equals_TGbar, &frobenius_or_socle_ok, &agl_containment_ok, &thm14_ok,
                           &field_reducible, &scheme_axioms_ok, &primitive_matches_irreducible, &nearfield_axioms_ok}) {
    if (flag->has_value() && !**flag) ++f;
  }
  return f;
}

std::vector<DicksonPair> dickson_pairs_up_to(std::uint64_t max_order) {
  std::vector<DicksonPair> out;
  for (std::uint64_t q = 2; q <= max_order; ++q) {
    const auto pp = prime_power(q);
    if (!pp) continue;
    std::uint64_t qn = q;
    for (std::uint32_t n = 1; qn <= max_order; ++n) {
      if (validate_dickson_pair(q, n)) out.push_back({q, n, static_cast<std::uint32_t>(pp->p), pp->d});
      if (qn > max_order / q) break;
      qn *= q;
    }
  }
  return out;
}

namespace {

void fill_record(CensusRecord& rec, const CyclotomicScheme& cyc, const std::set<Check>& checks) {
  auto has = [&](Check c) { return checks.count(c) > 0; };
  const VectorSpace& space = cyc.nf.space();
  const bool trivial = cyc.is_trivial();

  if (has(Check::axioms)) {
    const auto res = verify_scheme_axioms(cyc.scheme);
    rec.scheme_axioms_ok = res.ok && static_cast<std::uint64_t>(rec.rank - 1) * rec.valency == cyc.nf.order() - 1;
  }
  const bool primitive = is_primitive(cyc.scheme);
  rec.primitive = primitive;
  if (has(Check::primitivity)) {
    bool agree = primitive == is_irreducible(base_group(cyc.nf, cyc.subgroup));
    if (cyc.scheme.rank <= kUnionEnumerationRankBound) {
      const auto res = verify_scheme_axioms(cyc.scheme);
      agree = agree && res.ok && is_primitive_by_unions(cyc.scheme, res.tensor) == primitive;
    }
    rec.primitive_matches_irreducible = agree;
  }

  std::optional<AutResult> aut;
  if (has(Check::aut) || has(Check::oracle) || has(Check::structure) || has(Check::semilinear)) {
    aut = aut_group(cyc);
    rec.aut_order = aut->group.order_string();
  }
  std::optional<PermGroup> oracle;
  if ((has(Check::oracle) || has(Check::agl)) && !trivial) oracle = aut_bruteforce(cyc.scheme);
  if (has(Check::oracle) && !trivial) rec.aut_equals_TGbar = aut->group == *oracle;
  if (has(Check::agl) && !trivial) rec.agl_containment_ok = stabilizer_is_linear(*oracle, space);
  if (has(Check::structure) && !trivial) {
    rec.frobenius_or_socle_ok = check_aut_structure(cyc, aut->group, primitive).ok;
  }
  if (has(Check::semilinear)) {
    const auto hyp = thm14_hypothesis(cyc);
    rec.thm14_applicable = hyp.has_value();
    if (hyp) rec.thm14_ok = thm14_conclusion_check(cyc, oracle ? *oracle : aut->group).ok();
  }
  if (has(Check::reduction)) {
    const auto red = abelian_field_reduction(cyc);
    if (red.status == ReductionStatus::ok) {
      rec.field_reducible = red.colors_identical;
    } else if (red.status == ReductionStatus::span_not_field) {
      rec.field_reducible = false;
    }
  }
}

}  // namespace

CensusReport run_census(const CensusOptions& options) {
  validate_options(options);
  const auto checks = effective_checks(options);
  CensusReport report;
  report.summary.max_order = options.max_order;
  for (auto c : checks) report.summary.checks.push_back(to_string(c));

  for (const auto& pair : dickson_pairs_up_to(options.max_order)) {
    const auto count = count_dickson_nearfields(pair.q, pair.n);
    std::shared_ptr<const FiniteField> field;
    if (options.cache_dir) {
      bool hit = false;
      field = std::make_shared<const FiniteField>(load_or_build_field(*options.cache_dir, pair.p, pair.d * pair.n, &hit));
      if (hit) ++report.summary.cache_hits;
    } else {
      field = std::make_shared<const FiniteField>(make_field(pair.p, pair.d * pair.n));
    }
    for (std::uint32_t v = 0; v < count; ++v) {
      const NearField nf = construct_nearfield(field, pair.q, pair.n, v);
      std::optional<bool> nf_ok;
      if (checks.count(Check::nearfield)) nf_ok = verify_nearfield_axioms(nf).all_passed();
      const auto subgroups = nearfield_subgroups(nf);
      for (std::uint32_t s = 0; s < subgroups.size(); ++s) {
        CensusRecord rec;
        rec.q = pair.q;
        rec.n = pair.n;
        rec.d = pair.d;
        rec.p = pair.p;
        rec.variant = v;
        rec.subgroup_index = s;
        rec.subgroup_order = static_cast<std::uint32_t>(subgroups[s].size());
        rec.nearfield_axioms_ok = nf_ok;
        try {
          const auto cyc = build_cyclotomic(nf, subgroups[s]);
          rec.rank = cyc.scheme.rank;
          rec.valency = cyc.valency;
          fill_record(rec, cyc, checks);
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
        report.summary.failures += rec.failure_count();
        if (!rec.error.empty()) ++report.summary.errors;
        report.records.push_back(std::move(rec));
      }
    }
  }
  report.summary.records = report.records.size();
  return report;
}

namespace {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json record_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["d"] = r.d;
  j["p"] = r.p;
  j["variant"] = r.variant;
  j["subgroup_index"] = r.subgroup_index;
  j["subgroup_order"] = r.subgroup_order;
  j["rank"] = r.rank;
  j["valency"] = r.valency;
  j["primitive"] = opt(r.primitive);
  j["aut_order"] = opt(r.aut_order);
  j["aut_equals_TGbar"] = opt(r.aut_equals_TGbar);
  j["frobenius_or_socle_ok"] = opt(r.frobenius_or_socle_ok);
  j["agl_containment_ok"] = opt(r.agl_containment_ok);
  j["thm14_applicable"] = opt(r.thm14_applicable);
  j["thm14_ok"] = opt(r.thm14_ok);
  j["field_reducible"] = opt(r.field_reducible);
  j["scheme_axioms_ok"] = opt(r.scheme_axioms_ok);
  j["primitive_matches_irreducible"] = opt(r.primitive_matches_irreducible);
  j["nearfield_axioms_ok"] = opt(r.nearfield_axioms_ok);
  j["error"] = r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error);
  return j;
}

}  // namespace

void write_report_json(const CensusReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : report.records) j["records"].push_back(record_json(r));
  const auto& s = report.summary;
  j["summary"] = {{"max_order", s.max_order}, {"checks", s.checks},     {"records", s.records},
                  {"failures", s.failures},   {"errors", s.errors}};
  out << j.dump(2) << "\n";
}

void write_report_csv(const CensusReport& report, std::ostream& out) {
  bool first_row = true;
  for (const auto& r : report.records) {
    const auto j = record_json(r);
    if (first_row) {
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        out << (first ? "" : ",") << k;
        first = false;
      }
      out << "\n";
      first_row = false;
    }
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out << (first ? "" : ",");
      first = false;
      if (v.is_null()) continue;
      if (v.is_string()) {
        std::string s = v.get<std::string>();
        std::string esc;
        for (char c : s) esc += c == '"' ? std::string("\"\"") : std::string(1, c);
        out << '"' << esc << '"';
      } else {
        out << v.dump();
      }
    }
    out << "\n";
  }
}

}  // namespace nfs
