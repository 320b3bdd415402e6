#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nfs/nearfield.hpp"

namespace nfs {

enum class Check { nearfield, axioms, primitivity, aut, oracle, structure, agl, semilinear, reduction };

const std::vector<std::string>& check_names();
/// Throws invalid_argument on an unknown name.
Check parse_check(const std::string& name);
const char* to_string(Check c);

inline constexpr std::uint64_t kCensusAutOrderBound = 169;
inline constexpr std::uint64_t kCensusArithmeticOrderBound = 343;

struct CensusOptions {
  std::uint64_t max_order = 9;
  std::set<Check> checks;  // empty means all
  std::optional<std::filesystem::path> cache_dir;
};

/// Throws invalid_argument when the order bound is out of range for the
/// selected checks.
void validate_options(const CensusOptions& options);

/// One scheme. Optional flags are null when the check was not run or does
/// not apply.
struct CensusRecord {
  std::uint64_t q = 0;
  std::uint32_t n = 0, d = 0, p = 0;
  std::uint32_t variant = 0;
  std::uint32_t subgroup_index = 0;
  std::uint32_t subgroup_order = 0;
  std::uint32_t rank = 0;
  std::uint32_t valency = 0;
  std::optional<bool> primitive;
  std::optional<std::string> aut_order;  // decimal
  std::optional<bool> aut_equals_TGbar;
  std::optional<bool> frobenius_or_socle_ok;
  std::optional<bool> agl_containment_ok;
  std::optional<bool> thm14_applicable;
  std::optional<bool> thm14_ok;
  std::optional<bool> field_reducible;
  std::optional<bool> scheme_axioms_ok;
  std::optional<bool> primitive_matches_irreducible;
  std::optional<bool> nearfield_axioms_ok;
  std::string error;

  std::uint32_t failure_count() const;
};

struct CensusSummary {
  std::uint64_t max_order = 0;
  std::vector<std::string> checks;
  std::uint64_t records = 0;
  std::uint64_t failures = 0;
  std::uint64_t errors = 0;
  std::uint64_t cache_hits = 0;
};

struct CensusReport {
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

/// Dickson pairs with q^n <= max_order, ordered by (q, n).
std::vector<DicksonPair> dickson_pairs_up_to(std::uint64_t max_order);

CensusReport run_census(const CensusOptions& options);

/// Deterministic: identical reports serialize to identical bytes. Cache hits
/// are not part of the report.
void write_report_json(const CensusReport& report, std::ostream& out);
void write_report_csv(const CensusReport& report, std::ostream& out);

}  // namespace nfs
