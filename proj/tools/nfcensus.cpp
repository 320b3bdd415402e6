// nfcensus: build near-fields and cyclotomic schemes, run the census.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nfs/arith.hpp"
#include "nfs/backtrack.hpp"
#include "nfs/cache.hpp"
#include "nfs/census.hpp"
#include "nfs/errors.hpp"
#include "nfs/nearfield.hpp"
#include "nfs/scheme.hpp"
#include "nfs/scheme_aut.hpp"
#include "nfs/zsigmondy.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct SchemeSpec {
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t variant = 0;
  std::uint32_t subgroup = 0;
};

// Q:N:V:S
SchemeSpec parse_spec(const std::string& text) {
  SchemeSpec s;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> s.q >> c1 >> s.n >> c2 >> s.variant >> c3 >> s.subgroup) || c1 != ':' || c2 != ':' || c3 != ':' ||
      !in.eof()) {
    throw std::invalid_argument("scheme spec must look like Q:N:V:S, got '" + text + "'");
  }
  return s;
}

nfs::CyclotomicScheme build(const SchemeSpec& s) {
  const auto nf = nfs::construct_nearfield(s.q, s.n, s.variant);
  const auto subs = nfs::nearfield_subgroups(nf);
  if (s.subgroup >= subs.size()) {
    throw std::invalid_argument("subgroup index " + std::to_string(s.subgroup) + " out of range; there are " +
                                std::to_string(subs.size()));
  }
  return nfs::build_cyclotomic(nf, subs[s.subgroup]);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dickson near-fields and their cyclotomic schemes"};
  app.require_subcommand(1);
  int status = kPass;

  // pair check Q N
  auto* pair = app.add_subcommand("pair", "Dickson pair utilities");
  pair->require_subcommand(1);
  auto* pair_check = pair->add_subcommand("check", "test the Dickson conditions for (Q, N)");
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  pair_check->add_option("Q", q, "prime power")->required();
  pair_check->add_option("N", n, "degree")->required();
  pair_check->callback([&] {
    const bool ok = nfs::validate_dickson_pair(q, n);
    std::cout << "(" << q << ", " << n << ") " << (ok ? "is" : "is not") << " a Dickson pair\n";
    if (ok) std::cout << "near-fields: " << nfs::count_dickson_nearfields(q, n) << "\n";
    status = ok ? kPass : kFail;
  });

  // nf build / nf count
  auto* nf_cmd = app.add_subcommand("nf", "near-field construction");
  nf_cmd->require_subcommand(1);
  auto* nf_build = nf_cmd->add_subcommand("build", "build a Dickson near-field and verify its axioms");
  std::uint32_t variant = 0;
  std::string table_path;
  nf_build->add_option("Q", q)->required();
  nf_build->add_option("N", n)->required();
  nf_build->add_option("--variant", variant, "variant index");
  nf_build->add_option("--table", table_path, "write the multiplication table as CSV");
  nf_build->callback([&] {
    const auto nf = nfs::construct_nearfield(q, n, variant);
    std::cout << "order " << nf.order() << ", variant " << nf.variant() << " (unit " << nf.unit() << ")\n";
    std::cout << "modulus";
    for (auto c : nf.field().modulus()) std::cout << ' ' << c;
    std::cout << " 1\ncoupling";
    for (auto j : nf.coupling()) std::cout << ' ' << j;
    std::cout << "\n";
    bool ok = true;
    if (nf.order() <= nfs::kAxiomCheckBound) {
      const auto report = nfs::verify_nearfield_axioms(nf);
      for (const auto& c : report.checks) {
        std::cout << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
      }
      ok = report.all_passed();
    } else {
      std::cout << "axioms: skipped (order above " << nfs::kAxiomCheckBound << ")\n";
    }
    if (!table_path.empty()) {
      std::ofstream out(table_path);
      if (!out) throw std::runtime_error("cannot write " + table_path);
      nfs::export_multiplication_csv(nf, out);
    }
    status = ok ? kPass : kFail;
  });
  auto* nf_count = nf_cmd->add_subcommand("count", "number of near-fields for a Dickson pair");
  bool classify = false;
  nf_count->add_option("Q", q)->required();
  nf_count->add_option("N", n)->required();
  nf_count->add_flag("--classify", classify, "also classify the variants up to isomorphism by search");
  nf_count->callback([&] {
    const auto count = nfs::count_dickson_nearfields(q, n);
    std::cout << count << "\n";
    if (classify) {
      const auto labels = nfs::classify_variants(q, n);
      std::uint32_t classes = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) classes = std::max<std::uint32_t>(classes, labels[i] + 1);
      std::cout << "isomorphism classes found: " << classes << "\n";
      status = classes == count ? kPass : kFail;
    }
  });

  // scheme build / aut / iso
  auto* scheme = app.add_subcommand("scheme", "cyclotomic schemes");
  scheme->require_subcommand(1);
  std::uint32_t subgroup = 0;
  auto add_scheme_args = [&](CLI::App* cmd) {
    cmd->add_option("Q", q)->required();
    cmd->add_option("N", n)->required();
    cmd->add_option("--variant", variant, "near-field variant");
    cmd->add_option("--subgroup", subgroup, "index into the subgroup list of the multiplicative group");
  };
  auto* scheme_build = scheme->add_subcommand("build", "build Cyc(K, 𝕂) and verify the scheme axioms");
  add_scheme_args(scheme_build);
  std::string json_path;
  scheme_build->add_option("--json", json_path, "write the scheme as JSON");
  scheme_build->callback([&] {
    const auto cyc = build({q, n, variant, subgroup});
    const auto res = nfs::verify_scheme_axioms(cyc.scheme);
    std::cout << "N " << cyc.scheme.n << ", rank " << cyc.scheme.rank << ", valency " << cyc.valency << "\n";
    std::cout << "axioms: " << (res.ok ? "pass" : "FAIL") << "\n";
    if (!res.ok) {
      const auto& w = *res.witness;
      std::cout << "  " << w.kind << " at (" << w.u << ", " << w.w << ")\n";
    }
    const bool prim = nfs::is_primitive(cyc.scheme);
    const bool irr = nfs::is_irreducible(nfs::base_group(cyc.nf, cyc.subgroup));
    std::cout << "primitive: " << yes_no(prim) << "\nbase group irreducible: " << yes_no(irr) << "\n";
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot write " + json_path);
      nfs::write_scheme_json(cyc, res.tensor, out);
    }
    status = res.ok && prim == irr ? kPass : kFail;
  });
  auto* scheme_aut = scheme->add_subcommand("aut", "automorphism group T·Ḡ");
  add_scheme_args(scheme_aut);
  bool oracle = false;
  scheme_aut->add_flag("--oracle", oracle, "compare with the backtracking search");
  scheme_aut->callback([&] {
    const auto cyc = build({q, n, variant, subgroup});
    const auto aut = nfs::aut_group(cyc);
    std::cout << "|Aut| " << aut.group.order_string() << "\n";
    if (aut.closure) std::cout << "|linear closure| " << aut.closure->order() << "\n";
    if (oracle && !aut.trivial) {
      const auto brute = nfs::aut_bruteforce(cyc.scheme);
      const bool same = brute == aut.group;
      std::cout << "backtracking |Aut| " << brute.order_string() << ", equal: " << yes_no(same) << "\n";
      status = same ? kPass : kFail;
    }
  });
  auto* scheme_iso = scheme->add_subcommand("iso", "isomorphism test between two schemes");
  std::string spec_a, spec_b;
  scheme_iso->add_option("A", spec_a, "Q:N:V:S")->required();
  scheme_iso->add_option("B", spec_b, "Q:N:V:S")->required();
  scheme_iso->add_flag("--oracle", oracle, "cross-check with color-isomorphism backtracking");
  scheme_iso->callback([&] {
    const auto a = build(parse_spec(spec_a));
    const auto b = build(parse_spec(spec_b));
    const auto res = nfs::are_isomorphic(a, b);
    std::cout << "isomorphic: " << yes_no(res.isomorphic) << "\n";
    if (res.conjugator) std::cout << "conjugator " << res.conjugator->digit_string(a.nf.space()) << "\n";
    if (oracle) {
      const bool brute = nfs::find_color_isomorphism(a.scheme, b.scheme).has_value();
      std::cout << "backtracking: " << yes_no(brute) << "\n";
      status = brute == res.isomorphic ? kPass : kFail;
    }
  });

  // zsig Q N [--min K]
  auto* zsig = app.add_subcommand("zsig", "Zsigmondy primes for (Q, N)");
  std::uint64_t zq = 0, min_k = 0;
  zsig->add_option("Q", zq)->required();
  zsig->add_option("N", n)->required();
  zsig->add_option("--min", min_k, "only primes greater than K");
  zsig->callback([&] {
    const auto primes = nfs::zsigmondy_primes(zq, n, min_k);
    for (std::size_t i = 0; i < primes.size(); ++i) std::cout << (i ? " " : "") << primes[i];
    std::cout << "\n";
  });

  // census
  auto* census = app.add_subcommand("census", "run every check on every scheme up to an order bound");
  nfs::CensusOptions opts;
  std::vector<std::string> check_list;
  std::string out_path, csv_path, cache_dir;
  census->add_option("--max-order", opts.max_order, "largest q^n")->required();
  census->add_option("--checks", check_list, "comma-separated subset of checks")->delimiter(',');
  census->add_option("--out", out_path, "JSON report path (default: stdout)");
  census->add_option("--csv", csv_path, "CSV mirror of the records");
  census->add_option("--cache-dir", cache_dir, "field table cache (overrides NFS_CACHE_DIR)");
  census->callback([&] {
    for (const auto& c : check_list) opts.checks.insert(nfs::parse_check(c));
    opts.cache_dir = nfs::resolve_cache_dir(cache_dir.empty() ? std::nullopt : std::optional<std::string>(cache_dir));
    nfs::validate_options(opts);
    const auto report = nfs::run_census(opts);
    if (out_path.empty()) {
      nfs::write_report_json(report, std::cout);
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      nfs::write_report_json(report, out);
    }
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out) throw std::runtime_error("cannot write " + csv_path);
      nfs::write_report_csv(report, out);
    }
    std::cerr << report.summary.records << " records, " << report.summary.failures << " failures, "
              << report.summary.errors << " errors\n";
    status = report.summary.failures == 0 ? kPass : kFail;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return status;
}
