#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json_out.hpp"
#include "upd/decomposition.hpp"
#include "upd/engine.hpp"
#include "upd/errors.hpp"
#include "upd/family_json.hpp"
#include "upd/oracle.hpp"

namespace {

using namespace upd;
using tool::integer_array;
using tool::quoted;
using tool::string_array;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Usage, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Usage:
    case ErrorKind::ArityMismatch:
    case ErrorKind::BadBox:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ZeroColon:
      return 2;
    case ErrorKind::UnitIdeal:
      return 3;
    case ErrorKind::CapExceeded:
      return 4;
    case ErrorKind::KTooSmall:
      return 5;
    default:
      return 1;
  }
}

void report_error(const Error& e) {
  std::string extra;
  if (const auto* parse = dynamic_cast<const ParseError*>(&e)) {
    extra = ",\"line\":" + std::to_string(parse->line()) +
            ",\"col\":" + std::to_string(parse->column());
  } else if (const auto* cap = dynamic_cast<const CapExceededError*>(&e)) {
    extra = ",\"cap\":" + std::to_string(cap->cap()) +
            ",\"prime\":" + quoted(cap->prime());
    if (!cap->point().empty()) extra += ",\"n\":" + integer_array(cap->point());
  } else if (const auto* small = dynamic_cast<const KTooSmallError*>(&e)) {
    extra = ",\"k\":" + std::to_string(small->k());
    if (!small->point().empty()) {
      extra += ",\"n\":" + integer_array(small->point());
    }
  }
  std::cerr << "{\"kind\":" << quoted(error_kind_name(e.kind())) << extra
            << ",\"message\":" << quoted(e.what()) << "}\n";
}

std::string component_json(const PrimaryComponent& comp) {
  return "{\"prime\":" + string_array(gen_strings(comp.prime)) +
         ",\"component\":" + string_array(gen_strings(comp.component)) + '}';
}

std::string components_json(const std::vector<PrimaryComponent>& comps) {
  std::string out = "[";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ',';
    out += component_json(comps[i]);
  }
  out += ']';
  return out;
}

const char* ok_str(bool b) { return b ? "ok" : "fail"; }

struct CommonArgs {
  std::string family_path;
  std::string box_text;
  std::uint64_t cap = 0;
  unsigned jobs = 1;
};

int cmd_decompose(const std::string& ideal_json) {
  MonomialIdeal ideal = parse_inline_ideal(ideal_json);
  if (ideal.is_unit()) {
    throw Error(ErrorKind::UnitIdeal, "the unit ideal has no decomposition");
  }
  const PrimaryDecomposition dec = primary_decomposition(ideal);
  std::cout << "{\"ideal\":" << string_array(gen_strings(ideal))
            << ",\"components\":" << components_json(dec.components)
            << ",\"irredundant\":" << (dec.irredundant ? "true" : "false")
            << ",\"minimal\":" << (dec.minimal ? "true" : "false") << "}\n";
  return 0;
}

int cmd_scan(const CommonArgs& args) {
  const FamilySpec spec = parse_family(read_file(args.family_path));
  const Box box = parse_box(args.box_text);
  if (box.arity() != spec.arity()) {
    throw Error(ErrorKind::BadBox, "box arity differs from family parameters");
  }
  const ScanReport report = scan_uniform_k(spec, box, args.cap, args.jobs);
  std::size_t skipped = 0;
  for (const auto& row : report.rows) {
    if (row.zero_module) {
      ++skipped;
      std::cout << "{\"n\":" << integer_array(row.point)
                << ",\"zero_module\":true}\n";
      continue;
    }
    std::cout << "{\"n\":" << integer_array(row.point)
              << ",\"ideal\":" << string_array(gen_strings(*row.ideal))
              << ",\"primes\":[";
    for (std::size_t i = 0; i < row.primes.size(); ++i) {
      const auto& stat = row.primes[i];
      if (i) std::cout << ',';
      std::cout << "{\"prime\":" << string_array(gen_strings(stat.prime))
                << ",\"k_min\":" << stat.k_min << ",\"l\":" << stat.l << '}';
    }
    std::cout << "],\"k_min\":" << row.k_min << "}\n";
  }
  std::cout << "{\"aggregate\":{\"uniform_k\":" << report.uniform_k
            << ",\"stabilized\":" << (report.stabilized ? "true" : "false")
            << ",\"guarantee\":" << quoted(guarantee_name(report.guarantee))
            << ",\"window\":" << report.window
            << ",\"rows\":" << report.rows.size() << ",\"skipped\":" << skipped
            << "}}\n";
  return 0;
}

int cmd_certify(const CommonArgs& args, std::uint64_t k) {
  const FamilySpec spec = parse_family(read_file(args.family_path));
  const Box box = parse_box(args.box_text);
  if (box.arity() != spec.arity()) {
    throw Error(ErrorKind::BadBox, "box arity differs from family parameters");
  }
  const CertifyReport report = certify_box(spec, box, k, args.jobs);
  for (const auto& row : report.rows) {
    if (row.zero_module) {
      std::cout << "{\"n\":" << integer_array(row.point)
                << ",\"zero_module\":true}\n";
      continue;
    }
    const BoundedCertificate& cert = *row.certificate;
    std::cout << "{\"n\":" << integer_array(row.point)
              << ",\"ideal\":" << string_array(gen_strings(cert.ideal))
              << ",\"k\":" << cert.k
              << ",\"components\":" << components_json(cert.components)
              << ",\"checks\":{\"intersection_ok\":"
              << (cert.checks.intersection_ok ? "true" : "false")
              << ",\"power_containment_ok\":"
              << (cert.checks.power_containment_ok ? "true" : "false")
              << ",\"irredundant_ok\":"
              << (cert.checks.irredundant_ok ? "true" : "false")
              << ",\"minimal_ok\":"
              << (cert.checks.minimal_ok ? "true" : "false") << "}}\n";
  }
  std::cout << "{\"aggregate\":{\"k\":" << report.k
            << ",\"rows\":" << report.rows.size()
            << ",\"certified\":" << report.certified
            << ",\"skipped\":" << report.skipped << ",\"all_ok\":true}}\n";
  return 0;
}

int cmd_h0(const CommonArgs& args, const std::string& ideal_json, bool battery,
           std::uint64_t seed) {
  const FamilySpec spec = parse_family(read_file(args.family_path));
  const Box box = parse_box(args.box_text);
  if (box.arity() != spec.arity()) {
    throw Error(ErrorKind::BadBox, "box arity differs from family parameters");
  }
  std::vector<MonomialIdeal> tests;
  if (battery && !ideal_json.empty()) {
    throw Error(ErrorKind::Usage, "--ideal and --battery are exclusive");
  }
  if (battery) {
    tests = battery_ideals(spec.context, seed);
  } else if (!ideal_json.empty()) {
    MonomialIdeal test = parse_inline_ideal(ideal_json, spec.context);
    if (test.is_zero()) {
      throw Error(ErrorKind::Usage, "the test ideal must be non-zero");
    }
    tests.push_back(std::move(test));
  } else {
    throw Error(ErrorKind::Usage, "h0 needs --ideal or --battery");
  }
  const H0Report report =
      verify_h0_uniform(spec, box, tests, args.cap, args.jobs);
  bool cross_ok = true;
  bool defining_ok = true;
  bool torsion_ok = true;
  for (const auto& row : report.rows) {
    cross_ok = cross_ok && row.cross_check_ok;
    defining_ok = defining_ok && row.defining_eq_ok;
    torsion_ok = torsion_ok && row.torsion_free_ok;
    std::cout << "{\"n\":" << integer_array(row.point)
              << ",\"J\":" << string_array(gen_strings(row.test_ideal))
              << ",\"l\":" << row.l
              << ",\"sat\":" << string_array(gen_strings(row.sat));
    if (row.zero_module) std::cout << ",\"zero_module\":true";
    std::cout << ",\"cross_check\":" << quoted(ok_str(row.cross_check_ok))
              << ",\"defining_eq\":" << quoted(ok_str(row.defining_eq_ok))
              << ",\"torsion_free\":" << quoted(ok_str(row.torsion_free_ok))
              << "}\n";
  }
  std::cout << "{\"aggregate\":{\"l_uniform\":" << report.l_uniform
            << ",\"rows\":" << report.rows.size()
            << ",\"cross_check_ok\":" << (cross_ok ? "true" : "false")
            << ",\"defining_eq_ok\":" << (defining_ok ? "true" : "false")
            << ",\"torsion_free_ok\":" << (torsion_ok ? "true" : "false")
            << "}}\n";
  return 0;
}

int cmd_oracle_check(std::uint64_t seed, std::uint64_t cases) {
  const auto results = run_oracle_suites(seed, cases);
  std::uint64_t total_cases = 0;
  std::uint64_t total_failures = 0;
  for (const auto& suite : results) {
    total_cases += suite.cases;
    total_failures += suite.failures;
    std::cout << "{\"suite\":" << quoted(suite.name)
              << ",\"cases\":" << suite.cases
              << ",\"failures\":" << suite.failures << "}\n";
  }
  std::cout << "{\"aggregate\":{\"suites\":" << results.size()
            << ",\"cases\":" << total_cases
            << ",\"failures\":" << total_failures << ",\"seed\":" << seed
            << "}}\n";
  for (const auto& suite : results) {
    if (!suite.counterexample.empty()) {
      std::cerr << "{\"kind\":\"counterexample\",\"suite\":"
                << quoted(suite.name) << ",\"case\":" << suite.counterexample
                << "}\n";
    }
  }
  return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact primary-decomposition scans for monomial ideal families"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string ideal_json;
  std::uint64_t k = 1;
  std::uint64_t cases = 500;
  std::uint64_t seed = 42;
  bool battery = false;

  auto add_common = [&common](CLI::App* cmd, bool with_cap = true) {
    cmd->add_option("--family", common.family_path, "family spec file")
        ->required();
    cmd->add_option("--box", common.box_text,
                    "inclusive ranges a..b[,c..d]..., one per parameter")
        ->required();
    if (with_cap) {
      cmd->add_option("--cap", common.cap,
                      "search cap (0 = derive from the ideal's degrees)");
    }
    cmd->add_option("--jobs", common.jobs, "worker threads")
        ->envname("UPD_JOBS")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* decompose =
      app.add_subcommand("decompose", "primary decomposition of one ideal");
  decompose->add_option("--ideal", ideal_json, "inline ideal JSON")->required();

  CLI::App* scan =
      app.add_subcommand("scan", "per-point k_min and the uniform k");
  add_common(scan);

  CLI::App* certify = app.add_subcommand(
      "certify", "bounded primary-decomposition certificates at a fixed k");
  add_common(certify, /*with_cap=*/false);
  certify->add_option("--k", k, "power of each associated prime")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* h0cmd = app.add_subcommand(
      "h0", "saturation indices and the uniform colon exponent");
  add_common(h0cmd);
  h0cmd->add_option("--ideal", ideal_json, "inline test ideal JSON");
  h0cmd->add_flag("--battery", battery,
                  "all squarefree primes plus 25 seeded random ideals");
  h0cmd->add_option("--seed", seed, "battery seed");

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "randomized invariant suites against the enumeration oracle");
  oracle->add_option("--seed", seed, "case seed");
  oracle->add_option("--cases", cases, "cases per suite")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "{\"kind\":\"usage\",\"message\":" << quoted(e.what())
              << "}\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 1;
  try {
    if (decompose->parsed()) {
      code = cmd_decompose(ideal_json);
    } else if (scan->parsed()) {
      code = cmd_scan(common);
    } else if (certify->parsed()) {
      code = cmd_certify(common, k);
    } else if (h0cmd->parsed()) {
      code = cmd_h0(common, ideal_json, battery, seed);
    } else {
      code = cmd_oracle_check(seed, cases);
    }
  } catch (const Error& e) {
    report_error(e);
    code = exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "{\"kind\":\"internal\",\"message\":" << quoted(e.what())
              << "}\n";
    code = 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "{\"kind\":\"timing\",\"ms\":" << elapsed.count() << "}\n";
  return code;
}
