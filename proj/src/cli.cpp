#include "frobenius/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frobenius/builtin_actions.hpp"
#include "frobenius/json_io.hpp"
#include "frobenius/parking.hpp"
#include "frobenius/selftest.hpp"

namespace frob::cli {

namespace {

using json::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

struct CharacterOptions {
  std::string builtin;
  std::string action_path;
  std::string basis = "m";
  std::string route = "fixedpoints";
  long max_ground_set = kDefaultMaxGroundSet;
};

void run_character(const CharacterOptions& o, std::istream& in, std::ostream& out) {
  if (o.builtin.empty() == o.action_path.empty())
    throw UsageError("character needs exactly one of --builtin or --action");
  const Basis basis = parse_basis(o.basis);
  const FiniteAction a = [&] {
    if (!o.builtin.empty()) return actions::from_name(o.builtin, o.max_ground_set);
    auto parsed = json::action_from_json(json::parse(read_source(o.action_path, in)));
    if (parsed.ground_size() > o.max_ground_set)
      throw UsageError("action has " + std::to_string(parsed.ground_size()) +
                       " points, above --max-ground-set " +
                       std::to_string(o.max_ground_set));
    return parsed;
  }();
  require_valid(a);

  if (o.route == "fixedpoints") {
    out << json::to_json(convert(frobenius_p(a), basis)).dump() << "\n";
  } else if (o.route == "orbits") {
    out << json::to_json(convert(frobenius_m(a), basis)).dump() << "\n";
  } else if (o.route == "both") {
    const SymFunc fp = convert(frobenius_p(a), basis);
    const SymFunc fm = convert(frobenius_m(a), basis);
    Json report;
    report["fixedpoints"] = json::to_json(fp);
    report["orbits"] = json::to_json(fm);
    report["equal"] = fp.same_terms(fm);
    out << report.dump() << "\n";
  } else {
    throw UsageError("unknown route '" + o.route + "' (expected fixedpoints, orbits or both)");
  }
}

void run_convert(const std::string& input, const std::string& target, std::istream& in,
                 std::ostream& out) {
  const SymFunc f = json::symfunc_from_json(json::parse(read_source(input, in)));
  out << json::to_json(convert(f, parse_basis(target))).dump() << "\n";
}

struct ParkingOptions {
  int n = 0;
  std::string mode = "count";
  long max_ground_set = kDefaultMaxGroundSet;
};

void run_parking(const ParkingOptions& o, std::ostream& out) {
  const int n = o.n;
  if (n < 1) throw UsageError("--n must be at least 1");
  Json report;
  report["n"] = n;
  report["mode"] = o.mode;
  if (o.mode == "count") {
    if (n > parking::kDefaultMaxLength)
      throw UsageError("count mode enumerates n^n candidates; guard is n <= " +
                       std::to_string(parking::kDefaultMaxLength));
    const BigInt formula = parking::count_formula(n);
    const BigInt enumerated(parking::generate_all(n).size());
    report["count"] = formula.str();
    report["enumerated"] = enumerated.str();
    report["agree"] = formula == enumerated;
  } else if (o.mode == "orbits") {
    if (n > kMaxFormulaLength)
      throw UsageError("orbits mode guard is n <= " + std::to_string(kMaxFormulaLength));
    OrbitReport table;
    for (const auto& mu : partitions_of(n))
      table.emplace(mu, parking::orbit_count_formula(n, mu));
    report["orbits"] = json::to_json(table);
  } else if (o.mode == "verify") {
    if (n > parking::kDefaultMaxLength || parking::count_formula(n) > o.max_ground_set)
      throw UsageError("verify mode builds PF_n with " + parking::count_formula(n).str() +
                       " points; guards are n <= " +
                       std::to_string(parking::kDefaultMaxLength) +
                       " and --max-ground-set " + std::to_string(o.max_ground_set));
    const auto a = actions::parking_action(n);
    Json rows = Json::array();
    bool all = true;
    for (const auto& mu : partitions_of(n)) {
      const YoungSubgroup y(mu);
      const BigInt formula = parking::orbit_count_formula(n, mu);
      const BigInt union_find = young_orbits(a, y);
      const BigInt burnside = burnside_orbits(a, y);
      const bool agree = formula == union_find && formula == burnside;
      all = all && agree;
      Json row;
      row["mu"] = json::to_json(mu);
      row["formula"] = formula.str();
      row["union_find"] = union_find.str();
      row["burnside"] = burnside.str();
      row["agree"] = agree;
      rows.push_back(std::move(row));
    }
    report["rows"] = std::move(rows);
    report["all_agree"] = all;
  } else {
    throw UsageError("unknown mode '" + o.mode + "' (expected count, orbits or verify)");
  }
  out << report.dump() << "\n";
}

int run_selftest(int max_n, std::ostream& out) {
  if (max_n < 1 || max_n > 6) throw UsageError("--max-n must lie in 1..6");
  bool ok = true;
  selftest::run(max_n, [&](const selftest::SuiteResult& r) {
    ok = ok && r.passed();
    out << "suite " << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " ("
        << r.checks << " checks, " << std::fixed << std::setprecision(3) << r.seconds
        << " s)\n";
    for (const auto& f : r.failures) out << "  failure: " << f << "\n";
    out.flush();
  });
  out << (ok ? "selftest: pass" : "selftest: FAIL") << " (max_n=" << max_n << ")\n";
  return ok ? 0 : 1;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Frobenius characters of permutation representations of symmetric groups",
               "frobenius"};
  app.require_subcommand(1);

  CharacterOptions copt;
  auto* character = app.add_subcommand("character", "Frobenius character of an S_n-set");
  character->add_option("--builtin", copt.builtin,
                        "trivial:n, natural:n, subsets:n:k, parking:n or klein");
  character->add_option("--action", copt.action_path, "action JSON file, '-' for stdin");
  character->add_option("--basis", copt.basis, "output basis: p, m, h, e or s")
      ->capture_default_str();
  character->add_option("--route", copt.route, "fixedpoints, orbits or both")
      ->capture_default_str();
  character->add_option("--max-ground-set", copt.max_ground_set)->capture_default_str();

  std::string convert_input = "-";
  std::string convert_target;
  auto* conv = app.add_subcommand("convert", "express a symmetric function in another basis");
  conv->add_option("--input", convert_input, "SymFunc JSON file, '-' for stdin")
      ->capture_default_str();
  conv->add_option("--to", convert_target, "target basis: p, m, h, e or s")->required();

  ParkingOptions popt;
  auto* park = app.add_subcommand("parking", "parking function counts and orbit tables");
  park->add_option("--n", popt.n, "length")->required();
  park->add_option("--mode", popt.mode, "count, orbits or verify")->capture_default_str();
  park->add_option("--max-ground-set", popt.max_ground_set)->capture_default_str();

  int max_n = 3;
  auto* self = app.add_subcommand("selftest", "run the invariant suites");
  self->add_option("--max-n", max_n, "largest degree, 1..6")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (character->parsed()) run_character(copt, in, out);
    if (conv->parsed()) run_convert(convert_input, convert_target, in, out);
    if (park->parsed()) run_parking(popt, out);
    if (self->parsed()) return run_selftest(max_n, out);
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace frob::cli
