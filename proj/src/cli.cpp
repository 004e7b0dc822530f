#include "arith/cli.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "arith/enumerate.hpp"
#include "arith/serialize.hpp"

namespace arith::cli {
namespace {

constexpr const char* kGrammar =
    "usage: arithstruct <verify V1 V2 ... | construct --n N --target C | bounds --n N | "
    "feasible --n N --target C [--no-fast-paths] | enumerate --n N [--limit K] | "
    "count --n N [--jobs J] | prime-table --n-min A --n-max B | unit-fractions --n N> "
    "[--format json|csv|markdown] [--quiet]";

struct Options {
  std::string format = "json";
  bool quiet = false;

  std::vector<Value> verify_values;
  std::uint64_t n = 0;
  Value target = 0;
  bool no_fast_paths = false;
  std::uint64_t limit = 0;
  unsigned jobs = 1;
  bool allow_large = false;
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("format '" + o.format + "' is not supported by " + command);
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "verify");
  try {
    const Structure s = verify(o.verify_values);
    if (o.format == "csv") {
      out << kStructureCsvHeader << '\n' << to_csv_row(s) << '\n';
    } else {
      out << to_json(s).dump() << '\n';
    }
    return kSuccess;
  } catch (const Error& e) {
    if (e.code() != Errc::not_divisor && e.code() != Errc::common_factor) throw;
    Json j;
    j["valid"] = false;
    j["error"] = to_string(e.code());
    j[e.code() == Errc::not_divisor ? "index" : "gcd"] = e.detail();
    out << j.dump() << '\n';
    return kNegative;
  }
}

int cmd_construct(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "construct");
  const auto built = construct_any(o.n, o.target);
  if (o.format == "csv") {
    out << "n,c,construction,values\n" << o.n << ',' << o.target << ',';
    if (built) out << to_string(built->family) << ',' << join(built->structure.values());
    else out << ',';
    out << '\n';
  } else {
    Json j;
    j["n"] = o.n;
    j["c"] = o.target;
    j["construction"] = built ? Json(to_string(built->family)) : Json(nullptr);
    j["witness"] = built ? to_json(built->structure) : Json(nullptr);
    out << j.dump() << '\n';
  }
  return built ? kSuccess : kNegative;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "bounds");
  const BoundReport r = bound_report(static_cast<std::int64_t>(o.n));
  const Json j = to_json(r);
  if (o.format == "csv") {
    std::string header, row;
    for (const auto& [key, value] : j.items()) {
      if (!header.empty()) {
        header += ',';
        row += ',';
      }
      header += key;
      row += value.is_string() ? value.get<std::string>() : value.dump();
    }
    out << header << '\n' << row << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return kSuccess;
}

int cmd_feasible(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "feasible");
  const FeasibilityResult r =
      max_value_feasible(o.n, o.target, SearchOptions{.fast_paths = !o.no_fast_paths});
  if (o.format == "csv") {
    out << "n,c,status,reason,values\n"
        << r.n << ',' << r.target << ',' << to_string(r.status) << ','
        << to_string(r.reason) << ',' << (r.witness ? join(r.witness->values()) : "")
        << '\n';
  } else {
    out << to_json(r).dump() << '\n';
  }
  return r.feasible() ? kSuccess : kNegative;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "enumerate");
  if (o.format == "csv") out << kStructureCsvHeader << '\n';
  std::uint64_t emitted = 0;
  enumerate_structures(
      o.n,
      [&](const Structure& s) {
        if (o.format == "csv") out << to_csv_row(s) << '\n';
        else out << to_json(s).dump() << '\n';
        return o.limit == 0 || ++emitted < o.limit;
      },
      EnumerateOptions{.allow_large = o.allow_large});
  return kSuccess;
}

int cmd_unit_fractions(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "unit-fractions");
  if (o.format == "csv") out << "n,lcm,denominators\n";
  std::uint64_t emitted = 0;
  for_each_unit_fraction_solution(
      o.n,
      [&](std::span<const Value> xs) {
        const auto u = UnitFractionSolution::from_denominators(xs);
        if (o.format == "csv") {
          out << u.n() << ',' << u.lcm() << ',' << join(u.denominators()) << '\n';
        } else {
          out << to_json(u).dump() << '\n';
        }
        return o.limit == 0 || ++emitted < o.limit;
      },
      EnumerateOptions{.allow_large = o.allow_large});
  return kSuccess;
}

int cmd_count(const Options& o, std::ostream& out) {
  require_format(o, {"json", "csv"}, "count");
  const std::uint64_t count =
      count_structures(o.n, o.jobs, EnumerateOptions{.allow_large = o.allow_large});
  if (o.format == "csv") {
    out << "n,count\n" << o.n << ',' << count << '\n';
  } else {
    Json j;
    j["n"] = o.n;
    j["count"] = count;
    out << j.dump() << '\n';
  }
  return kSuccess;
}

int cmd_prime_table(const Options& o, std::ostream& out) {
  const auto rows = prime_table(o.n_min, o.n_max);
  if (o.format == "markdown") {
    out << prime_table_markdown(rows);
  } else if (o.format == "csv") {
    out << prime_table_csv(rows);
  } else {
    Json j;
    j["rows"] = Json::array();
    for (const auto& row : rows) j["rows"].push_back(to_json(row));
    const auto violation = find_cutoff_violation(rows);
    j["cutoff_violation"] = violation ? to_json(*violation) : Json(nullptr);
    out << j.dump() << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arithmetical structures on complete graphs", "arithstruct"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_flag("--quiet", o.quiet, "Suppress diagnostics");

  auto* verify_cmd = app.add_subcommand("verify", "Check a list of values");
  verify_cmd->add_option("values", o.verify_values)->required();

  auto* construct_cmd = app.add_subcommand("construct", "Build a structure with largest value C");
  construct_cmd->add_option("--n", o.n)->required();
  construct_cmd->add_option("--target", o.target)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Construction bounds and obstruction thresholds");
  bounds_cmd->add_option("--n", o.n)->required();

  auto* feasible_cmd = app.add_subcommand("feasible", "Decide whether largest value C occurs on K_N");
  feasible_cmd->add_option("--n", o.n)->required();
  feasible_cmd->add_option("--target", o.target)->required();
  feasible_cmd->add_flag("--no-fast-paths", o.no_fast_paths,
                         "Skip obstructions and constructions; always search");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every structure on K_N");
  enumerate_cmd->add_option("--n", o.n)->required();
  enumerate_cmd->add_option("--limit", o.limit, "Stop after K structures");
  enumerate_cmd->add_flag("--allow-large", o.allow_large, "Lift the size cap");

  auto* count_cmd = app.add_subcommand("count", "Count structures on K_N");
  count_cmd->add_option("--n", o.n)->required();
  count_cmd->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
  count_cmd->add_flag("--allow-large", o.allow_large, "Lift the size cap");

  auto* table_cmd = app.add_subcommand("prime-table", "Classify prime largest values");
  table_cmd->add_option("--n-min", o.n_min)->required();
  table_cmd->add_option("--n-max", o.n_max)->required();

  auto* unit_cmd = app.add_subcommand("unit-fractions", "List solutions of sum 1/x_i = 1");
  unit_cmd->add_option("--n", o.n)->required();
  unit_cmd->add_option("--limit", o.limit, "Stop after K solutions");
  unit_cmd->add_flag("--allow-large", o.allow_large, "Lift the size cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (!o.quiet) err << "error: " << e.what() << '\n' << kGrammar << '\n';
    return kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(o, out);
    if (*construct_cmd) return cmd_construct(o, out);
    if (*bounds_cmd) return cmd_bounds(o, out);
    if (*feasible_cmd) return cmd_feasible(o, out);
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*count_cmd) return cmd_count(o, out);
    if (*table_cmd) return cmd_prime_table(o, out);
    if (*unit_cmd) return cmd_unit_fractions(o, out);
  } catch (const UsageError& e) {
    if (!o.quiet) err << "error: " << e.what() << '\n' << kGrammar << '\n';
    return kUsage;
  } catch (const Error& e) {
    if (!o.quiet) err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace arith::cli
