#include "arith/serialize.hpp"

#include <sstream>

namespace arith {

Json to_json(const Structure& s) {
  Json j;
  j["n"] = s.n();
  j["values"] = s.values();
  j["sum"] = s.sum();
  j["b"] = s.quotient_b();
  return j;
}

Json to_json(const UnitFractionSolution& u) {
  Json j;
  j["n"] = u.n();
  j["denominators"] = u.denominators();
  j["lcm"] = u.lcm();
  return j;
}

Json to_json(const FeasibilityResult& r) {
  Json j;
  j["n"] = r.n;
  j["c"] = r.target;
  j["status"] = to_string(r.status);
  j["reason"] = to_string(r.reason);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["general_bound"] = r.general_bound;
  j["general_k"] = r.general_k;
  j["prime_bound"] = r.prime_bound;
  j["prime_k"] = r.prime_k;
  j["obstruction_general_threshold"] = general_obstruction_threshold(r.n);
  j["obstruction_prime_threshold"] = prime_obstruction_threshold(r.n);
  return j;
}

Json to_json(const PrimeTableRow& row) {
  Json j;
  j["n"] = row.n;
  j["yes_theorem"] = row.prime_bound;
  j["no_obstruction"] = row.obstruction_threshold;
  j["yes_quadratic"] = row.yes_quadratic;
  j["yes_other"] = row.yes_other;
  j["no_other"] = row.no_other;
  return j;
}

Json to_json(const CutoffViolation& v) {
  Json j;
  j["n"] = v.n;
  j["infeasible"] = v.infeasible;
  j["feasible"] = v.feasible;
  return j;
}

std::string join(const std::vector<Value>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

std::string to_csv_row(const Structure& s) {
  std::ostringstream os;
  os << s.n() << ',' << s.quotient_b() << ',' << s.sum() << ',' << join(s.values());
  return os.str();
}

std::string prime_table_markdown(const std::vector<PrimeTableRow>& rows) {
  std::ostringstream os;
  os << "| n | Yes, construction bound | No, obstruction | Yes, quadratic family "
        "| Yes, other | No, other |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    os << "| " << row.n << " | p<=" << row.prime_bound << " | p>"
       << row.obstruction_threshold << " | " << join(row.yes_quadratic, ",") << " | "
       << join(row.yes_other, ",") << " | " << join(row.no_other, ",") << " |\n";
  }
  return os.str();
}

std::string prime_table_csv(const std::vector<PrimeTableRow>& rows) {
  std::ostringstream os;
  os << "n,yes_theorem,no_obstruction,yes_quadratic,yes_other,no_other\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.prime_bound << ',' << row.obstruction_threshold << ','
       << join(row.yes_quadratic) << ',' << join(row.yes_other) << ','
       << join(row.no_other) << '\n';
  }
  return os.str();
}

}  // namespace arith
