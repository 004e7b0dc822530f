#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arith/bounds.hpp"
#include "arith/constructions.hpp"
#include "arith/core.hpp"
#include "arith/prime_table.hpp"
#include "arith/search.hpp"

namespace arith {

// Key order is fixed so that identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// {"n", "values", "sum", "b"}
Json to_json(const Structure& s);
/// {"n", "denominators", "lcm"}
Json to_json(const UnitFractionSolution& u);
/// {"n", "c", "status", "reason", "witness"}
Json to_json(const FeasibilityResult& r);
/// BoundReport plus both obstruction thresholds as exact rationals.
Json to_json(const BoundReport& r);
Json to_json(const PrimeTableRow& row);
Json to_json(const CutoffViolation& v);

inline constexpr const char* kStructureCsvHeader = "n,b,sum,values";

/// n,b,sum,"v1 v2 ..." with the values space-separated in a single field.
std::string to_csv_row(const Structure& s);

/// Space-separated decimal values.
std::string join(const std::vector<Value>& values, const char* sep = " ");

/// Table of attainable primes, one line per n, in the five-column layout.
std::string prime_table_markdown(const std::vector<PrimeTableRow>& rows);
/// Columns n, yes_theorem, no_obstruction, yes_quadratic, yes_other, no_other.
std::string prime_table_csv(const std::vector<PrimeTableRow>& rows);

}  // namespace arith
