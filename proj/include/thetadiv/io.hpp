#pragma once

// JSON and CSV encodings. Rationals are always lowest-terms strings "p/q"
// (or "p" for integers); key order is fixed so output is byte-stable.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thetadiv/basis.hpp"
#include "thetadiv/divisor_class.hpp"
#include "thetadiv/dr_cycle.hpp"
#include "thetadiv/solver.hpp"
#include "thetadiv/test_curves.hpp"
#include "thetadiv/theta_classes.hpp"

namespace thetadiv::io {

using Json = nlohmann::ordered_json;

/// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);
std::string csv_row(const std::vector<std::string>& fields);

Json to_json(const DivisorClass& cls);
/// Accepts the schema written by to_json; throws std::invalid_argument.
DivisorClass divisor_class_from_json(const Json& j);
std::string to_csv(const DivisorClass& cls);

Json basis_json(int g, int n);
std::string basis_csv(int g, int n);

Json curves_json(int g, int n, const std::vector<TestCurve>& curves);
std::string curves_csv(const std::vector<TestCurve>& curves);

Json to_json(const IntersectionMatrix& m);
std::string to_csv(const IntersectionMatrix& m);

Json to_json(const CorrectionLedger& ledger, int g, int n, const WeightVector& d, PlusConvention convention);
std::string to_csv(const CorrectionLedger& ledger, int g, int n);

Json to_json(const FormalCycle& cycle);
FormalCycle formal_cycle_from_json(const Json& j);
std::string to_csv(const FormalCycle& cycle);
/// "K1^2*delta_1^{1}"; the empty monomial is "1".
std::string monomial_label(const FormalCycle& cycle, const FormalMonomial& m);

Json to_json(const RankReport& report);

std::string plus_convention_name(PlusConvention convention);

}  // namespace thetadiv::io
