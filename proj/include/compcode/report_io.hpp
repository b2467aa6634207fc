#pragma once

#include <string>

#include <json.hpp>

#include "compcode/composite_code.hpp"
#include "compcode/protocol.hpp"

namespace compcode {

/// Fixed CSV column set for experiment rows; documented in the README and
/// relied on by downstream tooling, so treat as a stable contract.
std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentReport& report);

nlohmann::json experiment_to_json(const ExperimentReport& report);

nlohmann::json verification_to_json(const VerificationReport& report);

/// Code parameters: n, k1, k2, d1, d2, t1, t2, key_len.
nlohmann::json code_info_json(const CompositeCode& cc);

/// Render a double with 6 significant digits (the CSV float contract).
std::string csv_double(double value);

}  // namespace compcode
