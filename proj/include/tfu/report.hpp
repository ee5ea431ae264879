#pragma once

#include <string>

#include <Eigen/Dense>
#include "json.hpp"

#include "tfu/detector.hpp"
#include "tfu/functional.hpp"
#include "tfu/identities.hpp"
#include "tfu/transforms.hpp"
#include "tfu/uncertainty.hpp"

namespace tfu {

/// Insertion-ordered JSON so reports keep the field order of their types.
using Json = nlohmann::ordered_json;

Json to_json(const Grid& g);
Json to_json(const Eigen::MatrixXd& m);
Json to_json(const Eigen::VectorXd& v);
Json to_json(const FunctionalTrace& t);
Json to_json(const HeisenbergReport& r);
Json to_json(const CovarianceReport& r);
Json to_json(const CowlingPriceResult& r);
Json to_json(const GelfandShilovResult& r);
Json to_json(const GelfandShilovAmbiguityResult& r);
Json to_json(const HardyResult& r);
Json to_json(const HbaResult& r);
Json to_json(const DetectionResult& r);
Json to_json(const EqualityProbe& r);
Json to_json(const Lem0Report& r);
Json to_json(const IdentityCheck& r);
Json to_json(const MoyalNorms& r);

/// Line-oriented rendering: one `key=value` line per scalar, nested keys
/// joined with '.', numeric arrays as comma-separated values, matrices with
/// rows separated by ';'. Doubles use 17 significant digits.
std::string to_text(const Json& j);

/// Compact JSON text followed by a newline.
std::string to_json_text(const Json& j);

}  // namespace tfu
