#pragma once

#include <json.hpp>

#include "burniat/branch.hpp"
#include "burniat/cohomology.hpp"
#include "burniat/invariants.hpp"
#include "burniat/picard.hpp"
#include "burniat/plane.hpp"

namespace burniat {

using ojson = nlohmann::ordered_json;

// Rational numbers travel as {"n": "...", "d": "..."} with decimal strings,
// so nothing is rounded.
ojson rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

ojson point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const nlohmann::json& j);

ojson divisor_to_json(const DivisorClass& c);
DivisorClass divisor_from_json(const nlohmann::json& j);

// {case, params, extra_points, lines: [{label, coeffs}]}
ojson config_to_json(const BurniatConfig& cfg);
BurniatConfig config_from_json(const nlohmann::json& j);

ojson scan_to_json(const ArrangementScan& scan);
ojson identity_checks_to_json(const std::vector<IdentityCheck>& checks);
ojson table_to_json(const EigenspaceTable& table);
ojson trial_reports_to_json(const std::vector<IdentityTrialReport>& reports);

} // namespace burniat
