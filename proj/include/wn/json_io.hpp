#pragma once

#include "wn/classifier.hpp"
#include "wn/config.hpp"
#include "wn/squarecomm.hpp"
#include "wn/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wn::io {

using nlohmann::json;

json element_to_json(const WeylElement& x);
WeylElement element_from_json(const json& j, int rank);
json descriptor_to_json(const RepDescriptor& d);
RepDescriptor descriptor_from_json(const json& j);
json verdict_to_json(const Verdict& v);
json checks_to_json(const std::vector<CheckResult>& checks);

/// Subcommand reports. Every report is a self-describing JSON object; the
/// schemas are documented in docs/schemas.md.
json classes_report(const GroupSpec& spec, const Config& cfg);
json centralizer_report(const GroupSpec& spec, const std::string& perm_text,
                        const std::string& sign_text, const Config& cfg, bool full);
json phi_report(int rank, const std::string& sigma_text, const std::string& tau_text);
json xi_report(const std::string& type_text, const std::vector<std::string>& t_specs,
               const std::vector<std::string>& rho_specs);
json squarecomm_report(const GroupSpec& spec, const Config& cfg, bool include_trivial);
json classify_report(const json& input);
json verify_report(const SuiteRequest& req);

}  // namespace wn::io
