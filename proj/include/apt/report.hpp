#pragma once

#include <optional>

#include <json.hpp>

#include "apt/axioms.hpp"
#include "apt/kernelizer.hpp"

namespace apt {

/// RunReport for one kernelization. Keys are sorted, so equal runs serialize identically.
/// `seconds` is only included when given.
nlohmann::json run_report(const Instance &inst, const Outcome &outcome, std::optional<double> seconds = std::nullopt);

nlohmann::json constants_report(const PropertySpec &pi, const PropertyConstants &c, int k_max);

nlohmann::json axiom_report_json(const PropertySpec &pi, int n_max, const AxiomReport &report,
                                 const HereditaryReport &hereditary);

} // namespace apt
