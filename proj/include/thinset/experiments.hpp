#pragma once

#include <string>
#include <vector>

#include "thinset/config.hpp"
#include "thinset/report.hpp"

namespace thinset {

/// "E1" .. "E11".
const std::vector<std::string>& experiment_ids();

/// Runs one named experiment. Every parameter read from `cfg` (or defaulted)
/// is echoed into the report's config, and all randomness derives from
/// cfg.seed(), so equal configs give equal reports.
ExperimentReport run_experiment(const std::string& id, const Config& cfg);

}  // namespace thinset
