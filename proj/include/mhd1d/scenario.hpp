#pragma once

#include <string>

#include "mhd1d/model.hpp"
#include "mhd1d/stepper.hpp"
#include "mhd1d/types.hpp"

namespace mhd1d::scenario {

// A full run description parsed from the sectioned key = value config format.
// Sections: [params] [grid] [initial] [stepping] [output] [verify].
// Unknown sections or keys are rejected with the file name and line number;
// "kappa" in particular is rejected with a pointer at the zero-heat-
// conductivity scope of the model.
struct ScenarioConfig {
    Params params;
    Grid grid;
    model::InitialFamily initial;
    stepper::StepConfig stepping;

    std::string out_dir = "out";
    bool write_snapshots = true;

    bool verify_h2 = true;
    bool verify_F_eq = true;
    bool verify_G_eq = true;
    bool verify_reconstructions = true;
    bool verify_flow_map = true;
    double energy_drift_tol = 1e-3;
};

// Parses config text; `origin` names the source in error messages.
ScenarioConfig parse_config(const std::string& text, const std::string& origin);

ScenarioConfig load_config(const std::string& path);

}  // namespace mhd1d::scenario
