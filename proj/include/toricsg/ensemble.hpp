#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricsg/lattice.hpp"

namespace toricsg {

struct ExhaustedSampling : std::runtime_error {
    ExhaustedSampling() : std::runtime_error("could not sample enough valid instances") {}
};

struct InstanceSpec {
    std::string label;
    std::vector<Vec2> generators;
};

/// Deterministic ensemble of valid instances: draws 2-6 generators uniformly
/// from [-coord_max, coord_max]^2 minus the origin and keeps the sets that
/// pass validation. Identical seeds reproduce identical instances.
std::vector<InstanceSpec> generate_ensemble(int count, std::uint64_t seed, i64 coord_max);

}  // namespace toricsg
