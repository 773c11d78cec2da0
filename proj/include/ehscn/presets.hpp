#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ehscn {

/// Named reference grids for the shipped studies; see the preset-runs
/// section of the README for the windows they are calibrated against.
///
///   lambda-dense  13 log-spaced lambda_s values, 3e-3 .. 3 per m^2,
///                 paired with an 8 m window (mean SBS counts ~0.6..600,
///                 reaching well past the critical-distance regime)
///   beta-coarse   0.0 .. 1.0, step 0.1 (20 m window)
///   beta-assoc    0.0 .. 0.6, step 0.1 (association comparison, 20 m
///                 window; beyond 0.6 the off-grid-only policy runs out
///                 of candidates)
std::vector<double> preset_grid(std::string_view name);

std::vector<std::string> preset_names();

/// Window radius the lambda-dense grid is calibrated for.
inline constexpr double kLambdaStudyRegionRadiusM = 8.0;
/// Window radius of the beta studies.
inline constexpr double kBetaStudyRegionRadiusM = 20.0;
/// Reference lambda_s values for the beta studies: a density where
/// harvesting is plentiful and a sparser one where it is the bottleneck.
inline constexpr double kBetaStudyLambdaS = 0.05;
inline constexpr double kBetaStudyLambdaSSparse = 0.004;
/// Density used for the association comparison.
inline constexpr double kAssocStudyLambdaS = 0.0125;

} // namespace ehscn
