#pragma once

#include <string>
#include <vector>

#include "multiflag/arm.hpp"
#include "multiflag/hyperspherical.hpp"

namespace multiflag {

/// {"m": int, "k": int, "points": [[m+1 reals] x (k+1)]}; a document holds
/// one such object or an array of them. Unknown fields, wrong shapes and
/// non-unit links throw ParseError.
std::vector<ArmConfig> parse_configs(const std::string& text, double tol = kDefaultValidationTol);
std::vector<ArmConfig> load_configs(const std::string& path, double tol = kDefaultValidationTol);

/// Single object for one config, array otherwise.
std::string dump_configs(const std::vector<ArmConfig>& cs);

/// {"m": int, "k": int, "x0": [m+1 reals], "thetas": [[m reals] x k]}.
std::vector<HsPoint> parse_hs_points(const std::string& text);
std::string dump_hs_points(const std::vector<HsPoint>& hs);

/// Dispatches on the presence of "thetas"; chart points are mapped to
/// ambient configurations.
std::vector<ArmConfig> parse_any(const std::string& text, double tol = kDefaultValidationTol);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace multiflag
