#pragma once

#include "levyclt/scaling.hpp"

#include <map>
#include <optional>
#include <string>

namespace levyclt {

// key = value lines, '#' comments; later keys win. Values are decimal
// floats or whitespace/comma separated lists.
std::map<std::string, std::string> parse_key_values(const std::string& text);
std::map<std::string, std::string> load_key_values(const std::string& path);

struct TripletConfig {
    LevyTriplet triplet;
    std::optional<double> kappa; // explicit override, else choose_kappa
};

// Keys: family (powerlog | boundedshell | zero), sigma_shell, beta, dim,
// outer_radius, gaussian_cov (row-major list, default zero), kappa.
TripletConfig triplet_from_key_values(const std::map<std::string, std::string>& kv);
TripletConfig load_triplet_config(const std::string& path);

} // namespace levyclt
