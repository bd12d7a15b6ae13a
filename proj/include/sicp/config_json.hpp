#pragma once

// Configuration files: {"n": 3, "points": [[[re, im], ...], ...]}

#include "sicp/projective.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace sicp {

/// Parses and canonicalizes. Throws std::runtime_error on malformed input.
Configuration config_from_json(std::string_view text);
Configuration read_config(const std::filesystem::path& path);

/// Canonical representatives, 17 significant digits.
std::string config_to_json(const Configuration& c);
void write_config(const std::filesystem::path& path, const Configuration& c);

}  // namespace sicp
