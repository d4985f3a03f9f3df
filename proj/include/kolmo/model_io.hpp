#pragma once

#include <filesystem>
#include <string>

#include "kolmo/model.hpp"

namespace kolmo {

/// Model description document (JSON syntax):
///
///   { "radius": 0.1, "max_degree": 3,
///     "theta": {"0,1": 3.0}, "gamma": {"0,0": -1.0}, "delta": {...},
///     "M": {...}, "N": {...}, "S": {...}, "P": {...} }
///
/// Keys "i,j" name the monomial mu1^i mu2^j. Missing coefficient objects are zero
/// polynomials; "max_degree" defaults to 3. Writing emits nonzero coefficients only,
/// with shortest round-trip number formatting, so read(write(read(x))) == read(x).
SystemModel parse_model(const std::string& text);
std::string serialize_model(const SystemModel& model);

SystemModel load_model(const std::filesystem::path& path);
void save_model(const SystemModel& model, const std::filesystem::path& path);

}  // namespace kolmo
