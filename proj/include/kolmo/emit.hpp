#pragma once

#include <string>
#include <vector>

#include "kolmo/portrait.hpp"
#include "kolmo/report.hpp"
#include "kolmo/sotomayor.hpp"

namespace kolmo {

enum class Format { Csv, Svg, Text };

/// Throws ValidationError for anything but csv, svg, text.
Format parse_format(const std::string& s);

/// Shortest decimal that round-trips; empty for NaN.
std::string format_double(double v);

std::string sweep_csv(const SweepGrid& grid);
std::string sweep_svg(const SweepGrid& grid, const std::vector<CurveOverlay>& overlays);
std::string sweep_text(const SweepGrid& grid);
std::string emit_sweep(const SweepGrid& grid, const std::vector<CurveOverlay>& overlays, Format f);

std::string portrait_csv(const Portrait& p);
std::string portrait_svg(const Portrait& p, const Window& window);
std::string portrait_text(const Portrait& p);
std::string emit_portrait(const Portrait& p, const Window& window, Format f);

/// One analyze cell as CSV (same columns as a sweep row) or text.
std::string analyze_document(const SweepCell& cell, DegeneracyCase c, Format f);

std::string curves_csv(const std::vector<CurveSample>& samples);

/// Writes to path, or stdout when path is empty or "-". Throws IoError.
void write_output(const std::string& path, const std::string& content);

}  // namespace kolmo
