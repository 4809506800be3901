#pragma once

// Text renderings shared by the CLI and the tests: plain, json (one object
// per line) and csv.

#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "donut/census.hpp"
#include "donut/core.hpp"
#include "donut/sweep.hpp"

namespace donut {

enum class OutputFormat { Plain, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

std::string format_validation(const Quad& q, const ValidationReport& report, OutputFormat fmt);

/// Configurations of D with their classification. CSV columns are
/// D,a,b,x,y,coprime.
std::string format_configurations(u64 D, const std::vector<DonutConfig>& configs,
                                  const DonutClass& cls, OutputFormat fmt);

/// One classification; CSV rows are D,class,coprime_count,total_count,
/// coprime_orbit_count. `header` controls the CSV header line.
std::string format_classification(u64 D, const DonutClass& cls, OutputFormat fmt, bool header);

/// Square or square-holed donuts of side n. CSV columns are n,a,b,x,y.
std::string format_square_family(std::string_view family, u64 n,
                                 const std::vector<DonutConfig>& donuts, OutputFormat fmt);

/// Sequence terms; multiplicities are included when given (same length).
std::string format_sequence(u64 limit, const std::vector<u64>& terms,
                            const std::vector<u64>* multiplicity, OutputFormat fmt);

std::string format_report(const VerificationReport& report, OutputFormat fmt);

/// Exterior a x b with the x x y hole centred, scaled by `scale` pixels per
/// unit, sides labelled.
std::string render_svg(const DonutConfig& d, u64 scale);

}  // namespace donut
