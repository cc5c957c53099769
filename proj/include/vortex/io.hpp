#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vortex/analysis.hpp"

namespace vortex {

// Column-named numeric table; the single on-disk series format.
struct SeriesTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Writes header + rows as comma-separated text with 17 significant
// digits (binary64 round-trip exact). Throws on unwritable paths.
void emit_series(const SeriesTable& table, const std::filesystem::path& path);

SeriesTable field_history_table(const FieldHistory& history);
SeriesTable second_order_history_table(const SecondOrderHistory& history);
SeriesTable curve_history_table(const CurveHistory& history);
SeriesTable dispersion_table(const std::vector<DispersionSample>& samples);

std::string sha256_file(const std::filesystem::path& path);

} // namespace vortex
