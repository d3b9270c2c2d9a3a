#ifndef CONDLAB_CSVIO_HPP
#define CONDLAB_CSVIO_HPP

#include <string>
#include <vector>

#include "condlab/conditionality.hpp"

namespace condlab {

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_double(double v);

/// Writes text to path atomically (temp file + rename).
void write_atomic(const std::string& path, const std::string& content);

/// GrowthSeries CSV: header `quantity,system,m,value,kind`, one row per entry.
std::string growth_series_csv(const std::vector<GrowthSeries>& series);
std::vector<GrowthSeries> parse_growth_series_csv(const std::string& text);

/// Two-column CSV with a custom header.
std::string table_csv(const std::string& header, const std::vector<std::pair<double, double>>& rows);

}  // namespace condlab

#endif
