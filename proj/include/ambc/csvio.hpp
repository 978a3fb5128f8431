#pragma once

#include "ambc/metrics.hpp"

#include <string>
#include <vector>

namespace ambc {

// %.9g formatting; NaN prints as "nan".
std::string format_g9(double v);

std::string csv_header();
std::string csv_row(const MetricsRecord& r);

// Header plus one row per record. Throws std::runtime_error on unwritable
// paths. Output is byte-deterministic for a fixed record list.
void emit_csv(const std::vector<MetricsRecord>& records, const std::string& path);

}  // namespace ambc
