#pragma once

// CSV / JSON writers. Every number is printed with 17 significant digits;
// CSV files carry a header row and LF line endings.

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hitloc/capacity.hpp"
#include "hitloc/entropy.hpp"
#include "hitloc/ndfhl.hpp"
#include "hitloc/validation.hpp"

namespace hitloc::io {

/// "%.17g"; non-finite values print as nan / inf / -inf.
std::string format_number(double x);

/// JSON string literal with escapes.
std::string json_string(const std::string& s);

/// Header x1,...,xp then one row per draw.
void write_samples_csv(std::ostream& os, const SampleBatch& batch);

/// {"d", "lambda", "u", "seed", "count"}.
void write_sample_metadata_json(std::ostream& os, const SampleBatch& batch);

/// Metadata object plus a "points" array of rows.
void write_samples_json(std::ostream& os, const SampleBatch& batch);

/// d,lambda,u,h,method,error
void write_entropy_csv(std::ostream& os, std::span<const EntropyEstimate> rows);
void write_entropy_json(std::ostream& os, std::span<const EntropyEstimate> rows);

/// d,lambda,u,P,upper,lower,gap,c_star
void write_capacity_csv(std::ostream& os, std::span<const CapacityReport> rows);
void write_capacity_json(std::ostream& os, std::span<const CapacityReport> rows);

/// d,lambda,u,offset
void write_offset_csv(std::ostream& os, int d, double lambda, std::span<const std::pair<double, double>> curve);
void write_offset_json(std::ostream& os, int d, double lambda, std::span<const std::pair<double, double>> curve);

/// One JSON object per line: check_name, statistic, threshold, pass, metadata.
void write_validation_jsonl(std::ostream& os, std::span<const ValidationReport> reports);

}  // namespace hitloc::io
