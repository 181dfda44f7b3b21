#include "hitloc/io.hpp"

#include <cmath>
#include <cstdio>

namespace hitloc::io {

namespace {

// JSON has no inf/nan literals.
std::string json_number(double x) { return std::isfinite(x) ? format_number(x) : "null"; }

void write_params_fields(std::ostream& os, const NdfhlParams& params) {
  os << "\"d\":" << params.d << ",\"lambda\":" << json_number(params.lambda) << ",\"u\":" << json_number(params.u);
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

void write_samples_csv(std::ostream& os, const SampleBatch& batch) {
  const int p = batch.dim();
  for (int k = 0; k < p; ++k) os << (k ? "," : "") << 'x' << (k + 1);
  os << '\n';
  for (std::size_t i = 0; i < batch.count; ++i) {
    const auto row = batch.row(i);
    for (int k = 0; k < p; ++k) os << (k ? "," : "") << format_number(row[k]);
    os << '\n';
  }
}

void write_sample_metadata_json(std::ostream& os, const SampleBatch& batch) {
  os << '{';
  write_params_fields(os, batch.params);
  os << ",\"seed\":" << batch.seed << ",\"count\":" << batch.count << "}\n";
}

void write_samples_json(std::ostream& os, const SampleBatch& batch) {
  const int p = batch.dim();
  os << '{';
  write_params_fields(os, batch.params);
  os << ",\"seed\":" << batch.seed << ",\"count\":" << batch.count << ",\"points\":[";
  for (std::size_t i = 0; i < batch.count; ++i) {
    os << (i ? ",[" : "[");
    const auto row = batch.row(i);
    for (int k = 0; k < p; ++k) os << (k ? "," : "") << json_number(row[k]);
    os << ']';
  }
  os << "]}\n";
}

void write_entropy_csv(std::ostream& os, std::span<const EntropyEstimate> rows) {
  os << "d,lambda,u,h,method,error\n";
  for (const EntropyEstimate& e : rows) {
    os << e.params.d << ',' << format_number(e.params.lambda) << ',' << format_number(e.params.u) << ','
       << format_number(e.value) << ',' << method_name(e.method) << ',' << format_number(e.error) << '\n';
  }
}

void write_entropy_json(std::ostream& os, std::span<const EntropyEstimate> rows) {
  os << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EntropyEstimate& e = rows[i];
    os << (i ? ",{" : "{");
    write_params_fields(os, e.params);
    os << ",\"h\":" << json_number(e.value) << ",\"method\":" << json_string(std::string(method_name(e.method)))
       << ",\"error\":" << json_number(e.error) << '}';
  }
  os << "]\n";
}

void write_capacity_csv(std::ostream& os, std::span<const CapacityReport> rows) {
  os << "d,lambda,u,P,upper,lower,gap,c_star\n";
  for (const CapacityReport& r : rows) {
    os << r.params.d << ',' << format_number(r.params.lambda) << ',' << format_number(r.params.u) << ','
       << format_number(r.power) << ',' << format_number(r.upper) << ',' << format_number(r.lower) << ','
       << format_number(r.gap) << ',' << format_number(r.offset_c_star) << '\n';
  }
}

void write_capacity_json(std::ostream& os, std::span<const CapacityReport> rows) {
  os << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CapacityReport& r = rows[i];
    os << (i ? ",{" : "{");
    write_params_fields(os, r.params);
    os << ",\"P\":" << json_number(r.power) << ",\"upper\":" << json_number(r.upper)
       << ",\"lower\":" << json_number(r.lower) << ",\"gap\":" << json_number(r.gap)
       << ",\"c_star\":" << json_number(r.offset_c_star) << '}';
  }
  os << "]\n";
}

void write_offset_csv(std::ostream& os, int d, double lambda, std::span<const std::pair<double, double>> curve) {
  os << "d,lambda,u,offset\n";
  for (const auto& [u, offset] : curve) {
    os << d << ',' << format_number(lambda) << ',' << format_number(u) << ',' << format_number(offset) << '\n';
  }
}

void write_offset_json(std::ostream& os, int d, double lambda, std::span<const std::pair<double, double>> curve) {
  os << '[';
  for (std::size_t i = 0; i < curve.size(); ++i) {
    os << (i ? ",{" : "{") << "\"d\":" << d << ",\"lambda\":" << json_number(lambda)
       << ",\"u\":" << json_number(curve[i].first) << ",\"offset\":" << json_number(curve[i].second) << '}';
  }
  os << "]\n";
}

void write_validation_jsonl(std::ostream& os, std::span<const ValidationReport> reports) {
  for (const ValidationReport& r : reports) {
    os << "{\"check_name\":" << json_string(r.check_name) << ",\"statistic\":" << json_number(r.statistic)
       << ",\"threshold\":" << json_number(r.threshold) << ",\"pass\":" << (r.pass ? "true" : "false")
       << ",\"metadata\":{";
    for (std::size_t i = 0; i < r.metadata.size(); ++i) {
      os << (i ? "," : "") << json_string(r.metadata[i].first) << ':' << json_number(r.metadata[i].second);
    }
    os << "}}\n";
  }
}

}  // namespace hitloc::io
