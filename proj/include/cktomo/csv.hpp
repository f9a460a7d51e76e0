#pragma once

// CSV output with a single #-prefixed header line carrying the column names
// and the scenario hash.  Floats are printed with %.17g so files round-trip
// to the exact binary values and reruns are byte-identical.

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace cktomo::csv {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Writer {
 public:
  Writer(std::ostream& out, const std::vector<std::string>& columns,
         std::uint64_t scenario_hash)
      : out_(out) {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(scenario_hash));
    out_ << "# columns=";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << columns[i];
    }
    out_ << " scenario=fnv1a:" << hash << '\n';
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << format_double(values[i]);
    }
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

}  // namespace cktomo::csv
