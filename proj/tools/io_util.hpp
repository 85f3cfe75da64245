#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "twotone/errors.hpp"

namespace twotone::cli {

// "start:stop:count[:log|lin]" -> sampled grid. A count of 1 yields {start}.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log = false;

  std::vector<double> sample() const {
    if (count < 1) throw InvalidInput("grid count must be >= 1");
    if (count == 1) return {start};
    if (log && !(start > 0.0 && stop > 0.0))
      throw InvalidInput("log grids need positive endpoints");
    std::vector<double> g(count);
    if (log) {
      const double la = std::log(start), lb = std::log(stop);
      for (int i = 0; i < count; ++i)
        g[i] = std::exp(la + (lb - la) * i / (count - 1));
    } else {
      for (int i = 0; i < count; ++i)
        g[i] = start + (stop - start) * i / (count - 1);
    }
    return g;
  }
};

inline GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char mode[8] = "lin";
  const int n = std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &g.start, &g.stop,
                            &g.count, mode);
  if (n < 3) throw InvalidInput("grid spec must be start:stop:count[:log|lin]");
  const std::string m(mode);
  if (m == "log") {
    g.log = true;
  } else if (m != "lin") {
    throw InvalidInput("grid scale must be 'log' or 'lin'");
  }
  return g;
}

// Deterministic CSV: comma separators, 12 significant digits, LF endings,
// no timestamps. Run metadata belongs in the JSON summary instead.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::string& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw InvalidInput("cannot open " + path.string());
    out_ << header << "\n";
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ',';
      out_ << format(values[i]);
    }
    out_ << "\n";
  }

  static std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
  }

 private:
  std::ofstream out_;
};

}  // namespace twotone::cli
