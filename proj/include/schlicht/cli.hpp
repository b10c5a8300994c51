#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with argument vectors and capture both streams.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schlicht/class_params.hpp"

namespace schlicht::cli {

enum class Command { Bound, Classify, Extremal, Verify, Jack, Report };
enum class Format { Json, Csv, Table };

struct RunConfig {
  Command command = Command::Bound;
  SubclassSpec subclass;
  std::string params_json;  // optional file overriding gamma/lambda/A/B
  int n_lo = 2;
  int n_hi = 10;
  std::optional<long> order;       // default 64; 768 for jack checks
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;      // default 1000 for verify, 200 for jack/report
  int degree = 4;
  int n_max = 10;
  std::string which = "auto";  // extremal kind
  std::string check;           // jack check
  double b = 0.0;              // G_b radius; 0 selects |1 + A|/4
  double kbeta = 1.0;
  std::string input;           // series JSON for jack checks
  std::vector<double> radii{0.5, 0.9, 0.95};
  int angles = 2048;
  Format format = Format::Json;
  std::string output_path;
  unsigned threads = 0;
};

// Exit codes: 0 success, 1 usage or parameter-domain error, 2 numerical error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// "re,im" (or a bare real) to a complex number; throws ParameterDomainError.
std::complex<double> parse_complex(std::string_view text);
// Inverse of parse_complex using %.15g for each part.
std::string format_complex(std::complex<double> z);
// "lo:hi" inclusive, or a single integer.
std::pair<int, int> parse_range(std::string_view text);

}  // namespace schlicht::cli
