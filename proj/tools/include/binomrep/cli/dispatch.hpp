#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "binomrep/exact.hpp"

namespace binomrep::cli {

enum class Command { Zeta, Search, Family, Curve, Census, Intersect, Verify, Plot };
enum class OutputFormat { Json, Csv, Text };

struct LatticeBox {
  Int x_lo, x_hi, y_lo, y_hi;
};

struct RunConfig {
  Command command = Command::Zeta;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t a2 = 1;
  std::uint64_t b2 = 2;
  std::uint64_t y_max = 1;
  std::uint64_t x_max = 1;
  std::uint64_t i_max = 4;
  std::uint64_t m_min = 3;
  std::optional<Nat> t;
  std::optional<Nat> t_max;
  Rat precision = make_rat(1, Int("1000000000000000000000"));
  bool certify = false;
  std::optional<LatticeBox> lattice;
  Rat y_from = 0;
  Rat y_to = 20;
  Rat y_step = 1;
  std::optional<OutputFormat> format;  // per-command default when unset
  std::optional<std::string> cache_path;
  unsigned workers = 1;
};

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kIo = 3 };

struct DispatchResult {
  int status = kOk;
  std::string out;  // data for standard output
  std::string err;  // one-line diagnostic when status != 0
};

/// Runs one validated configuration. Output depends only on the config.
DispatchResult dispatch(const RunConfig& config);

/// Parses argv (without the program name), dispatches, and writes to the streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binomrep::cli
