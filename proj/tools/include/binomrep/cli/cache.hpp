#pragma once

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "binomrep/search.hpp"

namespace binomrep::cli {

/// Malformed or unverifiable cache content. The message names the line.
class CacheError : public std::runtime_error {
 public:
  CacheError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CacheIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Appends one JSON object per line.
void append_cache(const std::filesystem::path& path, const std::vector<Solution>& solutions);

/// Reads every line back and re-verifies it with equality_check. A missing or
/// empty file yields an empty set.
std::vector<Solution> read_cache(const std::filesystem::path& path);

/// append_cache followed by read_cache.
std::vector<Solution> cache_roundtrip(const std::filesystem::path& path, const std::vector<Solution>& solutions);

}  // namespace binomrep::cli
