#include "binomrep/cli/cache.hpp"

#include <fstream>

#include "binomrep/cli/serialize.hpp"

namespace binomrep::cli {

CacheError::CacheError(std::size_t line, const std::string& reason)
    : std::runtime_error("cache line " + std::to_string(line) + ": " + reason), line_(line) {}

void append_cache(const std::filesystem::path& path, const std::vector<Solution>& solutions) {
  std::ofstream os(path, std::ios::app);
  if (!os) throw CacheIoError("cannot open cache for writing: " + path.string());
  for (const auto& s : solutions) os << to_json(s).dump() << '\n';
  os.flush();
  if (!os) throw CacheIoError("write failed: " + path.string());
}

std::vector<Solution> read_cache(const std::filesystem::path& path) {
  std::vector<Solution> out;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return out;
  std::ifstream is(path);
  if (!is) throw CacheIoError("cannot open cache for reading: " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(is, line)) {
    ++number;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw CacheError(number, "malformed JSON");
    }
    try {
      out.push_back(solution_from_json(j));
    } catch (const std::exception& e) {
      throw CacheError(number, e.what());
    }
  }
  if (is.bad()) throw CacheIoError("read failed: " + path.string());
  return out;
}

std::vector<Solution> cache_roundtrip(const std::filesystem::path& path, const std::vector<Solution>& solutions) {
  append_cache(path, solutions);
  return read_cache(path);
}

}  // namespace binomrep::cli
