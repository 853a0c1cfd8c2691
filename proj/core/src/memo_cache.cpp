#include "torushom/memo_cache.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "torushom/errors.hpp"
#include "torushom/format.hpp"

namespace torushom {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json header() { return {{"torushom_memo", kFormatVersion}, {"fingerprint", convention_fingerprint()}}; }

void check_header(const std::string& line, const std::filesystem::path& path) {
  json h;
  try {
    h = json::parse(line);
  } catch (const json::exception&) {
    throw FingerprintMismatch("cache " + path.string() + " has no readable header");
  }
  if (!h.is_object() || h.value("torushom_memo", 0) != kFormatVersion ||
      h.value("fingerprint", std::string()) != convention_fingerprint()) {
    throw FingerprintMismatch("cache " + path.string() + " has convention fingerprint " +
                              h.value("fingerprint", std::string("?")) + ", expected " +
                              convention_fingerprint());
  }
}

MemoKey key_from(const json& rec) {
  MemoKey key;
  key.theory = parse_theory(rec.at("theory").get<std::string>());
  key.v = Word(rec.at("v").get<std::string>()).str();
  key.w = Word(rec.at("w").get<std::string>()).str();
  key.sigma = Permutation::parse(rec.at("sigma").get<std::string>()).images();
  key.to_state();  // validates the ones-count invariant
  return key;
}

}  // namespace

CacheLoadResult cache_load(const std::filesystem::path& path, MemoTable& table) {
  CacheLoadResult result;
  std::ifstream in(path);
  if (!in) return result;
  std::string line;
  if (!std::getline(in, line) || line.empty()) return result;
  check_header(line, path);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      MemoKey key = key_from(rec);
      table.insert(key, rat_func_from_json(rec.at("value")));
      ++result.loaded;
    } catch (const std::exception& e) {
      ++result.skipped;
      result.warnings.push_back(path.string() + ":" + std::to_string(lineno) + ": skipped corrupt record (" +
                                e.what() + ")");
    }
  }
  return result;
}

CacheStoreResult cache_store(const std::filesystem::path& path, const MemoTable& table) {
  CacheStoreResult result;
  std::set<MemoKey> present;
  bool has_header = false;
  {
    std::ifstream in(path);
    std::string line;
    if (in && std::getline(in, line) && !line.empty()) {
      check_header(line, path);
      has_header = true;
      while (std::getline(in, line)) {
        try {
          present.insert(key_from(json::parse(line)));
        } catch (const std::exception&) {
          // corrupt lines are ignored here and reported by cache_load
        }
      }
    }
  }
  std::ofstream out(path, has_header ? std::ios::app : std::ios::trunc);
  if (!out) throw InvalidInput("cannot write cache file " + path.string());
  if (!has_header) out << header().dump() << '\n';
  for (const auto& [key, value] : table.entries()) {
    if (present.count(key)) {
      ++result.already_present;
      continue;
    }
    json rec = {{"theory", std::string(to_string(key.theory))},
                {"v", key.v},
                {"w", key.w},
                {"sigma", Permutation(key.sigma).to_string()},
                {"value", to_json(value)}};
    out << rec.dump() << '\n';
    ++result.appended;
  }
  if (!out) throw InvalidInput("error while writing cache file " + path.string());
  return result;
}

}  // namespace torushom
