// Seeded replays of the library's theorems over the catalog plus fuzzed instances.
#ifndef HOPFRB_REPLAY_HPP
#define HOPFRB_REPLAY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hopfrb/catalog.hpp"

namespace hopfrb {

inline constexpr std::string_view version = "0.1.0";

struct ReplayOptions {
  std::uint64_t seed = default_seed;
  long trials = 100;
};

struct TheoremReplay {
  std::string id;
  std::string statement;
  std::vector<Report> reports;  // sorted by instance

  Verdict result() const;
  std::size_t passed() const;
};

/// Sorted.
const std::vector<std::string>& replay_ids();
bool is_replay_id(std::string_view id);

/// Throws Error on an unknown id.
TheoremReplay replay(const std::string& id, const Catalog<Rational>& c, const ReplayOptions& opt);
std::vector<TheoremReplay> replay_all(const Catalog<Rational>& c, const ReplayOptions& opt);

nlohmann::json to_json(const TheoremReplay& t);
/// No timestamps: equal inputs give byte-identical dumps.
nlohmann::json replay_document(const std::vector<TheoremReplay>& ts, const ReplayOptions& opt);

}  // namespace hopfrb

#endif  // HOPFRB_REPLAY_HPP
