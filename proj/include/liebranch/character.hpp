#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "liebranch/rootsys.hpp"

namespace liebranch {

// Dominant weight multiplicities of the irreducible module L(highest_weight).
// Weights of multiplicity zero are absent.
struct Character {
  Weight highest_weight;
  std::map<Weight, std::uint64_t> mults;

  // Sum over dominant keys of |W mu| * m_mu.
  std::uint64_t dimension(const RootSystem& rs) const;

  friend bool operator==(const Character&, const Character&) = default;
};

// A dominant weight mu <= lambda together with lambda - mu in simple-root coordinates.
struct DominantWeight {
  Weight weight;
  RootCoords depth;
};

// All dominant mu with lambda - mu a nonnegative integer combination of simple
// roots, ordered by height of lambda - mu and then lexicographically.
std::vector<DominantWeight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

// Freudenthal's recursion, exact in integers.
Character dominant_character(const RootSystem& rs, const Weight& lambda);

// Alternating sum over W divided by the Weyl denominator. Oracle only: the
// whole Weyl group is enumerated, so |W| must not exceed weyl_group_cap.
inline constexpr std::uint64_t kDefaultWeylGroupCap = 1152;
Character weyl_alternating_character(const RootSystem& rs, const Weight& lambda,
                                     std::uint64_t weyl_group_cap = kDefaultWeylGroupCap);

// Value of h on lambda, where h is fixed by marks_i = alpha_i(h). Throws
// std::domain_error when the value is not an integer.
std::int64_t evaluate_highest_weight(const RootSystem& rs, const Weight& lambda, std::span<const std::int64_t> marks);

// Multiset {mu(h)} over all weights mu of L(lambda), with multiplicity, as value -> count.
using WeightValues = std::map<std::int64_t, std::uint64_t>;
WeightValues full_weight_values(const RootSystem& rs, const Character& ch, std::span<const std::int64_t> marks);
WeightValues full_weight_values(const RootSystem& rs, const Weight& lambda, std::span<const std::int64_t> marks);

// {"lambda": [...], "mults": [[[coords...], m], ...]}
nlohmann::json to_json(const Character& ch);
Character character_from_json(const nlohmann::json& j);

// Memo table for characters keyed by (root system fingerprint, lambda). Safe
// for concurrent readers; writers are serialized. When a directory is given,
// entries are also persisted as one JSON document per character, written
// atomically through a temporary file and rename.
class CharacterCache {
 public:
  static constexpr int kFormatVersion = 1;

  CharacterCache() = default;
  explicit CharacterCache(std::optional<std::filesystem::path> dir, bool verify = false);

  std::shared_ptr<const Character> get(const RootSystem& rs, const Weight& lambda);

  std::size_t size() const;
  std::size_t disk_hits() const { return disk_hits_; }
  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  // Stable cache file name for a key.
  static std::string file_name(const std::string& fingerprint, const Weight& lambda);

 private:
  std::shared_ptr<const Character> load(const RootSystem& rs, const Weight& lambda) const;
  void store(const RootSystem& rs, const Character& ch) const;

  std::optional<std::filesystem::path> dir_;
  bool verify_ = false;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const Character>> table_;
  std::atomic<std::size_t> disk_hits_{0};
};

// Raised when --verify-cache finds a persisted entry that differs from recomputation.
class CacheMismatchError : public std::runtime_error {
 public:
  explicit CacheMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liebranch
