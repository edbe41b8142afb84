#pragma once

#include <cstdint>
#include <vector>

#include "liebranch/character.hpp"
#include "liebranch/rootsys.hpp"
#include "liebranch/sl2branch.hpp"

namespace liebranch {

inline constexpr std::int64_t kDefaultMCap = 64;

// Per-node least n with an sl2-invariant in L(n omega_j); 0 when none was
// found up to `cap`.
struct MValues {
  std::vector<std::int64_t> values;
  std::int64_t cap = kDefaultMCap;

  bool all_positive() const;
};

// Optional shared state for the bound computations: a character cache and the
// number of worker threads used for independent highest weights.
struct ComputeOptions {
  CharacterCache* cache = nullptr;
  unsigned jobs = 1;
};

// Character of L(lambda) through the cache when one is configured.
std::shared_ptr<const Character> character_of(const RootSystem& rs, const Weight& lambda, const ComputeOptions& opts);

// j is 1-based.
std::int64_t m_value(const RootSystem& rs, const Sl2Embedding& emb, int j, std::int64_t cap,
                     const ComputeOptions& opts = {});
MValues m_values(const RootSystem& rs, const Sl2Embedding& emb, std::int64_t cap, const ComputeOptions& opts = {});

// Raised by b_bound when some m-value is not found within the cap.
class MissingMValueError : public std::runtime_error {
 public:
  MissingMValueError(int node, std::int64_t cap);
  int node() const { return node_; }

 private:
  int node_;
};

struct BoundResult {
  std::uint64_t b = 0;
  MValues m;
  std::vector<std::int64_t> box;  // C0 = prod_i [0, box_i)
  std::uint64_t max_g0 = 0;
  Weight argmax;                  // first lambda in C0 attaining max_g0
  std::size_t box_size = 0;
};

// b = max{g0(lambda) : lambda in C0} + 1 with C0 = {sum a_i omega_i : 0 <= a_i < m_i}.
BoundResult b_bound(const RootSystem& rs, const Sl2Embedding& emb, std::int64_t cap, const ComputeOptions& opts = {});

// Simple components of the Dynkin diagram of `type` with node k (1-based) removed.
std::vector<SimpleComponent> levi_ss_components(const SimpleComponent& type, int k);

struct ParabolicRow {
  int node = 0;
  std::vector<SimpleComponent> levi_ss_components;
  std::int64_t dim_g_mod_lss = 0;
  std::int64_t dim_X = 0;  // (dim_g_mod_lss + 1) / 2
};

std::vector<ParabolicRow> parabolic_table(const SimpleComponent& type);

// min over nodes of dim X^(k).
std::int64_t e_value(const SimpleComponent& type);

// Identifies coincident low-rank types: B1, C1 -> A1; C2 -> B2; D3 -> A3.
SimpleComponent normalize_type(const SimpleComponent& c);

// All simple types s of rank <= rank_cap with dim_k >= e(s), up to the
// identifications of normalize_type. Verifies that e grows strictly with the
// rank in every classical family and exceeds dim_k at rank_cap; throws
// std::invalid_argument otherwise.
std::vector<SimpleComponent> exclusion_set(std::int64_t dim_k, int rank_cap);

// "A1A5"-style label for a component list; empty list gives "-".
std::string components_label(const std::vector<SimpleComponent>& comps);

}  // namespace liebranch
