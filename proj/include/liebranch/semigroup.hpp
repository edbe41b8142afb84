#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace liebranch {

using LatticePoint = std::vector<std::int64_t>;

// Generators of a finitely generated subsemigroup of N^r.
class GeneratorSet {
 public:
  // Throws std::invalid_argument on an empty list, a zero vector, a negative
  // entry or mismatched lengths.
  explicit GeneratorSet(std::vector<LatticePoint> gens);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& gens() const { return gens_; }
  // Largest coordinate over all generators.
  std::int64_t max_entry() const;
  // True when every axis carries a generator supported on that axis alone.
  bool has_axis_generators() const;

 private:
  std::vector<LatticePoint> gens_;
  std::size_t dim_ = 0;
};

// v in sum N * gens, by reachability over the box [0, v].
bool member(const GeneratorSet& gs, std::span<const std::int64_t> v);

struct ComplementResult {
  std::vector<LatticePoint> points;  // lexicographically sorted non-members
  bool certified = false;
  std::int64_t box_bound = 0;
};

// Non-members inside [0, box_bound]^r. `certified` is set when every point of
// the outer shell {v : some v_i > box_bound - max_entry} is a member; together
// with the axis generators this covers every point outside the box.
// Throws std::invalid_argument when some axis has no axis generator.
ComplementResult complement(const GeneratorSet& gs, std::int64_t box_bound);

inline constexpr std::int64_t kDefaultBoxBound = 64;

}  // namespace liebranch
