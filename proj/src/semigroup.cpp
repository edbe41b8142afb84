#include "liebranch/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "liebranch/checked.hpp"

namespace liebranch {
namespace {

// Dense reachability grid over the box prod_i [0, extent_i].
class Grid {
 public:
  explicit Grid(std::vector<std::int64_t> extent) : extent_(std::move(extent)), stride_(extent_.size()) {
    std::size_t cells = 1;
    for (std::size_t i = extent_.size(); i-- > 0;) {
      stride_[i] = cells;
      cells = static_cast<std::size_t>(checked::mul(static_cast<std::uint64_t>(cells),
                                                    static_cast<std::uint64_t>(extent_[i] + 1)));
    }
    if (cells > (std::size_t{1} << 32)) throw std::invalid_argument("semigroup box too large");
    reach_.assign(cells, false);
  }

  std::size_t cells() const { return reach_.size(); }

  LatticePoint point(std::size_t index) const {
    LatticePoint p(extent_.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      p[i] = static_cast<std::int64_t>(index / stride_[i]);
      index %= stride_[i];
    }
    return p;
  }

  std::size_t index(std::span<const std::int64_t> p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < p.size(); ++i) idx += static_cast<std::size_t>(p[i]) * stride_[i];
    return idx;
  }

  // Cells in increasing index order: v - g always has a smaller index.
  void fill(const std::vector<LatticePoint>& gens) {
    reach_[0] = true;
    LatticePoint v;
    for (std::size_t idx = 1; idx < reach_.size(); ++idx) {
      v = point(idx);
      for (const auto& g : gens) {
        bool fits = true;
        for (std::size_t i = 0; i < g.size() && fits; ++i) fits = g[i] <= v[i];
        if (fits && reach_[idx - index(g)]) {
          reach_[idx] = true;
          break;
        }
      }
    }
  }

  bool reachable(std::size_t idx) const { return reach_[idx]; }

 private:
  std::vector<std::int64_t> extent_;
  std::vector<std::size_t> stride_;
  std::vector<bool> reach_;
};

}  // namespace

GeneratorSet::GeneratorSet(std::vector<LatticePoint> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("generator set is empty");
  dim_ = gens_.front().size();
  if (dim_ == 0) throw std::invalid_argument("generators must have positive dimension");
  for (const auto& g : gens_) {
    if (g.size() != dim_) throw std::invalid_argument("generators have mismatched lengths");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x < 0; })) {
      throw std::invalid_argument("generator entries must be nonnegative");
    }
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) {
      throw std::invalid_argument("zero vector is not a valid generator");
    }
  }
}

std::int64_t GeneratorSet::max_entry() const {
  std::int64_t m = 0;
  for (const auto& g : gens_) m = std::max(m, *std::max_element(g.begin(), g.end()));
  return m;
}

bool GeneratorSet::has_axis_generators() const {
  for (std::size_t axis = 0; axis < dim_; ++axis) {
    const bool found = std::any_of(gens_.begin(), gens_.end(), [&](const LatticePoint& g) {
      for (std::size_t i = 0; i < dim_; ++i)
        if ((i == axis) != (g[i] != 0)) return false;
      return true;
    });
    if (!found) return false;
  }
  return true;
}

bool member(const GeneratorSet& gs, std::span<const std::int64_t> v) {
  if (v.size() != gs.dim()) throw std::invalid_argument("point dimension differs from generator dimension");
  if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; })) {
    throw std::invalid_argument("point must lie in N^r");
  }
  Grid grid(std::vector<std::int64_t>(v.begin(), v.end()));
  grid.fill(gs.gens());
  return grid.reachable(grid.cells() - 1);
}

ComplementResult complement(const GeneratorSet& gs, std::int64_t box_bound) {
  if (box_bound < 0) throw std::invalid_argument("box bound must be nonnegative");
  if (!gs.has_axis_generators()) {
    throw std::invalid_argument("complement needs a generator on every coordinate axis");
  }
  Grid grid(std::vector<std::int64_t>(gs.dim(), box_bound));
  grid.fill(gs.gens());

  ComplementResult result;
  result.box_bound = box_bound;
  result.certified = true;
  const std::int64_t shell = box_bound - gs.max_entry();
  for (std::size_t idx = 0; idx < grid.cells(); ++idx) {
    if (grid.reachable(idx)) continue;
    LatticePoint p = grid.point(idx);
    if (std::any_of(p.begin(), p.end(), [&](std::int64_t x) { return x > shell; })) result.certified = false;
    result.points.push_back(std::move(p));
  }
  // Index order is already lexicographic.
  return result;
}

}  // namespace liebranch
