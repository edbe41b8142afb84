#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "liebranch/rational.hpp"

namespace liebranch {

// Integer vector tagged with the basis it is expressed in, so that weights
// (fundamental-weight coordinates) and roots (simple-root coordinates) cannot
// be mixed up silently.
template <class Basis>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t n) : v_(n, 0) {}
  explicit Coords(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  Coords(std::initializer_list<std::int64_t> v) : v_(v) {}

  std::size_t size() const { return v_.size(); }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  const std::vector<std::int64_t>& values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  Coords& operator+=(const Coords& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Coords& operator*=(std::int64_t s) {
    for (auto& x : v_) x *= s;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(std::int64_t s, Coords a) { return a *= s; }

  bool is_zero() const {
    for (auto x : v_)
      if (x != 0) return false;
    return true;
  }
  bool all_nonnegative() const {
    for (auto x : v_)
      if (x < 0) return false;
    return true;
  }

  friend bool operator==(const Coords&, const Coords&) = default;
  friend auto operator<=>(const Coords&, const Coords&) = default;

 private:
  std::vector<std::int64_t> v_;
};

struct FundamentalBasis {};
struct SimpleRootBasis {};

// A weight in fundamental-weight coordinates: coords[i] = <mu, alpha_i^vee>.
using Weight = Coords<FundamentalBasis>;
// A root-lattice vector in simple-root coordinates.
using RootCoords = Coords<SimpleRootBasis>;

struct CoordsHash {
  template <class B>
  std::size_t operator()(const Coords<B>& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : c) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline bool is_dominant(const Weight& w) { return w.all_nonnegative(); }

std::string to_string(const Weight& w);
std::string to_string(const RootCoords& r);

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
  Family family = Family::A;
  int rank = 1;

  // Throws std::invalid_argument when the rank is not allowed for the family.
  void validate() const;
  std::string name() const;  // e.g. "G2"

  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
  friend auto operator<=>(const SimpleComponent&, const SimpleComponent&) = default;
};

// Parses "G2", "a3", "E8", ...
SimpleComponent parse_component(std::string_view text);
// Parses "A2", "A1xG2", "B3+A1" into a component list.
std::vector<SimpleComponent> parse_type(std::string_view text);
Family parse_family(std::string_view text);

// Dimension of the simple Lie algebra of the given type.
std::int64_t algebra_dimension(const SimpleComponent& c);

struct DynkinEdge {
  int from = 0;  // 0-based node indices, from < to
  int to = 0;
  int bond = 1;  // number of lines: 1, 2 or 3

  friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

// Root-system data for a semisimple type, immutable after build().
//
// Conventions:
//   cartan(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j),
//   so row i of the Cartan matrix is alpha_i written in fundamental weights.
//   half_norm(i) = (alpha_i, alpha_i) / 2, normalized per simple block so that
//   short roots have squared length 2. Then (alpha_i, alpha_j) = cartan(i, j) * half_norm(j)
//   and the half norms are the symmetrizer of the Cartan matrix.
//   Nodes are numbered as in Bourbaki inside each block; blocks are concatenated.
class RootSystem {
 public:
  // Throws std::invalid_argument on an empty list or an invalid rank.
  static RootSystem build(std::span<const SimpleComponent> components);
  static RootSystem build(std::initializer_list<SimpleComponent> components);
  static RootSystem build(std::string_view type);

  int rank() const { return rank_; }
  const std::vector<SimpleComponent>& components() const { return components_; }
  // "A2", "A1xG2": stable identifier of the type.
  const std::string& fingerprint() const { return fingerprint_; }

  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  std::vector<std::vector<int>> cartan_matrix() const;
  int half_norm(int i) const { return half_norms_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& half_norms() const { return half_norms_; }
  // Block index of node i.
  int block_of(int i) const { return block_of_[static_cast<std::size_t>(i)]; }

  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  const std::vector<DynkinEdge>& dynkin_edges() const { return edges_; }
  const Weight& rho() const { return rho_; }
  int max_height() const { return max_height_; }

  Weight zero_weight() const { return Weight(static_cast<std::size_t>(rank_)); }
  Weight fundamental_weight(int i) const;
  RootCoords simple_root(int i) const;

  // m_j = sum_i c_i cartan(i, j).
  Weight root_to_weight_coords(const RootCoords& root) const;
  // Exact inverse of root_to_weight_coords; fractional when mu is off the root lattice.
  std::vector<Rational> weight_to_root_coords(const Weight& mu) const;
  // Integral simple-root coordinates of mu; throws std::domain_error off the root lattice.
  RootCoords root_lattice_coords(const Weight& mu) const;

  // (mu, alpha) for a root-lattice vector alpha: integral under the normalization.
  std::int64_t pair(const Weight& mu, const RootCoords& alpha) const;
  // (alpha, alpha) / 2.
  std::int64_t half_norm(const RootCoords& alpha) const;
  // Exact W-invariant form on weights.
  Rational inner_product(const Weight& mu, const Weight& nu) const;
  // Coordinates c of h = sum_j c_j alpha_j^vee from marks_i = alpha_i(h) = sum_j cartan(i, j) c_j.
  std::vector<Rational> coroot_coords_from_marks(std::span<const std::int64_t> marks) const;
  // <mu, beta^vee> for a root beta.
  std::int64_t coroot_pairing(const Weight& mu, const RootCoords& beta) const;

  Weight reflect(const Weight& mu, int j) const;
  Weight dominant_representative(Weight mu) const;
  // Full W-orbit of a dominant weight, sorted. Throws CertificationError past the cap.
  std::vector<Weight> weyl_orbit(const Weight& mu, std::size_t cap = 10'000'000) const;
  // |W mu| = |W| / |W_mu| without enumerating the orbit.
  std::uint64_t orbit_size(const Weight& mu) const;
  std::uint64_t weyl_group_order() const;
  std::uint64_t weyl_dimension(const Weight& lambda) const;

  std::size_t max_reflection_steps() const;

  // Simple types of the sub-diagram spanned by the given nodes, one per
  // connected component, ordered by smallest node. Components are re-identified
  // from bond multiplicities and root lengths; D3 is reported as A3 and
  // single nodes as A1.
  std::vector<SimpleComponent> subdiagram_components(std::span<const int> nodes) const;

 private:
  RootSystem() = default;
  void generate_positive_roots();

  std::vector<SimpleComponent> components_;
  std::string fingerprint_;
  int rank_ = 0;
  std::vector<int> cartan_;
  std::vector<int> half_norms_;
  std::vector<int> block_of_;
  std::vector<RootCoords> positive_roots_;
  std::vector<DynkinEdge> edges_;
  Weight rho_;
  int max_height_ = 1;
  // inverse of the Cartan matrix (rational), used by weight_to_root_coords.
  RationalMatrix inverse_cartan_;
};

// Weyl group order of a single simple type.
std::uint64_t weyl_group_order(const SimpleComponent& c);

}  // namespace liebranch
