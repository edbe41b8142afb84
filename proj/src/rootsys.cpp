#include "liebranch/rootsys.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "liebranch/checked.hpp"

namespace liebranch {
namespace {

template <class B>
std::string coords_string(const Coords<B>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

// Symmetric Gram matrix (alpha_i, alpha_j) of one simple block, Bourbaki
// numbering, short roots of squared length 2.
std::vector<std::vector<int>> block_gram(const SimpleComponent& c) {
  const int n = c.rank;
  std::vector<std::vector<int>> g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, int v) {  // 1-based
    g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
    g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
  };
  switch (c.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) set(i, i, 2);
      for (int i = 1; i < n; ++i) set(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) set(i, i, 4);
      set(n, n, 2);
      for (int i = 1; i < n; ++i) set(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) set(i, i, 2);
      set(n, n, 4);
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
      set(n - 1, n, -2);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) set(i, i, 2);
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
      set(n - 2, n, -1);
      break;
    case Family::E:
      for (int i = 1; i <= n; ++i) set(i, i, 2);
      set(1, 3, -1);
      set(2, 4, -1);
      for (int i = 3; i < n; ++i) set(i, i + 1, -1);
      break;
    case Family::F:
      set(1, 1, 4);
      set(2, 2, 4);
      set(3, 3, 2);
      set(4, 4, 2);
      set(1, 2, -2);
      set(2, 3, -2);
      set(3, 4, -1);
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long: the 7-dimensional module is L(omega_1).
      set(1, 1, 2);
      set(2, 2, 6);
      set(1, 2, -3);
      break;
  }
  return g;
}

}  // namespace

std::string to_string(const Weight& w) { return coords_string(w); }
std::string to_string(const RootCoords& r) { return coords_string(r); }

void SimpleComponent::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                std::string(1, static_cast<char>(family)));
  }
}

std::string SimpleComponent::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Family parse_family(std::string_view text) {
  if (text.size() != 1) throw std::invalid_argument("invalid family '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("invalid family '" + std::string(text) + "'");
  return static_cast<Family>(f);
}

SimpleComponent parse_component(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("invalid simple type '" + std::string(text) + "'");
  SimpleComponent c;
  c.family = parse_family(text.substr(0, 1));
  const std::string digits(text.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw std::invalid_argument("invalid simple type '" + std::string(text) + "'");
  }
  c.rank = std::stoi(digits);
  c.validate();
  return c;
}

std::vector<SimpleComponent> parse_type(std::string_view text) {
  std::vector<SimpleComponent> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == 'x' || text[i] == '+' || text[i] == '*') {
      out.push_back(parse_component(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t algebra_dimension(const SimpleComponent& c) {
  c.validate();
  const std::int64_t n = c.rank;
  switch (c.family) {
    case Family::A: return (n + 1) * (n + 1) - 1;
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::uint64_t weyl_group_order(const SimpleComponent& c) {
  c.validate();
  auto factorial = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= n; ++k) f = checked::mul(f, k);
    return f;
  };
  const auto n = static_cast<std::uint64_t>(c.rank);
  switch (c.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return checked::mul(std::uint64_t{1} << n, factorial(n));
    case Family::D: return checked::mul(std::uint64_t{1} << (n - 1), factorial(n));
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 1;
}

RootSystem RootSystem::build(std::initializer_list<SimpleComponent> components) {
  return build(std::span<const SimpleComponent>(components.begin(), components.size()));
}

RootSystem RootSystem::build(std::string_view type) {
  const auto comps = parse_type(type);
  return build(std::span<const SimpleComponent>(comps));
}

RootSystem RootSystem::build(std::span<const SimpleComponent> components) {
  if (components.empty()) throw std::invalid_argument("root system needs at least one simple component");
  RootSystem rs;
  for (const auto& c : components) {
    c.validate();
    rs.components_.push_back(c);
    rs.rank_ += c.rank;
    if (!rs.fingerprint_.empty()) rs.fingerprint_ += "x";
    rs.fingerprint_ += c.name();
  }
  const auto r = static_cast<std::size_t>(rs.rank_);
  rs.cartan_.assign(r * r, 0);
  rs.half_norms_.assign(r, 1);
  rs.block_of_.assign(r, 0);

  std::size_t offset = 0;
  for (std::size_t b = 0; b < components.size(); ++b) {
    const auto gram = block_gram(components[b]);
    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
      rs.half_norms_[offset + i] = gram[i][i] / 2;
      rs.block_of_[offset + i] = static_cast<int>(b);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rs.cartan_[(offset + i) * r + offset + j] = gram[i][j] / rs.half_norms_[offset + j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const int bond = rs.cartan_[(offset + i) * r + offset + j] * rs.cartan_[(offset + j) * r + offset + i];
        if (bond != 0) rs.edges_.push_back({static_cast<int>(offset + i), static_cast<int>(offset + j), bond});
      }
    }
    offset += n;
  }

  RationalMatrix a(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = rs.cartan_[i * r + j];
  rs.inverse_cartan_ = inverse(a);

  rs.rho_ = Weight(std::vector<std::int64_t>(r, 1));
  rs.generate_positive_roots();

  for (std::size_t b = 0; b < components.size(); ++b) {
    if (components[b].family != Family::G) continue;
    std::size_t first = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (rs.block_of_[i] == static_cast<int>(b)) {
        first = i;
        break;
      }
    Weight w1 = rs.zero_weight();
    w1[first] = 1;
    if (rs.weyl_dimension(w1) != 7) throw std::logic_error("G2 orientation check failed: dim L(omega_1) != 7");
  }
  return rs;
}

void RootSystem::generate_positive_roots() {
  const auto r = static_cast<std::size_t>(rank_);
  std::unordered_set<RootCoords, CoordsHash> seen;
  std::vector<RootCoords> layer;
  for (std::size_t i = 0; i < r; ++i) {
    layer.push_back(simple_root(static_cast<int>(i)));
    seen.insert(layer.back());
  }
  int height = 1;
  while (!layer.empty()) {
    max_height_ = height;
    positive_roots_.insert(positive_roots_.end(), layer.begin(), layer.end());
    std::vector<RootCoords> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < r; ++i) {
        const RootCoords ai = simple_root(static_cast<int>(i));
        if (beta == ai) continue;
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i with p - q = <beta, alpha_i^vee>.
        std::int64_t p = 0;
        RootCoords down = beta - ai;
        while (seen.count(down)) {
          ++p;
          down -= ai;
        }
        std::int64_t pairing = 0;
        for (std::size_t k = 0; k < r; ++k) pairing += beta[k] * cartan_[k * r + i];
        const std::int64_t q = p - pairing;
        if (q > 0) {
          RootCoords up = beta + ai;
          if (seen.insert(up).second) next.push_back(std::move(up));
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
    ++height;
  }
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m[static_cast<std::size_t>(i)].push_back(cartan(i, j));
  return m;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = zero_weight();
  w[static_cast<std::size_t>(i)] = 1;
  return w;
}

RootCoords RootSystem::simple_root(int i) const {
  RootCoords c(static_cast<std::size_t>(rank_));
  c[static_cast<std::size_t>(i)] = 1;
  return c;
}

Weight RootSystem::root_to_weight_coords(const RootCoords& root) const {
  Weight m = zero_weight();
  for (int j = 0; j < rank_; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s = checked::add(s, checked::mul(root[static_cast<std::size_t>(i)], cartan(i, j)));
    m[static_cast<std::size_t>(j)] = s;
  }
  return m;
}

std::vector<Rational> RootSystem::weight_to_root_coords(const Weight& mu) const {
  std::vector<Rational> x(static_cast<std::size_t>(rank_), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[i] += inverse_cartan_[j][i] * Rational(mu[j]);
  return x;
}

RootCoords RootSystem::root_lattice_coords(const Weight& mu) const {
  const auto x = weight_to_root_coords(mu);
  RootCoords c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_integer()) throw std::domain_error("weight " + to_string(mu) + " is not in the root lattice");
    c[i] = x[i].num();
  }
  return c;
}

std::int64_t RootSystem::pair(const Weight& mu, const RootCoords& alpha) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (alpha[k] == 0) continue;
    s = checked::add(s, checked::mul(checked::mul(alpha[k], mu[k]), half_norms_[k]));
  }
  return s;
}

std::int64_t RootSystem::half_norm(const RootCoords& alpha) const {
  return pair(root_to_weight_coords(alpha), alpha) / 2;
}

Rational RootSystem::inner_product(const Weight& mu, const Weight& nu) const {
  const auto x = weight_to_root_coords(mu);
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * Rational(checked::mul(nu[k], half_norms_[k]));
  return s;
}

std::vector<Rational> RootSystem::coroot_coords_from_marks(std::span<const std::int64_t> marks) const {
  if (marks.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("marks length differs from rank");
  std::vector<Rational> c(marks.size(), Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c.size(); ++i) c[j] += inverse_cartan_[j][i] * Rational(marks[i]);
  return c;
}

std::int64_t RootSystem::coroot_pairing(const Weight& mu, const RootCoords& beta) const {
  const std::int64_t num = pair(mu, beta);
  const std::int64_t den = half_norm(beta);
  if (num % den != 0) throw std::logic_error("non-integral coroot pairing");
  return num / den;
}

Weight RootSystem::reflect(const Weight& mu, int j) const {
  Weight out = mu;
  const std::int64_t m = mu[static_cast<std::size_t>(j)];
  if (m == 0) return out;
  for (int k = 0; k < rank_; ++k) {
    out[static_cast<std::size_t>(k)] =
        checked::sub(out[static_cast<std::size_t>(k)], checked::mul(m, cartan(j, k)));
  }
  return out;
}

std::size_t RootSystem::max_reflection_steps() const {
  return positive_roots_.size() * static_cast<std::size_t>(max_height_) + 1;
}

Weight RootSystem::dominant_representative(Weight mu) const {
  const std::size_t cap = max_reflection_steps();
  for (std::size_t step = 0; step <= cap; ++step) {
    int neg = -1;
    for (int j = 0; j < rank_; ++j) {
      if (mu[static_cast<std::size_t>(j)] < 0) {
        neg = j;
        break;
      }
    }
    if (neg < 0) return mu;
    mu = reflect(mu, neg);
  }
  throw std::logic_error("dominant_representative exceeded its reflection cap");
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& mu, std::size_t cap) const {
  std::unordered_set<Weight, CoordsHash> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < rank_; ++j) {
      if (cur[static_cast<std::size_t>(j)] == 0) continue;
      Weight next = reflect(cur, j);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CertificationError("Weyl orbit exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t RootSystem::weyl_group_order() const {
  std::uint64_t order = 1;
  for (const auto& c : components_) order = checked::mul(order, liebranch::weyl_group_order(c));
  return order;
}

std::uint64_t RootSystem::orbit_size(const Weight& mu) const {
  const Weight dom = dominant_representative(mu);
  std::vector<int> fixed;
  for (int j = 0; j < rank_; ++j)
    if (dom[static_cast<std::size_t>(j)] == 0) fixed.push_back(j);
  std::uint64_t stabilizer = 1;
  for (const auto& c : subdiagram_components(fixed)) stabilizer = checked::mul(stabilizer, liebranch::weyl_group_order(c));
  return weyl_group_order() / stabilizer;
}

std::uint64_t RootSystem::weyl_dimension(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension needs a dominant weight");
  using boost::multiprecision::cpp_int;
  const Weight shifted = lambda + rho_;
  cpp_int num = 1;
  cpp_int den = 1;
  for (const auto& alpha : positive_roots_) {
    num *= pair(shifted, alpha);
    den *= pair(rho_, alpha);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  const cpp_int dim = num / den;
  if (dim > cpp_int(UINT64_MAX)) throw OverflowError("dimension of L" + to_string(lambda) + " exceeds 64 bits");
  return dim.convert_to<std::uint64_t>();
}

std::vector<SimpleComponent> RootSystem::subdiagram_components(std::span<const int> nodes) const {
  std::vector<int> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const auto in_set = [&](int v) { return std::binary_search(sorted.begin(), sorted.end(), v); };

  std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (neighbor, bond)
  for (int v : sorted) adj[v];
  for (const auto& e : edges_) {
    if (in_set(e.from) && in_set(e.to)) {
      adj[e.from].emplace_back(e.to, e.bond);
      adj[e.to].emplace_back(e.from, e.bond);
    }
  }

  std::vector<SimpleComponent> out;
  std::unordered_set<int> visited;
  for (int start : sorted) {
    if (visited.count(start)) continue;
    std::vector<int> comp;
    std::deque<int> q{start};
    visited.insert(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (auto [w, bond] : adj[v]) {
        if (visited.insert(w).second) q.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    const int n = static_cast<int>(comp.size());

    SimpleComponent c;
    c.rank = n;
    int max_bond = 1;
    int max_degree = 0;
    for (int v : comp) {
      max_degree = std::max<int>(max_degree, static_cast<int>(adj[v].size()));
      for (auto [w, bond] : adj[v]) max_bond = std::max(max_bond, bond);
    }
    if (n == 1) {
      c.family = Family::A;
    } else if (max_bond == 3) {
      c.family = Family::G;
    } else if (max_bond == 2) {
      int u = -1, w = -1;  // double-bond endpoints
      for (int v : comp)
        for (auto [x, bond] : adj[v])
          if (bond == 2 && v < x) u = v, w = x;
      const bool u_end = adj[u].size() == 1;
      const bool w_end = adj[w].size() == 1;
      if (!u_end && !w_end) {
        c.family = Family::F;
      } else {
        // Orient the chain so the double bond sits at its tail; for rank 2 the
        // tail is the higher-numbered node.
        const int tail = w_end ? w : u;
        const int other = tail == w ? u : w;
        c.family = half_norms_[static_cast<std::size_t>(tail)] < half_norms_[static_cast<std::size_t>(other)]
                       ? Family::B
                       : Family::C;
      }
    } else if (max_degree <= 2) {
      c.family = Family::A;
    } else {
      int center = -1;
      for (int v : comp)
        if (adj[v].size() == 3) center = v;
      std::vector<int> arms;
      for (auto [first, bond] : adj[center]) {
        int len = 1, prev = center, cur = first;
        while (true) {
          int nxt = -1;
          for (auto [x, b2] : adj[cur])
            if (x != prev) nxt = x;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        c.family = Family::D;
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        c.family = Family::E;
      } else {
        throw std::logic_error("unrecognized Dynkin sub-diagram");
      }
    }
    if (c.family == Family::D && c.rank == 3) c.family = Family::A;
    out.push_back(c);
  }
  return out;
}

}  // namespace liebranch
