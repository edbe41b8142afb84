#include "liebranch/character.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "liebranch/checked.hpp"

namespace liebranch {
namespace {

std::int64_t height(const RootCoords& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); }

struct HeightOrder {
  bool operator()(const RootCoords& a, const RootCoords& b) const {
    const auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

using Polynomial = std::map<RootCoords, std::int64_t, HeightOrder>;

void add_term(Polynomial& p, const RootCoords& q, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(q, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) p.erase(it);
  }
}

// Exact division of p by (1 - x^alpha) in the monomials x^q = e^{-q}.
Polynomial divide_by_denominator_factor(const Polynomial& p, const RootCoords& alpha) {
  if (p.empty()) return {};
  const std::int64_t top = height(p.rbegin()->first);
  Polynomial quotient;
  Polynomial rest = p;
  while (!rest.empty()) {
    const auto [q, c] = *rest.begin();
    if (height(q) > top) throw std::logic_error("Weyl denominator division is not exact");
    add_term(quotient, q, c);
    rest.erase(rest.begin());
    add_term(rest, q + alpha, c);
  }
  return quotient;
}

std::string cache_key(const std::string& fingerprint, const Weight& lambda) {
  return fingerprint + ":" + to_string(lambda);
}

}  // namespace

std::uint64_t Character::dimension(const RootSystem& rs) const {
  std::uint64_t dim = 0;
  for (const auto& [mu, m] : mults) dim = checked::add(dim, checked::mul(rs.orbit_size(mu), m));
  return dim;
}

std::vector<DominantWeight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("highest weight " + to_string(lambda) + " is not dominant");
  const auto& roots = rs.positive_roots();
  std::vector<Weight> root_weights;
  root_weights.reserve(roots.size());
  for (const auto& a : roots) root_weights.push_back(rs.root_to_weight_coords(a));

  // Every dominant mu < lambda is reachable from lambda through dominant weights
  // by subtracting one positive root at a time (Stembridge).
  std::vector<DominantWeight> out{{lambda, RootCoords(static_cast<std::size_t>(rs.rank()))}};
  std::unordered_set<Weight, CoordsHash> seen{lambda};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = out[head].weight - root_weights[a];
      if (!is_dominant(nu) || seen.count(nu)) continue;
      seen.insert(nu);
      out.push_back({std::move(nu), out[head].depth + roots[a]});
    }
  }
  std::sort(out.begin(), out.end(), [](const DominantWeight& a, const DominantWeight& b) {
    const auto ha = height(a.depth), hb = height(b.depth);
    if (ha != hb) return ha < hb;
    return a.weight < b.weight;
  });
  return out;
}

Character dominant_character(const RootSystem& rs, const Weight& lambda) {
  const auto doms = dominant_weights_below(rs, lambda);
  const auto& roots = rs.positive_roots();
  std::vector<Weight> root_weights;
  for (const auto& a : roots) root_weights.push_back(rs.root_to_weight_coords(a));

  std::unordered_map<Weight, std::int64_t, CoordsHash> mult;
  mult.reserve(doms.size() * 2);
  mult[lambda] = 1;

  const Weight lambda_rho2 = lambda + rs.rho() + rs.rho();
  for (std::size_t idx = 1; idx < doms.size(); ++idx) {
    const Weight& mu = doms[idx].weight;
    const RootCoords& depth = doms[idx].depth;

    // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda - mu, lambda + mu + 2 rho)
    const std::int64_t denom = rs.pair(lambda_rho2 + mu, depth);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator is not positive at " + to_string(mu));

    std::int64_t rhs = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      Weight nu = mu + root_weights[a];
      RootCoords rest = depth - roots[a];
      while (rest.all_nonnegative()) {
        const auto it = mult.find(rs.dominant_representative(nu));
        if (it != mult.end()) rhs = checked::add(rhs, checked::mul(it->second, rs.pair(nu, roots[a])));
        nu += root_weights[a];
        rest -= roots[a];
      }
    }
    rhs = checked::mul(rhs, 2);
    if (rhs % denom != 0) {
      throw std::logic_error("Freudenthal division not exact at " + to_string(mu) + ": " + std::to_string(rhs) + "/" +
                             std::to_string(denom));
    }
    const std::int64_t m = rhs / denom;
    if (m < 0) throw std::logic_error("negative Freudenthal multiplicity at " + to_string(mu));
    if (m > 0) mult.emplace(mu, m);
  }

  Character ch;
  ch.highest_weight = lambda;
  for (const auto& [w, m] : mult) ch.mults.emplace(w, checked::to_count(m));
  return ch;
}

Character weyl_alternating_character(const RootSystem& rs, const Weight& lambda, std::uint64_t weyl_group_cap) {
  if (!is_dominant(lambda)) throw std::invalid_argument("highest weight " + to_string(lambda) + " is not dominant");
  if (rs.weyl_group_order() > weyl_group_cap) {
    throw std::invalid_argument("Weyl group of " + rs.fingerprint() + " exceeds the oracle cap of " +
                                std::to_string(weyl_group_cap));
  }
  const auto r = static_cast<std::size_t>(rs.rank());

  // lambda + rho is regular, so its orbit is in bijection with W, and the
  // parity of the breadth-first depth is the sign of w.
  struct Node {
    Weight weight;
    RootCoords shift;  // (lambda + rho) - w(lambda + rho)
    int sign;
  };
  const Weight start = lambda + rs.rho();
  std::vector<Node> orbit{{start, RootCoords(r), 1}};
  std::unordered_set<Weight, CoordsHash> seen{start};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (std::size_t j = 0; j < r; ++j) {
      const Node cur = orbit[head];
      Weight next = rs.reflect(cur.weight, static_cast<int>(j));
      if (!seen.insert(next).second) continue;
      RootCoords shift = cur.shift;
      shift[j] += cur.weight[j];
      orbit.push_back({std::move(next), std::move(shift), -cur.sign});
    }
  }
  if (orbit.size() != rs.weyl_group_order()) throw std::logic_error("regular orbit size differs from |W|");

  Polynomial p;
  for (const auto& node : orbit) add_term(p, node.shift, node.sign);
  for (const auto& alpha : rs.positive_roots()) p = divide_by_denominator_factor(p, alpha);

  Character ch;
  ch.highest_weight = lambda;
  for (const auto& [q, c] : p) {
    if (c < 0) throw std::logic_error("negative coefficient in Weyl character quotient");
    Weight mu = lambda - rs.root_to_weight_coords(q);
    if (is_dominant(mu)) ch.mults.emplace(std::move(mu), static_cast<std::uint64_t>(c));
  }
  return ch;
}

std::int64_t evaluate_highest_weight(const RootSystem& rs, const Weight& lambda, std::span<const std::int64_t> marks) {
  const auto c = rs.coroot_coords_from_marks(marks);
  Rational value = 0;
  for (std::size_t j = 0; j < c.size(); ++j) value += c[j] * Rational(lambda[j]);
  if (!value.is_integer()) {
    throw std::domain_error("marks give the non-integral value " + value.str() + " on " + to_string(lambda));
  }
  return value.num();
}

WeightValues full_weight_values(const RootSystem& rs, const Character& ch, std::span<const std::int64_t> marks) {
  const auto r = static_cast<std::size_t>(rs.rank());
  if (marks.size() != r) throw std::invalid_argument("marks length differs from rank");
  const std::int64_t top = evaluate_highest_weight(rs, ch.highest_weight, marks);

  WeightValues values;
  std::unordered_set<Weight, CoordsHash> seen;
  std::vector<std::pair<Weight, std::int64_t>> queue;
  for (const auto& [mu, m] : ch.mults) {
    const RootCoords depth = rs.root_lattice_coords(ch.highest_weight - mu);
    std::int64_t base = top;
    for (std::size_t i = 0; i < r; ++i) base = checked::sub(base, checked::mul(depth[i], marks[i]));

    // Orbit walk carrying nu(h); s_j(nu) = nu - nu_j alpha_j.
    seen.clear();
    queue.clear();
    seen.insert(mu);
    queue.emplace_back(mu, base);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t nj = queue[head].first[j];
        if (nj == 0) continue;
        Weight next = rs.reflect(queue[head].first, static_cast<int>(j));
        if (!seen.insert(next).second) continue;
        const std::int64_t v = checked::sub(queue[head].second, checked::mul(nj, marks[j]));
        queue.emplace_back(std::move(next), v);
      }
    }
    for (const auto& [w, v] : queue) values[v] = checked::add(values[v], m);
  }
  return values;
}

WeightValues full_weight_values(const RootSystem& rs, const Weight& lambda, std::span<const std::int64_t> marks) {
  return full_weight_values(rs, dominant_character(rs, lambda), marks);
}

nlohmann::json to_json(const Character& ch) {
  nlohmann::json mults = nlohmann::json::array();
  for (const auto& [mu, m] : ch.mults) mults.push_back(nlohmann::json::array({mu.values(), m}));
  return {{"lambda", ch.highest_weight.values()}, {"mults", std::move(mults)}};
}

Character character_from_json(const nlohmann::json& j) {
  Character ch;
  ch.highest_weight = Weight(j.at("lambda").get<std::vector<std::int64_t>>());
  for (const auto& entry : j.at("mults")) {
    ch.mults.emplace(Weight(entry.at(0).get<std::vector<std::int64_t>>()), entry.at(1).get<std::uint64_t>());
  }
  return ch;
}

CharacterCache::CharacterCache(std::optional<std::filesystem::path> dir, bool verify)
    : dir_(std::move(dir)), verify_(verify) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::size_t CharacterCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

std::string CharacterCache::file_name(const std::string& fingerprint, const Weight& lambda) {
  // FNV-1a 64 over the canonical key text.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : cache_key(fingerprint, lambda)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return "ch-" + os.str() + ".json";
}

namespace {

std::string cache_document(const RootSystem& rs, const Character& ch) {
  nlohmann::json doc = to_json(ch);
  doc["version"] = CharacterCache::kFormatVersion;
  doc["type"] = rs.fingerprint();
  doc["rank"] = rs.rank();
  return doc.dump() + "\n";
}

}  // namespace

std::shared_ptr<const Character> CharacterCache::load(const RootSystem& rs, const Weight& lambda) const {
  const auto path = *dir_ / file_name(rs.fingerprint(), lambda);
  std::ifstream in(path, std::ios::binary);
  if (!in) return nullptr;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    if (verify_) throw CacheMismatchError("cache entry " + path.string() + " is not valid JSON");
    return nullptr;
  }
  if (doc.value("version", 0) != kFormatVersion || doc.value("type", std::string()) != rs.fingerprint() ||
      doc.value("rank", 0) != rs.rank()) {
    if (verify_) throw CacheMismatchError("cache entry " + path.string() + " has a foreign key or version");
    return nullptr;
  }
  auto ch = std::make_shared<Character>(character_from_json(doc));
  if (ch->highest_weight != lambda) {
    if (verify_) throw CacheMismatchError("cache entry " + path.string() + " holds another highest weight");
    return nullptr;
  }
  if (verify_) {
    const Character fresh = dominant_character(rs, lambda);
    if (cache_document(rs, fresh) != text) {
      throw CacheMismatchError("cache entry " + path.string() + " differs from recomputation");
    }
  }
  return ch;
}

void CharacterCache::store(const RootSystem& rs, const Character& ch) const {
  const auto path = *dir_ / file_name(rs.fingerprint(), ch.highest_weight);
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << std::hex << std::random_device{}() << "."
           << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const auto tmp = *dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << cache_document(rs, ch);
  }
  std::filesystem::rename(tmp, path);
}

std::shared_ptr<const Character> CharacterCache::get(const RootSystem& rs, const Weight& lambda) {
  const std::string key = cache_key(rs.fingerprint(), lambda);
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  std::shared_ptr<const Character> ch;
  bool from_disk = false;
  if (dir_) {
    ch = load(rs, lambda);
    from_disk = ch != nullptr;
  }
  if (!ch) {
    ch = std::make_shared<const Character>(dominant_character(rs, lambda));
    if (dir_) store(rs, *ch);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_.emplace(key, ch);
  if (inserted && from_disk) ++disk_hits_;
  return it->second;
}

}  // namespace liebranch
