#include "liebranch/sl2branch.hpp"

#include <algorithm>
#include <stdexcept>

#include "liebranch/checked.hpp"

namespace liebranch {

std::string Sl2Embedding::describe() const {
  std::string s;
  switch (kind) {
    case EmbeddingKind::principal: s = "principal"; break;
    case EmbeddingKind::root: s = "root" + (root ? to_string(*root) : std::string()); break;
    case EmbeddingKind::custom: s = "custom"; break;
  }
  s += " marks(";
  for (std::size_t i = 0; i < marks.size(); ++i) s += (i ? "," : "") + std::to_string(marks[i]);
  return s + ")";
}

Sl2Embedding principal_embedding(const RootSystem& rs) {
  return {std::vector<std::int64_t>(static_cast<std::size_t>(rs.rank()), 2), EmbeddingKind::principal, std::nullopt};
}

Sl2Embedding root_embedding(const RootSystem& rs, const RootCoords& beta) {
  const auto& roots = rs.positive_roots();
  if (std::find(roots.begin(), roots.end(), beta) == roots.end()) {
    throw std::invalid_argument(to_string(beta) + " is not a positive root of " + rs.fingerprint());
  }
  Sl2Embedding emb{{}, EmbeddingKind::root, beta};
  for (int i = 0; i < rs.rank(); ++i) {
    emb.marks.push_back(rs.coroot_pairing(rs.root_to_weight_coords(rs.simple_root(i)), beta));
  }
  return emb;
}

Sl2Embedding custom_embedding(const RootSystem& rs, std::vector<std::int64_t> marks) {
  if (marks.size() != static_cast<std::size_t>(rs.rank())) {
    throw std::invalid_argument("expected " + std::to_string(rs.rank()) + " marks");
  }
  return {std::move(marks), EmbeddingKind::custom, std::nullopt};
}

std::uint64_t Sl2Decomposition::dimension() const {
  std::uint64_t d = 0;
  for (const auto& [k, m] : mults) d = checked::add(d, checked::mul(static_cast<std::uint64_t>(k + 1), m));
  return d;
}

std::uint64_t Sl2Decomposition::multiplicity(std::int64_t k) const {
  const auto it = mults.find(k);
  return it == mults.end() ? 0 : it->second;
}

Sl2Decomposition decompose_values(const WeightValues& values) {
  const auto count = [&](std::int64_t j) -> std::uint64_t {
    const auto it = values.find(j);
    return it == values.end() ? 0 : it->second;
  };
  for (const auto& [j, n] : values) {
    if (count(-j) != n) {
      throw Sl2CertificateError("weight values are not symmetric at " + std::to_string(j) +
                                "; the marks do not come from an sl2-triple");
    }
  }
  Sl2Decomposition dec;
  for (const auto& [k, n] : values) {
    if (k < 0) continue;
    const std::uint64_t above = count(k + 2);
    if (above > n) {
      throw Sl2CertificateError("negative multiplicity for V(" + std::to_string(k) + ")");
    }
    if (n > above) dec.mults.emplace(k, n - above);
  }
  return dec;
}

Sl2Decomposition sl2_decompose(const RootSystem& rs, const Character& ch, const Sl2Embedding& emb) {
  return decompose_values(full_weight_values(rs, ch, emb.marks));
}

Sl2Decomposition sl2_decompose(const RootSystem& rs, const Weight& lambda, const Sl2Embedding& emb) {
  return sl2_decompose(rs, dominant_character(rs, lambda), emb);
}

std::uint64_t invariant_dim(const RootSystem& rs, const Character& ch, const Sl2Embedding& emb) {
  return sl2_decompose(rs, ch, emb).multiplicity(0);
}

std::uint64_t invariant_dim(const RootSystem& rs, const Weight& lambda, const Sl2Embedding& emb) {
  return invariant_dim(rs, dominant_character(rs, lambda), emb);
}

std::uint64_t g0(const Sl2Decomposition& dec) {
  if (dec.mults.empty()) throw std::logic_error("empty sl2 decomposition");
  return static_cast<std::uint64_t>(dec.mults.begin()->first) + 1;
}

std::uint64_t g0(const RootSystem& rs, const Weight& lambda, const Sl2Embedding& emb) {
  return g0(sl2_decompose(rs, lambda, emb));
}

nlohmann::json to_json(const Sl2Decomposition& dec) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, m] : dec.mults) j[std::to_string(k)] = m;
  return j;
}

nlohmann::json to_json(const WeightValues& values) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, n] : values) j[std::to_string(v)] = n;
  return j;
}

}  // namespace liebranch
