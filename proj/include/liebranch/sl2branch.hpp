#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liebranch/character.hpp"
#include "liebranch/rootsys.hpp"

namespace liebranch {

enum class EmbeddingKind { principal, root, custom };

// An sl2-subalgebra, recorded through the values marks_i = alpha_i(h) of its
// semisimple element h on the simple roots.
struct Sl2Embedding {
  std::vector<std::int64_t> marks;
  EmbeddingKind kind = EmbeddingKind::custom;
  std::optional<RootCoords> root;  // defining positive root for kind == root

  std::string describe() const;
};

Sl2Embedding principal_embedding(const RootSystem& rs);
// Throws std::invalid_argument when beta is not a positive root.
Sl2Embedding root_embedding(const RootSystem& rs, const RootCoords& beta);
Sl2Embedding custom_embedding(const RootSystem& rs, std::vector<std::int64_t> marks);

// k -> multiplicity of V(k), the (k+1)-dimensional irreducible sl2-module.
struct Sl2Decomposition {
  std::map<std::int64_t, std::uint64_t> mults;

  std::uint64_t dimension() const;
  std::uint64_t multiplicity(std::int64_t k) const;
};

// Raised when the weight-value table is not the character of an sl2-module.
class Sl2CertificateError : public std::runtime_error {
 public:
  explicit Sl2CertificateError(const std::string& what) : std::runtime_error(what) {}
};

// mult(V(k)) = N_k - N_{k+2}. Checks N_j = N_{-j} and nonnegativity.
Sl2Decomposition decompose_values(const WeightValues& values);

Sl2Decomposition sl2_decompose(const RootSystem& rs, const Character& ch, const Sl2Embedding& emb);
Sl2Decomposition sl2_decompose(const RootSystem& rs, const Weight& lambda, const Sl2Embedding& emb);

std::uint64_t invariant_dim(const RootSystem& rs, const Character& ch, const Sl2Embedding& emb);
std::uint64_t invariant_dim(const RootSystem& rs, const Weight& lambda, const Sl2Embedding& emb);

// Smallest dimension of an sl2-irreducible occurring in the restriction.
std::uint64_t g0(const Sl2Decomposition& dec);
std::uint64_t g0(const RootSystem& rs, const Weight& lambda, const Sl2Embedding& emb);

// {"k": mult, ...}
nlohmann::json to_json(const Sl2Decomposition& dec);
nlohmann::json to_json(const WeightValues& values);

}  // namespace liebranch
