#include <doctest.h>

#include <map>

#include "liebranch/sl2branch.hpp"
#include "oracles.hpp"

using namespace liebranch;

namespace {

std::map<std::int64_t, std::int64_t> value_multiset(const RootSystem& rs, const Weight& lambda,
                                                    const std::vector<std::int64_t>& marks) {
  const auto c = rs.coroot_coords_from_marks(marks);
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [mu, m] : dominant_character(rs, lambda).mults) {
    for (const auto& w : oracle::orbit(rs, mu)) {
      Rational v = 0;
      for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * Rational(w[j]);
      out[v.to_integer()] += static_cast<std::int64_t>(m);
    }
  }
  return out;
}

std::vector<Sl2Embedding> embeddings(const RootSystem& rs) {
  std::vector<Sl2Embedding> out{principal_embedding(rs)};
  for (const auto& beta : rs.positive_roots()) out.push_back(root_embedding(rs, beta));
  return out;
}

}  // namespace

TEST_CASE("embeddings") {
  const auto g2 = RootSystem::build("G2");
  const auto a2 = RootSystem::build("A2");
  CHECK(principal_embedding(g2).marks == std::vector<std::int64_t>{2, 2});
  CHECK(principal_embedding(a2).marks == std::vector<std::int64_t>{2, 2});
  CHECK(principal_embedding(RootSystem::build("A1")).marks == std::vector<std::int64_t>{2});
  CHECK(principal_embedding(g2).kind == EmbeddingKind::principal);

  CHECK(root_embedding(a2, {1, 0}).marks == std::vector<std::int64_t>{2, -1});
  CHECK(root_embedding(a2, {1, 1}).marks == std::vector<std::int64_t>{1, 1});
  CHECK(root_embedding(a2, {1, 1}).describe() == "root(1,1) marks(1,1)");
  CHECK_THROWS_AS(root_embedding(a2, {2, 1}), std::invalid_argument);

  // Highest root of G2: h is its coroot, which pairs with the simple roots
  // like the adjoint highest weight omega_2 does.
  const auto top = root_embedding(g2, {3, 2});
  CHECK(top.marks == std::vector<std::int64_t>{0, 1});
  CHECK(sl2_decompose(g2, Weight{0, 1}, top).dimension() == 14);
  // Every root embedding: marks_i = <alpha_i, beta^vee> = alpha_i(h) and beta(h) = 2.
  for (const auto& rs : {g2, a2, RootSystem::build("B3"), RootSystem::build("C3"), RootSystem::build("F4")}) {
    for (const auto& beta : rs.positive_roots()) {
      const auto emb = root_embedding(rs, beta);
      std::int64_t beta_h = 0;
      for (std::size_t i = 0; i < beta.size(); ++i) beta_h += beta[i] * emb.marks[i];
      CHECK(beta_h == 2);
    }
  }
  CHECK_THROWS_AS(custom_embedding(a2, {1}), std::invalid_argument);
}

TEST_CASE("decomposition examples") {
  const auto g2 = RootSystem::build("G2");
  const auto a2 = RootSystem::build("A2");
  const auto p = principal_embedding(g2);
  CHECK(sl2_decompose(g2, Weight{1, 0}, p).mults == std::map<std::int64_t, std::uint64_t>{{6, 1}});
  CHECK(sl2_decompose(a2, Weight{1, 0}, root_embedding(a2, {1, 0})).mults ==
        std::map<std::int64_t, std::uint64_t>{{1, 1}, {0, 1}});
  for (const auto& emb : embeddings(g2))
    CHECK(sl2_decompose(g2, Weight{0, 0}, emb).mults == std::map<std::int64_t, std::uint64_t>{{0, 1}});

  CHECK(invariant_dim(g2, Weight{0, 0}, p) == 1);
  CHECK(invariant_dim(g2, Weight{1, 0}, p) == 0);
  CHECK(invariant_dim(g2, Weight{19, 19}, p) == 123);
  CHECK(g0(g2, Weight{1, 0}, p) == 7);
  CHECK(g0(g2, Weight{0, 0}, p) == 1);
  CHECK(g0(g2, Weight{1, 1}, p) == 5);
  // The adjoint representation of G2 under the principal sl2 has exponents 1 and 5.
  CHECK(sl2_decompose(g2, Weight{0, 1}, p).mults == std::map<std::int64_t, std::uint64_t>{{2, 1}, {10, 1}});
}

TEST_CASE("decompositions match peeling of the weight multiset") {
  oracle::Rng rng(99);
  for (const char* name : {"A2", "B2", "G2", "A3", "C3", "A1xA1"}) {
    const auto rs = RootSystem::build(name);
    for (const auto& emb : embeddings(rs)) {
      for (int t = 0; t < 4; ++t) {
        const Weight lambda = rng.weight(rs.rank(), 3);
        CAPTURE(name);
        CAPTURE(emb.describe());
        CAPTURE(to_string(lambda));
        const auto dec = sl2_decompose(rs, lambda, emb);
        const auto peeled = oracle::peel_sl2(value_multiset(rs, lambda, emb.marks));
        CHECK(dec.mults == peeled);
        CHECK(dec.dimension() == rs.weyl_dimension(lambda));
      }
    }
  }
}

TEST_CASE("dimension conservation and value symmetry") {
  oracle::Rng rng(1234);
  std::size_t cases = 0;
  for (const char* name : {"G2", "A2", "B2", "A3", "C3", "B3"}) {
    const auto rs = RootSystem::build(name);
    const auto embs = embeddings(rs);
    for (int t = 0; t < 40; ++t) {
      const Weight lambda = rng.weight(rs.rank(), rs.rank() == 2 ? 8 : 3);
      const auto& emb = embs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(embs.size()) - 1))];
      const auto values = full_weight_values(rs, lambda, emb.marks);
      for (const auto& [v, n] : values) {
        const auto it = values.find(-v);
        REQUIRE(it != values.end());
        CHECK(it->second == n);
      }
      CHECK(decompose_values(values).dimension() == rs.weyl_dimension(lambda));
      ++cases;
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("certificate failures") {
  CHECK_THROWS_AS(decompose_values({{1, 1}}), Sl2CertificateError);
  CHECK_THROWS_AS(decompose_values({{-2, 1}, {0, 1}, {2, 1}, {4, 1}}), Sl2CertificateError);
  // N_0 < N_2 cannot come from an sl2-module.
  CHECK_THROWS_AS(decompose_values({{-2, 2}, {0, 1}, {2, 2}}), Sl2CertificateError);
  CHECK(decompose_values({{-1, 1}, {1, 1}}).mults == std::map<std::int64_t, std::uint64_t>{{1, 1}});

  const auto a2 = RootSystem::build("A2");
  // alpha_1(h) = 3, alpha_2(h) = 0 gives values {2, -1, -1} on the standard module.
  CHECK_THROWS_AS(sl2_decompose(a2, Weight{1, 0}, custom_embedding(a2, {3, 0})), Sl2CertificateError);
  CHECK_THROWS_AS(sl2_decompose(a2, Weight{1, 0}, custom_embedding(a2, {1, 0})), std::domain_error);
}

TEST_CASE("A2 principal invariants follow the parity law") {
  const auto a2 = RootSystem::build("A2");
  const auto p = principal_embedding(a2);
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK((invariant_dim(a2, Weight{a, b}, p) > 0) == (a % 2 == 0 && b % 2 == 0));
    }
}

TEST_CASE("A2 root sl2 has invariants in both fundamental modules") {
  const auto a2 = RootSystem::build("A2");
  const auto emb = root_embedding(a2, {1, 0});
  CHECK(invariant_dim(a2, Weight{1, 0}, emb) > 0);
  CHECK(invariant_dim(a2, Weight{0, 1}, emb) > 0);
}

TEST_CASE("G2 principal: adding an invariant-bearing weight keeps every sl2 constituent") {
  const auto g2 = RootSystem::build("G2");
  const auto p = principal_embedding(g2);
  std::map<Weight, Sl2Decomposition> dec;
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b) dec[Weight{a, b}] = sl2_decompose(g2, Weight{a, b}, p);
  std::size_t checked = 0;
  for (std::int64_t ma = 0; ma <= 6; ++ma)
    for (std::int64_t mb = 0; mb <= 6; ++mb) {
      const Weight mu{ma, mb};
      if (dec[mu].multiplicity(0) == 0) continue;
      for (std::int64_t la = 0; la <= 6; ++la)
        for (std::int64_t lb = 0; lb <= 6; ++lb) {
          const Weight lambda{la, lb};
          for (const auto& [k, m] : dec[lambda].mults) {
            if (m == 0) continue;
            CHECK(dec[lambda + mu].multiplicity(k) > 0);
            ++checked;
          }
        }
    }
  CHECK(checked > 0);
}

TEST_CASE("decomposition JSON") {
  const auto g2 = RootSystem::build("G2");
  const auto dec = sl2_decompose(g2, Weight{0, 1}, principal_embedding(g2));
  CHECK(to_json(dec) == nlohmann::json{{"2", 1}, {"10", 1}});
  CHECK(to_json(WeightValues{{-1, 1}, {1, 1}}) == nlohmann::json{{"-1", 1}, {"1", 1}});
}
