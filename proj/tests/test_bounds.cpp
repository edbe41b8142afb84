#include <doctest.h>

#include <algorithm>

#include "liebranch/bounds.hpp"
#include "liebranch/checked.hpp"
#include "oracles.hpp"

using namespace liebranch;

namespace {

// dim g/l_ss for a classical type from the Levi factor of node k:
// A_{k-1} x X_{n-k}, with the two spin nodes of D_n giving A_{n-1}.
std::int64_t classical_dim_g_mod_lss(char family, int n, int k) {
  const std::int64_t dim_g = oracle::classical_dimension(family, n);
  const std::int64_t left = oracle::classical_dimension('A', k - 1);
  if (family == 'A') return dim_g - left - oracle::classical_dimension('A', n - k);
  if (family == 'D' && k >= n - 1) return dim_g - oracle::classical_dimension('A', n - 1);
  std::int64_t right = 0;
  const int m = n - k;
  if (family == 'D') {
    right = m == 2 ? 6 : m == 1 ? 0 : oracle::classical_dimension('D', m);
  } else {
    right = m == 1 ? 3 : oracle::classical_dimension(family, m);
  }
  return dim_g - left - right;
}

std::vector<SimpleComponent> simple_types(int max_rank) {
  std::vector<SimpleComponent> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("m-values") {
  const auto g2 = RootSystem::build("G2");
  const auto p = principal_embedding(g2);
  CHECK(m_value(g2, p, 1, kDefaultMCap) == 4);
  CHECK(m_value(g2, p, 2, kDefaultMCap) == 2);
  const auto a2 = RootSystem::build("A2");
  CHECK(m_value(a2, principal_embedding(a2), 1, kDefaultMCap) == 2);
  CHECK(m_values(a2, principal_embedding(a2), kDefaultMCap).values == std::vector<std::int64_t>{2, 2});
  CHECK(m_value(g2, p, 1, 3) == 0);
  CHECK_THROWS_AS(m_value(g2, p, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(m_value(g2, p, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(m_value(g2, p, 1, 0), std::invalid_argument);

  // Definition check: the first invariant appears exactly at m_j.
  for (const char* name : {"G2", "A2", "B2", "A3", "B3"}) {
    const auto rs = RootSystem::build(name);
    std::vector<Sl2Embedding> embs{principal_embedding(rs)};
    for (const auto& beta : rs.positive_roots()) embs.push_back(root_embedding(rs, beta));
    for (const auto& emb : embs) {
      const auto m = m_values(rs, emb, 24);
      for (int j = 1; j <= rs.rank(); ++j) {
        const std::int64_t mj = m.values[static_cast<std::size_t>(j - 1)];
        Weight w = rs.zero_weight();
        if (mj == 0) continue;
        for (std::int64_t n = 1; n < mj; ++n) {
          w[static_cast<std::size_t>(j - 1)] = n;
          CHECK(invariant_dim(rs, w, emb) == 0);
        }
        w[static_cast<std::size_t>(j - 1)] = mj;
        CHECK(invariant_dim(rs, w, emb) > 0);
      }
    }
  }
}

TEST_CASE("m-values are positive for G2 principal and root sl2s") {
  const auto g2 = RootSystem::build("G2");
  CHECK(m_values(g2, principal_embedding(g2), 24).all_positive());
  for (const auto& beta : g2.positive_roots()) {
    CAPTURE(to_string(beta));
    CHECK(m_values(g2, root_embedding(g2, beta), 24).all_positive());
  }
}

TEST_CASE("b bound") {
  const auto g2 = RootSystem::build("G2");
  const auto r = b_bound(g2, principal_embedding(g2), kDefaultMCap);
  CHECK(r.b == 8);
  CHECK(r.max_g0 == 7);
  CHECK(r.m.values == std::vector<std::int64_t>{4, 2});
  CHECK(r.box == std::vector<std::int64_t>{4, 2});
  CHECK(r.box_size == 8);
  CHECK(r.argmax == Weight{1, 0});

  // Brute force over the 4x2 box.
  std::uint64_t best = 0;
  for (std::int64_t a = 0; a < 4; ++a)
    for (std::int64_t b = 0; b < 2; ++b) best = std::max(best, g0(g2, Weight{a, b}, principal_embedding(g2)));
  CHECK(best + 1 == r.b);

  // All m-values equal to 1: C0 = {0}.
  const auto a2 = RootSystem::build("A2");
  const auto top = b_bound(a2, root_embedding(a2, {1, 1}), 8);
  CHECK(top.m.values == std::vector<std::int64_t>{1, 1});
  CHECK(top.box_size == 1);
  CHECK(top.b == 2);

  CHECK_THROWS_AS(b_bound(g2, principal_embedding(g2), 1), MissingMValueError);

  CharacterCache cache;
  const auto threaded = b_bound(g2, principal_embedding(g2), kDefaultMCap, {&cache, 4});
  CHECK(threaded.b == r.b);
  CHECK(threaded.argmax == r.argmax);
  CHECK(cache.size() > 0);
}

TEST_CASE("Levi components") {
  CHECK(levi_ss_components({Family::G, 2}, 1) == std::vector<SimpleComponent>{{Family::A, 1}});
  CHECK(levi_ss_components({Family::E, 6}, 2) == std::vector<SimpleComponent>{{Family::A, 5}});
  CHECK(levi_ss_components({Family::A, 3}, 2) == std::vector<SimpleComponent>{{Family::A, 1}, {Family::A, 1}});
  CHECK(levi_ss_components({Family::A, 1}, 1).empty());
  CHECK(levi_ss_components({Family::E, 8}, 8) == std::vector<SimpleComponent>{{Family::E, 7}});
  CHECK_THROWS_AS(levi_ss_components({Family::A, 3}, 4), std::invalid_argument);
}

TEST_CASE("parabolic tables") {
  const auto g2 = parabolic_table({Family::G, 2});
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].dim_g_mod_lss == 11);
  CHECK(g2[1].dim_g_mod_lss == 11);
  CHECK(parabolic_table({Family::E, 8})[7].dim_g_mod_lss == 115);
  CHECK(parabolic_table({Family::B, 3})[1].dim_g_mod_lss == 15);

  for (const auto& type : simple_types(8)) {
    CAPTURE(type.name());
    const auto rows = parabolic_table(type);
    CHECK(rows.size() == static_cast<std::size_t>(type.rank));
    for (const auto& row : rows) {
      CHECK(row.dim_g_mod_lss % 2 == 1);
      CHECK(row.dim_X * 2 == row.dim_g_mod_lss + 1);
      std::int64_t rank_sum = 0;
      for (const auto& c : row.levi_ss_components) rank_sum += c.rank;
      CHECK(rank_sum == type.rank - 1);
      if (type.family != Family::E && type.family != Family::F && type.family != Family::G) {
        CHECK(row.dim_g_mod_lss ==
              classical_dim_g_mod_lss(static_cast<char>(type.family), type.rank, row.node));
      }
    }
  }
}

TEST_CASE("type A closed form and minimum") {
  std::int64_t smallest = 1 << 30;
  std::vector<std::string> where;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& row : parabolic_table({Family::A, n})) {
      const std::int64_t p = row.node - 1, q = n - 1 - p;
      CHECK(row.dim_g_mod_lss == n * n - p * p - q * q + 2);
      if (n < 2) continue;
      if (row.dim_g_mod_lss < smallest) {
        smallest = row.dim_g_mod_lss;
        where.clear();
      }
      if (row.dim_g_mod_lss == smallest) where.push_back("A" + std::to_string(n));
    }
  }
  CHECK(smallest == 5);
  CHECK(std::all_of(where.begin(), where.end(), [](const std::string& s) { return s == "A2"; }));
}

TEST_CASE("orbit dimensions exceed 3 outside A1 and A2") {
  for (const auto& type : simple_types(8)) {
    if (type.family == Family::A && type.rank <= 2) continue;
    CAPTURE(type.name());
    for (const auto& row : parabolic_table(type)) CHECK(row.dim_X > 3);
  }
}

TEST_CASE("e-values and exclusion sets") {
  CHECK(e_value({Family::G, 2}) == 6);
  CHECK(e_value({Family::A, 2}) == 3);
  CHECK(e_value({Family::B, 4}) == 8);
  CHECK(e_value({Family::A, 1}) == 2);

  const std::vector<SimpleComponent> sl3{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                         {Family::A, 5}, {Family::A, 6}, {Family::A, 7}, {Family::B, 2},
                                         {Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::C, 4},
                                         {Family::D, 4}, {Family::G, 2}};
  CHECK(exclusion_set(8, 10) == sl3);
  CHECK(exclusion_set(3, 10) == std::vector<SimpleComponent>{{Family::A, 1}, {Family::A, 2}});
  CHECK(exclusion_set(1, 10).empty());
  CHECK_THROWS_AS(exclusion_set(8, 5), std::invalid_argument);

  // Brute-force definition over all types up to the rank cap.
  for (const auto [k, cap] : {std::pair{2, 10}, {5, 10}, {8, 10}, {14, 16}, {20, 22}}) {
    std::vector<SimpleComponent> expected;
    for (const auto& t : simple_types(cap))
      if (e_value(t) <= k) expected.push_back(normalize_type(t));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(exclusion_set(k, cap) == expected);
  }
}

TEST_CASE("type normalization and labels") {
  CHECK(normalize_type({Family::B, 1}) == SimpleComponent{Family::A, 1});
  CHECK(normalize_type({Family::C, 1}) == SimpleComponent{Family::A, 1});
  CHECK(normalize_type({Family::C, 2}) == SimpleComponent{Family::B, 2});
  CHECK(normalize_type({Family::D, 3}) == SimpleComponent{Family::A, 3});
  CHECK(normalize_type({Family::E, 6}) == SimpleComponent{Family::E, 6});
  CHECK(components_label({}) == "-");
  CHECK(components_label({{Family::A, 1}, {Family::A, 5}}) == "A1A5");
}
