#include <doctest.h>

#include <algorithm>
#include <set>

#include "liebranch/bounds.hpp"
#include "liebranch/golden.hpp"

using namespace liebranch;

TEST_CASE("fixtures are embedded and well formed") {
  const auto names = golden::fixture_names();
  for (const char* n : {"table1.json", "table2.json", "exceptions.json", "complement_nine.json",
                        "semigroup_generators.json", "parabolic_tables.json", "e_values.json", "exclusion_sl3.json"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }
  CHECK_THROWS_AS(golden::raw("missing.json"), std::out_of_range);

  const auto t1 = golden::invariant_table();
  const auto t2 = golden::g0_table();
  REQUIRE(t1.size() == 20);
  REQUIRE(t2.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(t1[i].size() == 20);
    CHECK(t2[i].size() == 20);
    for (std::size_t j = 0; j < 20; ++j) {
      // g0 = 1 exactly when an invariant exists.
      CHECK((t2[i][j] == 1) == (t1[i][j] > 0));
    }
  }
  CHECK(t1[19][19] == 123);
  CHECK(t1[15][0] == 1);
  CHECK(t1[17][0] == 0);
  CHECK(t2[1][0] == 7);
  CHECK(t2[0][1] == 3);
  CHECK(t2[5][5] == 1);

  const auto ex = golden::exceptions();
  CHECK(ex.size() == 26);
  CHECK(std::set<LatticePoint>(ex.begin(), ex.end()).size() == 26);
  CHECK(golden::nine_generator_complement().size() == 73);
  CHECK(golden::generators("six").gens().size() == 6);
  CHECK(golden::generators("nine").gens().size() == 9);
  CHECK_THROWS_AS(golden::generators("ten"), std::out_of_range);

  // Exceptions inside the 20x20 window agree with Table 1.
  for (const auto& p : ex)
    if (p[0] < 20 && p[1] < 20) CHECK(t1[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] == 0);
}

TEST_CASE("Levi labels") {
  CHECK(golden::parse_levi_label("A1D3") == std::vector<SimpleComponent>{{Family::A, 1}, {Family::A, 3}});
  CHECK(golden::parse_levi_label("C2A1") == std::vector<SimpleComponent>{{Family::A, 1}, {Family::B, 2}});
  CHECK(golden::parse_levi_label("E7") == std::vector<SimpleComponent>{{Family::E, 7}});
  CHECK(golden::parse_levi_label("").empty());
}

TEST_CASE("parabolic reference tables match the computation") {
  std::size_t rows = 0;
  for (const auto& table : golden::parabolic_tables()) {
    CAPTURE(table.type.name());
    const auto computed = parabolic_table(table.type);
    REQUIRE(computed.size() == table.rows.size());
    for (std::size_t k = 0; k < computed.size(); ++k) {
      std::vector<SimpleComponent> got;
      for (const auto& c : computed[k].levi_ss_components) got.push_back(normalize_type(c));
      std::sort(got.begin(), got.end());
      CHECK(got == golden::parse_levi_label(table.rows[k].levi));
      CHECK(computed[k].dim_g_mod_lss == table.rows[k].dim_g_mod_lss);
      ++rows;
    }
  }
  CHECK(rows > 50);
  for (const auto& v : golden::e_values()) {
    CAPTURE(v.type.name());
    CHECK(e_value(v.type) == v.e);
  }
  CHECK(golden::e_values().size() == 15);
  CHECK(exclusion_set(8, 10) == golden::exclusion_sl3());
}
