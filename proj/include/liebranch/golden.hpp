#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liebranch/rootsys.hpp"
#include "liebranch/semigroup.hpp"

// Reference data shipped with the library. The JSON fixtures under
// data/golden/ are compiled in at build time.
namespace liebranch::golden {

inline constexpr int kVersion = 1;

// Raw fixture text by file name ("table1.json", ...). Throws std::out_of_range.
std::string_view raw(std::string_view name);
std::vector<std::string> fixture_names();

using Grid = std::vector<std::vector<std::uint64_t>>;

// 20x20 invariant dimensions of L(i omega_1 + j omega_2) for G2 principal sl2.
Grid invariant_table();
// 20x20 g0 values, same indexing.
Grid g0_table();
// The 26 highest weights with no invariant.
std::vector<LatticePoint> exceptions();
// The 73-point complement of the nine-generator semigroup.
std::vector<LatticePoint> nine_generator_complement();
// "six" or "nine".
GeneratorSet generators(std::string_view name);

struct ParabolicEntry {
  std::string levi;  // as printed, e.g. "A1D3"
  std::int64_t dim_g_mod_lss = 0;
};
struct ParabolicTable {
  SimpleComponent type;
  std::vector<ParabolicEntry> rows;
};
std::vector<ParabolicTable> parabolic_tables();

struct EValue {
  SimpleComponent type;
  std::int64_t e = 0;
};
std::vector<EValue> e_values();

// The types s with e(s) <= 8.
std::vector<SimpleComponent> exclusion_sl3();

// "A1D3" -> {A1, A3}: split a concatenated label and normalize coincident types;
// the result is sorted so labels can be compared as multisets.
std::vector<SimpleComponent> parse_levi_label(std::string_view label);

}  // namespace liebranch::golden
