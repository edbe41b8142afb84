#include "liebranch/golden.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "golden_data.hpp"
#include "liebranch/bounds.hpp"

namespace liebranch::golden {
namespace {

nlohmann::json load(std::string_view name) {
  auto doc = nlohmann::json::parse(raw(name));
  if (doc.at("version").get<int>() != kVersion) {
    throw std::runtime_error("golden fixture " + std::string(name) + " has an unexpected version");
  }
  return doc;
}

std::vector<LatticePoint> points(std::string_view name) {
  return load(name).at("points").get<std::vector<LatticePoint>>();
}

}  // namespace

std::string_view raw(std::string_view name) {
  for (const auto& entry : detail::kFixtures) {
    if (entry.name == name) return entry.text;
  }
  throw std::out_of_range("no golden fixture named " + std::string(name));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& entry : detail::kFixtures) names.emplace_back(entry.name);
  return names;
}

Grid invariant_table() { return load("table1.json").at("rows").get<Grid>(); }
Grid g0_table() { return load("table2.json").at("rows").get<Grid>(); }
std::vector<LatticePoint> exceptions() { return points("exceptions.json"); }
std::vector<LatticePoint> nine_generator_complement() { return points("complement_nine.json"); }

GeneratorSet generators(std::string_view name) {
  const auto doc = load("semigroup_generators.json");
  for (const auto& set : doc.at("sets")) {
    if (set.at("name").get<std::string>() == name) return GeneratorSet(set.at("gens").get<std::vector<LatticePoint>>());
  }
  throw std::out_of_range("no generator set named " + std::string(name));
}

std::vector<ParabolicTable> parabolic_tables() {
  std::vector<ParabolicTable> out;
  const auto doc = load("parabolic_tables.json");
  for (const auto& t : doc.at("tables")) {
    ParabolicTable table{parse_component(t.at("type").get<std::string>()), {}};
    for (const auto& row : t.at("rows")) {
      table.rows.push_back({row.at("levi").get<std::string>(), row.at("dim_g_mod_lss").get<std::int64_t>()});
    }
    out.push_back(std::move(table));
  }
  return out;
}

std::vector<EValue> e_values() {
  std::vector<EValue> out;
  const auto doc = load("e_values.json");
  for (const auto& v : doc.at("values")) {
    out.push_back({parse_component(v.at("type").get<std::string>()), v.at("e").get<std::int64_t>()});
  }
  return out;
}

std::vector<SimpleComponent> exclusion_sl3() {
  std::vector<SimpleComponent> out;
  const auto doc = load("exclusion_sl3.json");
  for (const auto& t : doc.at("types")) out.push_back(parse_component(t.get<std::string>()));
  return out;
}

std::vector<SimpleComponent> parse_levi_label(std::string_view label) {
  std::vector<SimpleComponent> out;
  std::size_t i = 0;
  while (i < label.size()) {
    std::size_t j = i + 1;
    while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
    const std::string_view piece = label.substr(i, j - i);
    SimpleComponent c{parse_family(piece.substr(0, 1)), std::stoi(std::string(piece.substr(1)))};
    // B1/C1 appear only as A1; validate after normalization.
    c = normalize_type(c);
    c.validate();
    out.push_back(c);
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace liebranch::golden
