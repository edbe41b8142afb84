#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "liebranch/bounds.hpp"
#include "liebranch/character.hpp"
#include "liebranch/golden.hpp"
#include "liebranch/rootsys.hpp"
#include "liebranch/semigroup.hpp"
#include "liebranch/sl2branch.hpp"

namespace py = pybind11;
using namespace liebranch;

namespace {

using Ints = std::vector<std::int64_t>;

Sl2Embedding pick_embedding(const RootSystem& rs, const std::optional<Ints>& root, const std::optional<Ints>& marks) {
  if (root && marks) throw std::invalid_argument("give at most one of root and marks");
  if (root) return root_embedding(rs, RootCoords(*root));
  if (marks) return custom_embedding(rs, *marks);
  return principal_embedding(rs);
}

py::dict describe(const std::string& type) {
  const auto rs = RootSystem::build(type);
  py::dict d;
  d["type"] = rs.fingerprint();
  d["rank"] = rs.rank();
  d["cartan"] = rs.cartan_matrix();
  d["half_norms"] = rs.half_norms();
  d["positive_roots"] = rs.positive_roots().size();
  d["weyl_group_order"] = rs.weyl_group_order();
  d["rho"] = rs.rho().values();
  return d;
}

py::dict character(const std::string& type, const Ints& lambda) {
  const auto rs = RootSystem::build(type);
  const auto ch = dominant_character(rs, Weight(lambda));
  py::dict mults;
  for (const auto& [mu, m] : ch.mults) mults[py::tuple(py::cast(mu.values()))] = m;
  py::dict d;
  d["lambda"] = lambda;
  d["dimension"] = ch.dimension(rs);
  d["mults"] = mults;
  return d;
}

std::map<std::int64_t, std::uint64_t> branch(const std::string& type, const Ints& lambda, const std::optional<Ints>& root,
                                             const std::optional<Ints>& marks) {
  const auto rs = RootSystem::build(type);
  return sl2_decompose(rs, Weight(lambda), pick_embedding(rs, root, marks)).mults;
}

py::dict bound(const std::string& type, std::int64_t cap, unsigned jobs) {
  const auto rs = RootSystem::build(type);
  const auto r = b_bound(rs, principal_embedding(rs), cap, {nullptr, jobs});
  py::dict d;
  d["b"] = r.b;
  d["m"] = r.m.values;
  d["box"] = r.box;
  d["max_g0"] = r.max_g0;
  d["argmax"] = r.argmax.values();
  return d;
}

py::list parabolic(const std::string& type) {
  py::list rows;
  for (const auto& row : parabolic_table(parse_component(type))) {
    py::dict d;
    d["node"] = row.node;
    d["levi"] = components_label(row.levi_ss_components);
    d["dim_g_mod_lss"] = row.dim_g_mod_lss;
    d["dim_X"] = row.dim_X;
    rows.append(d);
  }
  return rows;
}

std::vector<std::string> names(const std::vector<SimpleComponent>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.name());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Characters, sl2 branching and semigroup bounds for simple Lie algebras";

  py::register_exception<Sl2CertificateError>(m, "Sl2CertificateError", PyExc_ArithmeticError);
  py::register_exception<MissingMValueError>(m, "MissingMValueError", PyExc_RuntimeError);

  m.def("describe", &describe, py::arg("type"));
  m.def("weyl_dimension", [](const std::string& type, const Ints& lambda) {
    return RootSystem::build(type).weyl_dimension(Weight(lambda));
  }, py::arg("type"), py::arg("weight"));
  m.def("character", &character, py::arg("type"), py::arg("weight"));
  m.def("branch", &branch, py::arg("type"), py::arg("weight"), py::kw_only(), py::arg("root") = py::none(),
        py::arg("marks") = py::none());
  m.def("invariant_dim", [](const std::string& type, const Ints& lambda, const std::optional<Ints>& root,
                            const std::optional<Ints>& marks) {
    const auto rs = RootSystem::build(type);
    return invariant_dim(rs, Weight(lambda), pick_embedding(rs, root, marks));
  }, py::arg("type"), py::arg("weight"), py::kw_only(), py::arg("root") = py::none(), py::arg("marks") = py::none());
  m.def("g0", [](const std::string& type, const Ints& lambda, const std::optional<Ints>& root,
                 const std::optional<Ints>& marks) {
    const auto rs = RootSystem::build(type);
    return g0(rs, Weight(lambda), pick_embedding(rs, root, marks));
  }, py::arg("type"), py::arg("weight"), py::kw_only(), py::arg("root") = py::none(), py::arg("marks") = py::none());

  m.def("complement", [](const std::vector<LatticePoint>& gens, std::int64_t box_bound) {
    const auto r = complement(GeneratorSet(gens), box_bound);
    return py::make_tuple(r.points, r.certified);
  }, py::arg("gens"), py::arg("box_bound") = kDefaultBoxBound,
     "Non-members in the box and whether the list is certified complete.");
  m.def("is_member", [](const std::vector<LatticePoint>& gens, const Ints& v) {
    return member(GeneratorSet(gens), v);
  }, py::arg("gens"), py::arg("point"));

  m.def("b_bound", &bound, py::arg("type") = "G2", py::arg("cap") = kDefaultMCap, py::arg("jobs") = 1u);
  m.def("parabolic_table", &parabolic, py::arg("type"));
  m.def("e_value", [](const std::string& type) { return e_value(parse_component(type)); }, py::arg("type"));
  m.def("exclusion_set", [](std::int64_t dim_k, int rank_cap) { return names(exclusion_set(dim_k, rank_cap)); },
        py::arg("dim_k"), py::arg("rank_cap") = 10);

  auto g = m.def_submodule("golden", "Reference tables shipped with the library");
  g.def("invariant_table", &golden::invariant_table);
  g.def("g0_table", &golden::g0_table);
  g.def("exceptions", &golden::exceptions);
  g.def("nine_generator_complement", &golden::nine_generator_complement);
  g.def("generators", [](const std::string& name) { return golden::generators(name).gens(); }, py::arg("name"));
  g.def("exclusion_sl3", [] { return names(golden::exclusion_sl3()); });
}
