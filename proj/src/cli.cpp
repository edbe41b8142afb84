#include "liebranch/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liebranch/bounds.hpp"
#include "liebranch/character.hpp"
#include "liebranch/checked.hpp"
#include "liebranch/golden.hpp"
#include "liebranch/parallel.hpp"
#include "liebranch/rootsys.hpp"
#include "liebranch/semigroup.hpp"
#include "liebranch/sl2branch.hpp"

namespace liebranch::cli {
namespace {

using nlohmann::json;

enum class Format { text, csv, json };

class GoldenMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  Format format = Format::text;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  std::unique_ptr<CharacterCache> cache;
  unsigned jobs = 1;
  bool golden = false;

  ComputeOptions options() const { return {cache.get(), jobs}; }
};

RootSystem read_type(const std::string& family, int rank) {
  SimpleComponent c{parse_family(family), rank};
  c.validate();
  return RootSystem::build({c});
}

Weight read_weight(const RootSystem& rs, const std::vector<std::int64_t>& coords) {
  if (coords.size() != static_cast<std::size_t>(rs.rank())) {
    throw std::invalid_argument("expected " + std::to_string(rs.rank()) + " weight coordinates, got " +
                                std::to_string(coords.size()));
  }
  Weight w(coords);
  if (!is_dominant(w)) throw std::invalid_argument("highest weight " + to_string(w) + " is not dominant");
  return w;
}

struct EmbeddingFlags {
  bool principal = false;
  std::vector<std::int64_t> root;
  std::vector<std::int64_t> marks;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_flag("--principal", principal, "principal sl2 (default)");
    auto* r = cmd->add_option("--root", root, "root sl2 for the positive root with these simple-root coordinates");
    auto* m = cmd->add_option("--marks", marks, "custom sl2 given by alpha_i(h)");
    p->excludes(r)->excludes(m);
    r->excludes(m);
  }

  Sl2Embedding resolve(const RootSystem& rs) const {
    if (!root.empty()) {
      if (root.size() != static_cast<std::size_t>(rs.rank())) throw std::invalid_argument("--root needs rank entries");
      return root_embedding(rs, RootCoords(root));
    }
    if (!marks.empty()) return custom_embedding(rs, marks);
    return principal_embedding(rs);
  }
};

std::string point_string(const LatticePoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

// Prints a 2D integer grid indexed by (i, j) in the selected format.
void print_grid(const Context& ctx, const std::string& title, const golden::Grid& grid) {
  std::ostream& out = *ctx.out;
  switch (ctx.format) {
    case Format::json:
      out << json{{"title", title}, {"rows", grid}}.dump() << "\n";
      return;
    case Format::csv:
      out << "i";
      for (std::size_t j = 0; j < (grid.empty() ? 0 : grid[0].size()); ++j) out << "," << j;
      out << "\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << i;
        for (auto v : grid[i]) out << "," << v;
        out << "\n";
      }
      return;
    case Format::text: {
      std::size_t width = 3;
      for (const auto& row : grid)
        for (auto v : row) width = std::max(width, std::to_string(v).size() + 1);
      out << title << "\n";
      out << std::setw(4) << "i\\j" << " |";
      for (std::size_t j = 0; j < (grid.empty() ? 0 : grid[0].size()); ++j) out << std::setw(static_cast<int>(width)) << j;
      out << "\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out << std::setw(4) << i << " |";
        for (auto v : grid[i]) out << std::setw(static_cast<int>(width)) << v;
        out << "\n";
      }
      return;
    }
  }
}

// Compares the overlap of a computed grid with a reference grid.
void compare_grid(const Context& ctx, const std::string& what, const golden::Grid& got, const golden::Grid& want) {
  std::size_t mismatches = 0, compared = 0;
  for (std::size_t i = 0; i < got.size() && i < want.size(); ++i) {
    for (std::size_t j = 0; j < got[i].size() && j < want[i].size(); ++j) {
      ++compared;
      if (got[i][j] != want[i][j]) {
        ++mismatches;
        *ctx.err << what << " mismatch at (" << i << "," << j << "): computed " << got[i][j] << ", reference "
                 << want[i][j] << "\n";
      }
    }
  }
  if (mismatches) throw GoldenMismatch(what + ": " + std::to_string(mismatches) + " mismatching entries");
  *ctx.err << what << ": " << compared << " entries match the reference table\n";
}

golden::Grid g2_grid(const Context& ctx, int max_i, int max_j, bool g0_values) {
  if (max_i < 0 || max_j < 0) throw std::invalid_argument("table bounds must be nonnegative");
  const RootSystem rs = RootSystem::build("G2");
  const Sl2Embedding emb = principal_embedding(rs);
  const auto rows = static_cast<std::size_t>(max_i) + 1;
  const auto cols = static_cast<std::size_t>(max_j) + 1;
  golden::Grid grid(rows, std::vector<std::uint64_t>(cols, 0));
  const auto opts = ctx.options();
  parallel_for(rows * cols, ctx.jobs, [&](std::size_t cell) {
    const auto i = cell / cols, j = cell % cols;
    const Weight lambda{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)};
    const auto dec = sl2_decompose(rs, *character_of(rs, lambda, opts), emb);
    grid[i][j] = g0_values ? g0(dec) : dec.multiplicity(0);
  });
  return grid;
}

int cmd_describe(Context& ctx, const std::string& family, int rank) {
  const RootSystem rs = read_type(family, rank);
  json doc{{"type", rs.fingerprint()},
           {"family", family},
           {"rank", rs.rank()},
           {"positive_roots", rs.positive_roots().size()},
           {"weyl_group_order", rs.weyl_group_order()},
           {"cartan", rs.cartan_matrix()},
           {"half_norms", rs.half_norms()}};
  if (ctx.format == Format::json) {
    *ctx.out << doc.dump() << "\n";
  } else {
    *ctx.out << "type " << rs.fingerprint() << ", rank " << rs.rank() << ", " << rs.positive_roots().size()
             << " positive roots, |W| = " << rs.weyl_group_order() << "\n";
    *ctx.out << "cartan " << doc["cartan"].dump() << "\n";
    *ctx.out << "half norms " << doc["half_norms"].dump() << "\n";
  }
  return kSuccess;
}

int cmd_character(Context& ctx, const std::string& family, int rank, const std::vector<std::int64_t>& coords) {
  const RootSystem rs = read_type(family, rank);
  const Weight lambda = read_weight(rs, coords);
  const auto ch = character_of(rs, lambda, ctx.options());
  const std::uint64_t dim = ch->dimension(rs);
  if (dim != rs.weyl_dimension(lambda)) throw std::logic_error("character dimension differs from Weyl dimension");
  switch (ctx.format) {
    case Format::json: {
      json doc = to_json(*ch);
      doc["type"] = rs.fingerprint();
      doc["dimension"] = dim;
      *ctx.out << doc.dump() << "\n";
      break;
    }
    case Format::csv:
      *ctx.out << "weight,orbit_size,multiplicity\n";
      for (const auto& [mu, m] : ch->mults) {
        std::string w = to_string(mu);
        *ctx.out << "\"" << w << "\"," << rs.orbit_size(mu) << "," << m << "\n";
      }
      break;
    case Format::text:
      *ctx.out << "L" << to_string(lambda) << " of " << rs.fingerprint() << ": dimension " << dim << "\n";
      *ctx.out << "dominant weights (" << ch->mults.size() << "):\n";
      for (const auto& [mu, m] : ch->mults) {
        *ctx.out << "  " << std::left << std::setw(16) << to_string(mu) << std::right << " mult " << m << "  orbit "
                 << rs.orbit_size(mu) << "\n";
      }
      break;
  }
  return kSuccess;
}

int cmd_branch(Context& ctx, const std::string& family, int rank, const std::vector<std::int64_t>& coords,
               const EmbeddingFlags& flags) {
  const RootSystem rs = read_type(family, rank);
  const Weight lambda = read_weight(rs, coords);
  const Sl2Embedding emb = flags.resolve(rs);
  const auto ch = character_of(rs, lambda, ctx.options());
  const WeightValues values = full_weight_values(rs, *ch, emb.marks);
  const Sl2Decomposition dec = decompose_values(values);
  switch (ctx.format) {
    case Format::json:
      *ctx.out << json{{"type", rs.fingerprint()},
                       {"lambda", lambda.values()},
                       {"marks", emb.marks},
                       {"values", to_json(values)},
                       {"decomposition", to_json(dec)},
                       {"dimension", dec.dimension()},
                       {"invariant_dim", dec.multiplicity(0)},
                       {"g0", g0(dec)}}
                      .dump()
               << "\n";
      break;
    case Format::csv:
      *ctx.out << "k,multiplicity\n";
      for (const auto& [k, m] : dec.mults) *ctx.out << k << "," << m << "\n";
      break;
    case Format::text:
      *ctx.out << "L" << to_string(lambda) << " of " << rs.fingerprint() << " restricted to " << emb.describe()
               << "\n";
      *ctx.out << "weight values N_j:";
      for (const auto& [v, n] : values) *ctx.out << " " << v << ":" << n;
      *ctx.out << "\ndecomposition:";
      for (const auto& [k, m] : dec.mults) *ctx.out << " V(" << k << ")x" << m;
      *ctx.out << "\ndimension " << dec.dimension() << ", invariants " << dec.multiplicity(0) << ", g0 " << g0(dec)
               << "\n";
      break;
  }
  return kSuccess;
}

int cmd_table(Context& ctx, int max_i, int max_j, bool g0_values) {
  const auto grid = g2_grid(ctx, max_i, max_j, g0_values);
  print_grid(ctx,
             g0_values ? "g0(i omega_1 + j omega_2), G2 principal sl2"
                       : "dim L(i omega_1 + j omega_2)^K, G2 principal sl2",
             grid);
  if (ctx.golden) {
    compare_grid(ctx, g0_values ? "table2" : "table1", grid,
                 g0_values ? golden::g0_table() : golden::invariant_table());
  }
  return kSuccess;
}

std::vector<LatticePoint> exceptional_weights(Context& ctx, const std::string& set_name, std::int64_t bound,
                                              std::vector<LatticePoint>* complement_points) {
  const GeneratorSet gs = golden::generators(set_name);
  const ComplementResult comp = complement(gs, bound);
  if (!comp.certified) {
    throw CertificationError("complement of the " + set_name + "-generator set is not certified at box bound " +
                             std::to_string(bound));
  }
  if (complement_points) *complement_points = comp.points;
  const RootSystem rs = RootSystem::build("G2");
  const Sl2Embedding emb = principal_embedding(rs);
  std::vector<std::uint64_t> inv(comp.points.size());
  const auto opts = ctx.options();
  parallel_for(comp.points.size(), ctx.jobs, [&](std::size_t i) {
    inv[i] = invariant_dim(rs, *character_of(rs, Weight(comp.points[i]), opts), emb);
  });
  std::vector<LatticePoint> zeros;
  for (std::size_t i = 0; i < inv.size(); ++i)
    if (inv[i] == 0) zeros.push_back(comp.points[i]);
  return zeros;
}

int cmd_exceptions(Context& ctx, const std::string& set_name, std::int64_t bound) {
  std::vector<LatticePoint> comp;
  const auto zeros = exceptional_weights(ctx, set_name, bound, &comp);
  switch (ctx.format) {
    case Format::json:
      *ctx.out << json{{"generators", set_name}, {"complement_size", comp.size()}, {"exceptions", zeros}}.dump()
               << "\n";
      break;
    case Format::csv:
      *ctx.out << "a,b\n";
      for (const auto& p : zeros) *ctx.out << p[0] << "," << p[1] << "\n";
      break;
    case Format::text:
      *ctx.out << "complement of the " << set_name << "-generator semigroup: " << comp.size() << " weights\n";
      *ctx.out << zeros.size() << " weights without invariants:";
      for (const auto& p : zeros) *ctx.out << " " << point_string(p);
      *ctx.out << "\n";
      break;
  }
  if (set_name == "nine" && comp != golden::nine_generator_complement()) {
    throw GoldenMismatch("nine-generator complement differs from the reference list");
  }
  if (zeros != golden::exceptions()) throw GoldenMismatch("exception list differs from the reference list");
  return kSuccess;
}

GeneratorSet read_generators(const std::vector<std::string>& gen_flags, const std::string& file,
                             const std::string& preset) {
  const int sources = !gen_flags.empty() + !file.empty() + !preset.empty();
  if (sources != 1) throw std::invalid_argument("give generators with exactly one of --gen, --gens-file, --preset");
  if (!preset.empty()) return golden::generators(preset);
  std::vector<LatticePoint> gens;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    json doc = json::parse(in);
    if (doc.is_object()) doc = doc.at("gens");
    gens = doc.get<std::vector<LatticePoint>>();
  } else {
    for (const auto& text : gen_flags) {
      LatticePoint p;
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) p.push_back(std::stoll(item));
      gens.push_back(std::move(p));
    }
  }
  return GeneratorSet(std::move(gens));
}

int cmd_complement(Context& ctx, const GeneratorSet& gs, std::int64_t bound, const std::string& preset) {
  const ComplementResult result = complement(gs, bound);
  switch (ctx.format) {
    case Format::json:
      *ctx.out << json{{"points", result.points}, {"certified", result.certified}, {"box_bound", result.box_bound}}
                      .dump()
               << "\n";
      break;
    case Format::csv:
      for (const auto& p : result.points) {
        for (std::size_t i = 0; i < p.size(); ++i) *ctx.out << (i ? "," : "") << p[i];
        *ctx.out << "\n";
      }
      break;
    case Format::text:
      *ctx.out << json(result.points).dump() << "\n";
      *ctx.err << result.points.size() << " points, " << (result.certified ? "certified" : "NOT certified")
               << " at box bound " << bound << "\n";
      break;
  }
  if (!result.certified) throw CertificationError("complement not certified at box bound " + std::to_string(bound));
  if (ctx.golden && preset == "nine" && result.points != golden::nine_generator_complement()) {
    throw GoldenMismatch("nine-generator complement differs from the reference list");
  }
  return kSuccess;
}

int cmd_bound(Context& ctx, const std::string& family, int rank, const EmbeddingFlags& flags, std::int64_t cap) {
  const RootSystem rs = read_type(family, rank);
  const Sl2Embedding emb = flags.resolve(rs);
  const BoundResult r = b_bound(rs, emb, cap, ctx.options());
  switch (ctx.format) {
    case Format::json:
      *ctx.out << json{{"type", rs.fingerprint()},     {"marks", emb.marks},    {"b", r.b},
                       {"m", r.m.values},              {"cap", r.m.cap},        {"box", r.box},
                       {"box_size", r.box_size},       {"max_g0", r.max_g0},    {"argmax", r.argmax.values()}}
                      .dump()
               << "\n";
      break;
    case Format::csv:
      *ctx.out << "type,b,max_g0,m\n" << rs.fingerprint() << "," << r.b << "," << r.max_g0 << ",\""
               << json(r.m.values).dump() << "\"\n";
      break;
    case Format::text:
      *ctx.out << rs.fingerprint() << ", " << emb.describe() << "\n";
      *ctx.out << "m = " << json(r.m.values).dump() << " (cap " << r.m.cap << ")\n";
      *ctx.out << "C0 = box " << json(r.box).dump() << " with " << r.box_size << " weights\n";
      *ctx.out << "max g0 over C0 = " << r.max_g0 << " at " << to_string(r.argmax) << "\n";
      *ctx.out << "b = " << r.b << "\n";
      break;
  }
  return kSuccess;
}

void check_parabolic_golden(const Context& ctx, const SimpleComponent& type, const std::vector<ParabolicRow>& rows,
                            std::size_t& mismatches) {
  for (const auto& table : golden::parabolic_tables()) {
    if (table.type != type) continue;
    if (table.rows.size() != rows.size()) {
      ++mismatches;
      *ctx.err << type.name() << ": row count differs from the reference table\n";
      continue;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<SimpleComponent> got;
      for (const auto& c : rows[k].levi_ss_components) got.push_back(normalize_type(c));
      std::sort(got.begin(), got.end());
      if (got != golden::parse_levi_label(table.rows[k].levi) || rows[k].dim_g_mod_lss != table.rows[k].dim_g_mod_lss) {
        ++mismatches;
        *ctx.err << type.name() << " node " << k + 1 << ": computed " << components_label(rows[k].levi_ss_components)
                 << " " << rows[k].dim_g_mod_lss << ", reference " << table.rows[k].levi << " "
                 << table.rows[k].dim_g_mod_lss << "\n";
      }
    }
  }
}

int cmd_parabolic(Context& ctx, const std::string& family, int rank, bool all) {
  std::vector<SimpleComponent> types;
  if (all) {
    for (const auto& t : golden::parabolic_tables()) types.push_back(t.type);
  } else {
    if (family.empty()) throw std::invalid_argument("give FAMILY RANK or --all");
    SimpleComponent c{parse_family(family), rank};
    c.validate();
    types.push_back(c);
  }
  std::size_t mismatches = 0;
  json doc = json::array();
  if (ctx.format == Format::csv) *ctx.out << "type,node,levi_ss,dim_g_mod_lss,dim_X\n";
  for (const auto& type : types) {
    const auto rows = parabolic_table(type);
    if (ctx.golden) check_parabolic_golden(ctx, type, rows, mismatches);
    json jrows = json::array();
    if (ctx.format == Format::text) {
      *ctx.out << type.name() << " (dim " << algebra_dimension(type) << ")\n";
      *ctx.out << "  node  " << std::left << std::setw(10) << "l_ss" << std::right << std::setw(12) << "dim g/l_ss"
               << std::setw(8) << "dim X" << "\n";
    }
    for (const auto& row : rows) {
      const std::string label = components_label(row.levi_ss_components);
      switch (ctx.format) {
        case Format::json:
          jrows.push_back({{"node", row.node}, {"levi_ss", label}, {"dim_g_mod_lss", row.dim_g_mod_lss}, {"dim_X", row.dim_X}});
          break;
        case Format::csv:
          *ctx.out << type.name() << "," << row.node << "," << label << "," << row.dim_g_mod_lss << "," << row.dim_X
                   << "\n";
          break;
        case Format::text:
          *ctx.out << "  " << std::setw(4) << row.node << "  " << std::left << std::setw(10) << label << std::right
                   << std::setw(12) << row.dim_g_mod_lss << std::setw(8) << row.dim_X << "\n";
          break;
      }
    }
    if (ctx.format == Format::json) doc.push_back({{"type", type.name()}, {"rows", jrows}});
  }
  if (ctx.format == Format::json) *ctx.out << doc.dump() << "\n";
  if (mismatches) throw GoldenMismatch(std::to_string(mismatches) + " parabolic rows differ from the reference tables");
  return kSuccess;
}

int cmd_e_table(Context& ctx, const std::vector<std::string>& names) {
  std::vector<SimpleComponent> types;
  if (names.empty()) {
    for (const auto& v : golden::e_values()) types.push_back(v.type);
  } else {
    for (const auto& n : names) types.push_back(parse_component(n));
  }
  std::vector<std::int64_t> values;
  for (const auto& t : types) values.push_back(e_value(t));
  switch (ctx.format) {
    case Format::json: {
      json doc = json::array();
      for (std::size_t i = 0; i < types.size(); ++i) doc.push_back({{"type", types[i].name()}, {"e", values[i]}});
      *ctx.out << doc.dump() << "\n";
      break;
    }
    case Format::csv:
      *ctx.out << "type,e\n";
      for (std::size_t i = 0; i < types.size(); ++i) *ctx.out << types[i].name() << "," << values[i] << "\n";
      break;
    case Format::text:
      *ctx.out << std::setw(4) << "s";
      for (const auto& t : types) *ctx.out << std::setw(4) << t.name();
      *ctx.out << "\n" << std::setw(4) << "e";
      for (auto v : values) *ctx.out << std::setw(4) << v;
      *ctx.out << "\n";
      break;
  }
  if (ctx.golden) {
    std::size_t mismatches = 0;
    for (const auto& ref : golden::e_values()) {
      for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i] == ref.type && values[i] != ref.e) {
          ++mismatches;
          *ctx.err << "e(" << ref.type.name() << "): computed " << values[i] << ", reference " << ref.e << "\n";
        }
      }
    }
    if (mismatches) throw GoldenMismatch(std::to_string(mismatches) + " e-values differ from the reference row");
  }
  return kSuccess;
}

int cmd_exclusion(Context& ctx, std::int64_t dim_k, int rank_cap) {
  const auto types = exclusion_set(dim_k, rank_cap);
  std::vector<std::string> names;
  for (const auto& t : types) names.push_back(t.name());
  switch (ctx.format) {
    case Format::json:
      *ctx.out << json{{"dim_k", dim_k}, {"rank_cap", rank_cap}, {"types", names}}.dump() << "\n";
      break;
    case Format::csv:
      *ctx.out << "type,e\n";
      for (const auto& t : types) *ctx.out << t.name() << "," << e_value(t) << "\n";
      break;
    case Format::text:
      *ctx.out << "E(dim " << dim_k << ") = {";
      for (std::size_t i = 0; i < names.size(); ++i) *ctx.out << (i ? ", " : "") << names[i];
      *ctx.out << "}\n";
      break;
  }
  if (ctx.golden && dim_k == 8 && types != golden::exclusion_sl3()) {
    throw GoldenMismatch("exclusion set differs from the reference set");
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching of simple Lie algebra representations to sl2-subalgebras", "liebranch"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string cache_dir;
  unsigned jobs = 1;
  bool golden = false;
  bool verify_cache = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--cache-dir", cache_dir, std::string("persist characters here (default: $") + kCacheDirEnv + ")");
  app.add_option("--jobs,-j", jobs, "worker threads for table fills")->check(CLI::Range(1u, 1024u));
  app.add_flag("--golden", golden, "compare against the embedded reference data; exit 2 on mismatch");
  app.add_flag("--verify-cache", verify_cache, "recompute every cached character and fail on any difference");

  std::string family;
  int rank = 0;
  std::vector<std::int64_t> lambda;
  EmbeddingFlags emb_flags;
  int max_i = 19, max_j = 19;
  std::int64_t bound = kDefaultBoxBound;
  std::int64_t cap = kDefaultMCap;
  std::string set_name = "nine";
  std::vector<std::string> gen_flags;
  std::string gens_file, preset;
  bool all = false;
  std::vector<std::string> type_names;
  std::int64_t dim_k = 0;
  int rank_cap = 10;

  auto* describe = app.add_subcommand("describe", "root system summary");
  describe->add_option("family", family)->required();
  describe->add_option("rank", rank)->required();

  auto* character = app.add_subcommand("character", "dominant weight multiplicities of L(lambda)");
  character->add_option("family", family)->required();
  character->add_option("rank", rank)->required();
  character->add_option("lambda", lambda, "highest weight in fundamental-weight coordinates")->required();

  auto* branch = app.add_subcommand("branch", "restrict L(lambda) to an sl2-subalgebra");
  branch->add_option("family", family)->required();
  branch->add_option("rank", rank)->required();
  branch->add_option("lambda", lambda)->required();
  emb_flags.attach(branch);

  auto* table1 = app.add_subcommand("table1", "invariant dimensions for G2 and its principal sl2");
  auto* table2 = app.add_subcommand("table2", "g0 values for G2 and its principal sl2");
  for (auto* t : {table1, table2}) {
    t->add_option("--max-i", max_i, "largest coefficient of omega_1");
    t->add_option("--max-j", max_j, "largest coefficient of omega_2");
  }

  auto* exceptions = app.add_subcommand("exceptions", "G2 highest weights without principal sl2 invariants");
  exceptions->add_option("--set", set_name, "generator set used for the certificate")
      ->check(CLI::IsMember({"six", "nine"}));
  exceptions->add_option("--bound", bound, "box bound for the complement");

  auto* comp = app.add_subcommand("complement", "finite complement of a subsemigroup of N^r");
  comp->add_option("--gen", gen_flags, "generator as comma-separated coordinates (repeatable)");
  comp->add_option("--gens-file", gens_file, "JSON file with a list of generators");
  comp->add_option("--preset", preset, "built-in generator set")->check(CLI::IsMember({"six", "nine"}));
  comp->add_option("--bound", bound, "box bound");

  auto* bound_cmd = app.add_subcommand("bound", "m-values, C0 and b for an sl2-subalgebra");
  bound_cmd->add_option("family", family)->required();
  bound_cmd->add_option("rank", rank)->required();
  bound_cmd->add_option("--cap", cap, "search cap for the m-values");
  emb_flags.attach(bound_cmd);

  auto* parabolic = app.add_subcommand("parabolic-table", "maximal parabolic dimensions");
  parabolic->add_option("family", family);
  parabolic->add_option("rank", rank);
  parabolic->add_flag("--all", all, "every type with a reference table");

  auto* etable = app.add_subcommand("e-table", "minimal orbit dimension e(s)");
  etable->add_option("types", type_names, "simple types such as G2 B4");

  auto* exclusion = app.add_subcommand("exclusion-set", "simple types s with e(s) <= dim k");
  exclusion->add_option("dim_k", dim_k)->required();
  exclusion->add_option("--rank-cap", rank_cap, "largest rank examined");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Context ctx;
  ctx.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  ctx.out = &out;
  ctx.err = &err;
  ctx.jobs = jobs;
  ctx.golden = golden;

  try {
    if (cache_dir.empty()) {
      if (const char* env = std::getenv(kCacheDirEnv)) cache_dir = env;
    }
    ctx.cache = std::make_unique<CharacterCache>(
        cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache_dir), verify_cache);

    if (describe->parsed()) return cmd_describe(ctx, family, rank);
    if (character->parsed()) return cmd_character(ctx, family, rank, lambda);
    if (branch->parsed()) return cmd_branch(ctx, family, rank, lambda, emb_flags);
    if (table1->parsed()) return cmd_table(ctx, max_i, max_j, false);
    if (table2->parsed()) return cmd_table(ctx, max_i, max_j, true);
    if (exceptions->parsed()) return cmd_exceptions(ctx, set_name, bound);
    if (comp->parsed()) return cmd_complement(ctx, read_generators(gen_flags, gens_file, preset), bound, preset);
    if (bound_cmd->parsed()) return cmd_bound(ctx, family, rank, emb_flags, cap);
    if (parabolic->parsed()) return cmd_parabolic(ctx, family, rank, all);
    if (etable->parsed()) return cmd_e_table(ctx, type_names);
    if (exclusion->parsed()) return cmd_exclusion(ctx, dim_k, rank_cap);
  } catch (const GoldenMismatch& e) {
    err << "golden mismatch: " << e.what() << "\n";
    return kGoldenMismatch;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const MissingMValueError& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const CacheMismatchError& e) {
    err << "cache verification failed: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const Sl2CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kUsageError;
}

}  // namespace liebranch::cli
