#include "liebranch/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "liebranch/parallel.hpp"

namespace liebranch {

bool MValues::all_positive() const {
  return std::all_of(values.begin(), values.end(), [](std::int64_t m) { return m > 0; });
}

std::shared_ptr<const Character> character_of(const RootSystem& rs, const Weight& lambda, const ComputeOptions& opts) {
  if (opts.cache) return opts.cache->get(rs, lambda);
  return std::make_shared<const Character>(dominant_character(rs, lambda));
}

std::int64_t m_value(const RootSystem& rs, const Sl2Embedding& emb, int j, std::int64_t cap,
                     const ComputeOptions& opts) {
  if (j < 1 || j > rs.rank()) throw std::invalid_argument("node index out of range");
  if (cap < 1) throw std::invalid_argument("m-value cap must be at least 1");
  for (std::int64_t n = 1; n <= cap; ++n) {
    Weight lambda = rs.zero_weight();
    lambda[static_cast<std::size_t>(j - 1)] = n;
    if (invariant_dim(rs, *character_of(rs, lambda, opts), emb) > 0) return n;
  }
  return 0;
}

MValues m_values(const RootSystem& rs, const Sl2Embedding& emb, std::int64_t cap, const ComputeOptions& opts) {
  MValues m;
  m.cap = cap;
  m.values.assign(static_cast<std::size_t>(rs.rank()), 0);
  parallel_for(m.values.size(), opts.jobs,
               [&](std::size_t j) { m.values[j] = m_value(rs, emb, static_cast<int>(j) + 1, cap, opts); });
  return m;
}

MissingMValueError::MissingMValueError(int node, std::int64_t cap)
    : std::runtime_error("m" + std::to_string(node) + " not found within cap " + std::to_string(cap)), node_(node) {}

BoundResult b_bound(const RootSystem& rs, const Sl2Embedding& emb, std::int64_t cap, const ComputeOptions& opts) {
  BoundResult result;
  result.m = m_values(rs, emb, cap, opts);
  for (std::size_t j = 0; j < result.m.values.size(); ++j) {
    if (result.m.values[j] == 0) throw MissingMValueError(static_cast<int>(j) + 1, cap);
  }
  result.box = result.m.values;

  std::vector<Weight> cells;
  Weight lambda = rs.zero_weight();
  while (true) {
    cells.push_back(lambda);
    std::size_t i = 0;
    for (; i < lambda.size(); ++i) {
      if (++lambda[i] < result.box[i]) break;
      lambda[i] = 0;
    }
    if (i == lambda.size()) break;
  }
  std::sort(cells.begin(), cells.end());
  result.box_size = cells.size();

  std::vector<std::uint64_t> values(cells.size());
  parallel_for(cells.size(), opts.jobs, [&](std::size_t i) {
    values[i] = g0(sl2_decompose(rs, *character_of(rs, cells[i], opts), emb));
  });
  const auto best = std::max_element(values.begin(), values.end());
  result.max_g0 = *best;
  result.argmax = cells[static_cast<std::size_t>(best - values.begin())];
  result.b = result.max_g0 + 1;
  return result;
}

std::vector<SimpleComponent> levi_ss_components(const SimpleComponent& type, int k) {
  type.validate();
  if (k < 1 || k > type.rank) throw std::invalid_argument("node index out of range");
  const RootSystem rs = RootSystem::build({type});
  std::vector<int> nodes;
  for (int i = 0; i < type.rank; ++i)
    if (i != k - 1) nodes.push_back(i);
  return rs.subdiagram_components(nodes);
}

std::vector<ParabolicRow> parabolic_table(const SimpleComponent& type) {
  std::vector<ParabolicRow> rows;
  const std::int64_t dim_g = algebra_dimension(type);
  for (int k = 1; k <= type.rank; ++k) {
    ParabolicRow row;
    row.node = k;
    row.levi_ss_components = levi_ss_components(type, k);
    row.dim_g_mod_lss = dim_g;
    for (const auto& c : row.levi_ss_components) row.dim_g_mod_lss -= algebra_dimension(c);
    if (row.dim_g_mod_lss % 2 == 0) throw std::logic_error("dim g/l_ss is even for " + type.name());
    row.dim_X = (row.dim_g_mod_lss + 1) / 2;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::int64_t e_value(const SimpleComponent& type) {
  const auto rows = parabolic_table(type);
  std::int64_t e = rows.front().dim_X;
  for (const auto& row : rows) e = std::min(e, row.dim_X);
  return e;
}

SimpleComponent normalize_type(const SimpleComponent& c) {
  if ((c.family == Family::B || c.family == Family::C) && c.rank == 1) return {Family::A, 1};
  if (c.family == Family::C && c.rank == 2) return {Family::B, 2};
  if (c.family == Family::D && c.rank == 3) return {Family::A, 3};
  return c;
}

std::vector<SimpleComponent> exclusion_set(std::int64_t dim_k, int rank_cap) {
  if (rank_cap < 2) throw std::invalid_argument("rank cap must be at least 2");
  struct ClassicalFamily {
    Family family;
    int min_rank;
  };
  const ClassicalFamily classical[] = {{Family::A, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 3}};
  std::vector<SimpleComponent> out;
  for (const auto& fam : classical) {
    std::int64_t prev = 0;
    for (int n = fam.min_rank; n <= rank_cap; ++n) {
      const std::int64_t e = e_value({fam.family, n});
      if (n >= 2 && n > fam.min_rank && e <= prev) {
        throw std::invalid_argument("e is not strictly increasing in family " +
                                    std::string(1, static_cast<char>(fam.family)));
      }
      prev = e;
      if (dim_k >= e) out.push_back(normalize_type({fam.family, n}));
    }
    if (prev <= dim_k) {
      throw std::invalid_argument("rank cap " + std::to_string(rank_cap) + " too small: e(" +
                                  SimpleComponent{fam.family, rank_cap}.name() + ") = " + std::to_string(prev) +
                                  " <= " + std::to_string(dim_k));
    }
  }
  const SimpleComponent exceptional[] = {{Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
  for (const auto& c : exceptional) {
    if (c.rank <= rank_cap && dim_k >= e_value(c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string components_label(const std::vector<SimpleComponent>& comps) {
  if (comps.empty()) return "-";
  std::string s;
  for (const auto& c : comps) s += c.name();
  return s;
}

}  // namespace liebranch
