#include "plactic/rps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plactic::rps {

bool valid(const RpsTableau& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    const auto& col = t.columns[c];
    if (col.empty()) return false;
    for (std::size_t k = 1; k < col.size(); ++k)
      if (col[k - 1] > col[k]) return false;  // non-decreasing bottom to top
    if (c > 0 && t.columns[c - 1].front() >= col.front()) return false;
  }
  return true;
}

RpsTableau insert(RpsTableau t, Symbol a) {
  for (auto& col : t.columns)
    if (col.front() >= a) {
      col.insert(col.begin(), a);
      return t;
    }
  t.columns.push_back({a});
  return t;
}

RpsTableau tableau_of(const Word& w) {
  RpsTableau t;
  for (Symbol a : w) t = insert(std::move(t), a);
  return t;
}

bool equivalent(const Word& u, const Word& v) {
  return tableau_of(u) == tableau_of(v);
}

int row_sum(BottomRow b) {
  int s = 0;
  for (Symbol x = 1; b != 0; ++x, b >>= 1)
    if (b & 1u) s += x;
  return s;
}

std::vector<Symbol> row_symbols(BottomRow b) {
  std::vector<Symbol> out;
  for (Symbol x = 1; b != 0; ++x, b >>= 1)
    if (b & 1u) out.push_back(x);
  return out;
}

BottomRow row_insert(BottomRow b, Symbol z) {
  const BottomRow zbit = BottomRow{1} << (z - 1);
  const BottomRow at_least_z = b & ~(zbit - 1);
  if (at_least_z == 0) return b | zbit;  // z beats every bottom entry
  const BottomRow replaced = at_least_z & (~at_least_z + 1);  // lowest such
  return (b & ~replaced) | zbit;
}

int landing_column(BottomRow b, Symbol z) {
  const BottomRow zbit = BottomRow{1} << (z - 1);
  return std::popcount(b & (zbit - 1)) + 1;
}

int count_delta(BottomRow b, Symbol z, Symbol x, int y) {
  return (z == x && landing_column(b, z) == y) ? 1 : 0;
}

std::vector<BottomRow> row_order(int rank) {
  std::vector<BottomRow> order(std::size_t{1} << rank);
  for (BottomRow b = 0; b < order.size(); ++b) order[b] = b;
  std::sort(order.begin(), order.end(), [](BottomRow a, BottomRow b) {
    if (row_size(a) != row_size(b)) return row_size(a) < row_size(b);
    if (row_sum(a) != row_sum(b)) return row_sum(a) > row_sum(b);
    return row_symbols(a) < row_symbols(b);
  });
  return order;
}

int chain_length(int rank) {
  const std::vector<BottomRow> order = row_order(rank);
  std::vector<int> index(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = static_cast<int>(k);

  // every generator step moves strictly forward in row_order, so a single
  // backward sweep computes the longest path
  std::vector<int> longest(order.size(), 1);
  for (std::size_t k = order.size(); k-- > 0;) {
    BottomRow b = order[k];
    for (Symbol z = 1; z <= rank; ++z) {
      BottomRow q = row_insert(b, z);
      if (q != b)
        longest[k] = std::max(longest[k], 1 + longest[static_cast<std::size_t>(index[q])]);
    }
  }
  return *std::max_element(longest.begin(), longest.end());
}

Word chain_witness(int rank) {
  Word w;
  for (int i = 1; i <= rank; ++i)
    for (Symbol z = rank - i + 1; z <= rank; ++z) w.push_back(z);
  return w;
}

int distinct_rows_visited(const Word& w) {
  std::set<BottomRow> seen;
  BottomRow b = 0;
  seen.insert(b);
  for (Symbol z : w) {
    b = row_insert(b, z);
    seen.insert(b);
  }
  return static_cast<int>(seen.size());
}

nlohmann::json to_json(const RpsTableau& t) {
  return {{"kind", "rps"}, {"columns", t.columns}};
}

RpsTableau tableau_from_json(const nlohmann::json& j) {
  RpsTableau t;
  if (j.value("empty", false)) return t;
  t.columns = j.at("columns").get<std::vector<std::vector<Symbol>>>();
  return t;
}

}  // namespace plactic::rps
