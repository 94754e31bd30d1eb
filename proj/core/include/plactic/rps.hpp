// Right patience sorting: tableaux with bottom-aligned columns, the action
// of generators on the set of possible bottom rows, and the block-diagonal
// representation whose (x, y) block records how many copies of x column y
// receives.  Bottom rows are subsets of [rank] stored as bitmasks.
#pragma once

#include <bit>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <vector>

#include "plactic/matrix.hpp"
#include "plactic/word.hpp"

namespace plactic::rps {

struct RpsTableau {
  std::vector<std::vector<Symbol>> columns;  // each column bottom to top

  bool empty() const { return columns.empty(); }
  friend bool operator==(const RpsTableau&, const RpsTableau&) = default;
};

bool valid(const RpsTableau& t);

/// A symbol larger than every bottom entry opens a new rightmost column;
/// otherwise it becomes the new bottom of the leftmost column whose bottom
/// is >= the symbol.
RpsTableau insert(RpsTableau t, Symbol a);

/// Left-to-right insertion of the whole word, starting from empty.
RpsTableau tableau_of(const Word& w);

bool equivalent(const Word& u, const Word& v);

/// Subset of [rank]; bit k-1 set means symbol k is present.
using BottomRow = std::uint32_t;

inline int row_size(BottomRow b) { return std::popcount(b); }
int row_sum(BottomRow b);
std::vector<Symbol> row_symbols(BottomRow b);

/// Bottom row after inserting z into any tableau with bottom row b.
BottomRow row_insert(BottomRow b, Symbol z);

/// 1-based column index that receives z when inserted into a tableau with
/// bottom row b.
int landing_column(BottomRow b, Symbol z);

/// 1 iff inserting z into a tableau with bottom row b adds an x to column y.
int count_delta(BottomRow b, Symbol z, Symbol x, int y);

/// All 2^rank bottom rows in the fixed linear extension of the reachability
/// order: size ascending, then sum descending, then lexicographic on the
/// sorted symbols.  Every block of the representation is upper triangular
/// under this order.
std::vector<BottomRow> row_order(int rank);

/// The (x, y) block: entry (p, p.w) is alpha^(number of copies of x added
/// to column y while inserting w after bottom row p); all other entries are
/// zero.  Rows and columns are indexed by row_order(rank).
template <Semiring S>
Matrix<S> column_count_matrix(const Word& w, int rank, Symbol x, int y) {
  const std::vector<BottomRow> order = row_order(rank);
  std::vector<int> index(std::size_t{1} << rank);
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = static_cast<int>(k);

  Matrix<S> m(static_cast<int>(order.size()));
  for (BottomRow start : order) {
    BottomRow b = start;
    std::uint64_t added = 0;
    for (Symbol z : w) {
      if (z < 1 || z > rank)
        throw std::invalid_argument("symbol out of range for rank");
      added += static_cast<std::uint64_t>(count_delta(b, z, x, y));
      b = row_insert(b, z);
    }
    m.at(index[start], index[b]) = alpha_pow<S>(added);
  }
  return m;
}

/// Blocks (x, y) for all pairs x >= y, ordered by x then y; total dimension
/// 2^(rank-1) * (rank^2 + rank).
template <Semiring S>
BlockDiag<S> representation(const Word& w, int rank) {
  BlockDiag<S> m;
  for (Symbol x = 1; x <= rank; ++x)
    for (int y = 1; y <= x; ++y)
      m.blocks.push_back(column_count_matrix<S>(w, rank, x, y));
  return m;
}

/// Longest chain of distinct bottom rows connected by the action,
/// equal to rank*(rank+1)/2 + 1.
int chain_length(int rank);

/// Word whose insertion from the empty row passes through a chain of
/// maximal length: the runs (rank-i+1, ..., rank) for i = 1..rank.
Word chain_witness(int rank);

/// Number of distinct bottom rows seen while inserting w from empty.
int distinct_rows_visited(const Word& w);

nlohmann::json to_json(const RpsTableau& t);
RpsTableau tableau_from_json(const nlohmann::json& j);

}  // namespace plactic::rps
