// Dense square matrices over a semiring and block-diagonal assemblies of
// them.  Dimensions in this project stay small (the largest block is
// 2^n x 2^n for the patience sorting representation), so nothing clever is
// attempted.
#pragma once

#include <limits>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <vector>

#include "plactic/semiring.hpp"
#include "plactic/word.hpp"

namespace plactic {

template <Semiring S>
class Matrix {
 public:
  explicit Matrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, S::zero()) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  }

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = S::one();
    return m;
  }

  int dim() const { return dim_; }
  S& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
  const S& at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * dim_ + c];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const S& aik = a.at(i, k);
        if (aik == S::zero()) continue;
        for (int j = 0; j < a.dim_; ++j)
          c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int dim_;
  std::vector<S> e_;
};

template <Semiring S>
bool is_upper_triangular(const Matrix<S>& m) {
  for (int r = 1; r < m.dim(); ++r)
    for (int c = 0; c < r; ++c)
      if (!(m.at(r, c) == S::zero())) return false;
  return true;
}

/// Block-diagonal matrix kept as its list of blocks; equality is blockwise.
template <Semiring S>
struct BlockDiag {
  std::vector<Matrix<S>> blocks;

  int dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.dim();
    return d;
  }

  Matrix<S> flatten() const {
    Matrix<S> m(dim() == 0 ? 1 : dim());
    int off = 0;
    for (const auto& b : blocks) {
      for (int r = 0; r < b.dim(); ++r)
        for (int c = 0; c < b.dim(); ++c) m.at(off + r, off + c) = b.at(r, c);
      off += b.dim();
    }
    return m;
  }

  friend BlockDiag operator*(const BlockDiag& a, const BlockDiag& b) {
    if (a.blocks.size() != b.blocks.size())
      throw std::invalid_argument("block count mismatch");
    BlockDiag c;
    c.blocks.reserve(a.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
      c.blocks.push_back(a.blocks[i] * b.blocks[i]);
    return c;
  }

  friend bool operator==(const BlockDiag&, const BlockDiag&) = default;
};

template <Semiring S>
bool is_upper_triangular(const BlockDiag<S>& m) {
  for (const auto& b : m.blocks)
    if (!is_upper_triangular(b)) return false;
  return true;
}

/// Diagonal content representation: letter x maps to the diagonal matrix
/// with alpha at (x, x) and one elsewhere, so a word maps to
/// diag(alpha^{count of 1}, ..., alpha^{count of rank}).
template <Semiring S>
Matrix<S> content_rep(const Word& w, int rank) {
  Matrix<S> m = Matrix<S>::identity(rank);
  Content ev = content(w);
  for (const auto& [sym, cnt] : ev.counts()) {
    if (sym < 1 || sym > rank)
      throw std::invalid_argument("symbol out of range for rank");
    m.at(sym - 1, sym - 1) = alpha_pow<S>(static_cast<std::uint64_t>(cnt));
  }
  return m;
}

inline nlohmann::json element_json(const Tropical& v) {
  if (v.is_bottom()) return "-inf";
  return v.value();
}

inline nlohmann::json element_json(const Natural& v) {
  // numbers that fit a 64-bit unsigned stay numeric, larger ones decay to
  // decimal strings
  if (v.value() <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(v.value());
  return v.str();
}

template <Semiring S>
nlohmann::json matrix_json(const Matrix<S>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) entries.push_back(element_json(m.at(r, c)));
  return {{"dim", m.dim()}, {"semiring", S::name()}, {"entries", entries}};
}

template <Semiring S>
nlohmann::json block_diag_json(const BlockDiag<S>& m) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : m.blocks) blocks.push_back(matrix_json(b));
  return {{"dim", m.dim()}, {"blocks", blocks}};
}

/// Compact stable serialization used as a grouping key in exhaustive scans.
template <Semiring S>
std::string matrix_key(const Matrix<S>& m) {
  std::string out;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      out += m.at(r, c).str();
      out += ',';
    }
  return out;
}

template <Semiring S>
std::string block_diag_key(const BlockDiag<S>& m) {
  std::string out;
  for (const auto& b : m.blocks) {
    out += std::to_string(b.dim());
    out += ':';
    out += matrix_key(b);
    out += ';';
  }
  return out;
}

}  // namespace plactic
