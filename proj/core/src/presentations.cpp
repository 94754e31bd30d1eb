#include "plactic/presentations.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace plactic::pres {

std::optional<Family> family_of(MonoidTag tag) {
  switch (tag) {
    case MonoidTag::Hypo: return Family::Hypo;
    case MonoidTag::Stal: return Family::Stal;
    case MonoidTag::Sylv: return Family::Sylv;
    case MonoidTag::SylvSharp: return Family::SylvSharp;
    default: return std::nullopt;
  }
}

MonoidTag monoid_of(Family family) {
  switch (family) {
    case Family::Hypo: return MonoidTag::Hypo;
    case Family::Stal: return MonoidTag::Stal;
    case Family::Sylv: return MonoidTag::Sylv;
    case Family::SylvSharp: return MonoidTag::SylvSharp;
  }
  throw std::invalid_argument("bad family");
}

namespace {

Word swapped(const Word& w, std::size_t p) {
  Word out = w;
  std::swap(out[p], out[p + 1]);
  return out;
}

Word double_swapped(const Word& w, std::size_t p) {
  Word out = w;
  std::swap(out[p], out[p + 1]);
  std::swap(out[p + 2], out[p + 3]);
  return out;
}

// Every relation schema exchanges two adjacent letters subject to a side
// condition on the surrounding letters; the v parameter of the schemas with
// a word variable ranges over all factor positions, which the existential
// scans below absorb.

void hypo_neighbors(const Word& w, std::set<Word>& out) {
  const std::size_t n = w.size();
  for (std::size_t p = 0; p + 2 < n; ++p) {
    // (acb, cab) with a <= b < c: swap the first two letters
    if (w[p] <= w[p + 2] && w[p + 2] < w[p + 1]) out.insert(swapped(w, p));
    if (w[p + 1] <= w[p + 2] && w[p + 2] < w[p]) out.insert(swapped(w, p));
    // (bac, bca) with a < b <= c: swap the last two letters
    if (w[p + 1] < w[p] && w[p] <= w[p + 2]) out.insert(swapped(w, p + 1));
    if (w[p + 2] < w[p] && w[p] <= w[p + 1]) out.insert(swapped(w, p + 1));
    if (p + 3 < n) {
      // (cadb, acbd) with a <= b < c <= d: swap both adjacent pairs
      if (w[p + 1] <= w[p + 3] && w[p + 3] < w[p] && w[p] <= w[p + 2])
        out.insert(double_swapped(w, p));
      if (w[p] <= w[p + 2] && w[p + 2] < w[p + 1] && w[p + 1] <= w[p + 3])
        out.insert(double_swapped(w, p));
      // (bdac, dbca) with a < b <= c < d
      if (w[p + 2] < w[p] && w[p] <= w[p + 3] && w[p + 3] < w[p + 1])
        out.insert(double_swapped(w, p));
      if (w[p + 3] < w[p + 1] && w[p + 1] <= w[p + 2] && w[p + 2] < w[p])
        out.insert(double_swapped(w, p));
    }
  }
}

void stal_neighbors(const Word& w, std::set<Word>& out) {
  // (bavb, abvb): two adjacent letters may swap when the left one (or,
  // applying the relation backwards, the right one) recurs later on
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    for (std::size_t q = p + 2; q < w.size(); ++q)
      if (w[q] == w[p] || w[q] == w[p + 1]) {
        out.insert(swapped(w, p));
        break;
      }
}

void sylv_neighbors(const Word& w, std::set<Word>& out) {
  // (acvb, cavb) with a <= b < c: the witness b lies to the right
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    for (std::size_t q = p + 2; q < w.size(); ++q)
      if ((w[p] <= w[q] && w[q] < w[p + 1]) ||
          (w[p + 1] <= w[q] && w[q] < w[p])) {
        out.insert(swapped(w, p));
        break;
      }
}

void sylvsharp_neighbors(const Word& w, std::set<Word>& out) {
  // (bvac, bvca) with a < b <= c: the witness b lies to the left
  for (std::size_t p = 1; p + 1 < w.size(); ++p)
    for (std::size_t q = 0; q < p; ++q)
      if ((w[p] < w[q] && w[q] <= w[p + 1]) ||
          (w[p + 1] < w[q] && w[q] <= w[p])) {
        out.insert(swapped(w, p));
        break;
      }
}

}  // namespace

std::set<Word> neighbors(Family family, const Word& w, int rank) {
  for (Symbol a : w)
    if (a < 1 || a > rank)
      throw std::invalid_argument("symbol out of range for rank");
  std::set<Word> out;
  switch (family) {
    case Family::Hypo: hypo_neighbors(w, out); break;
    case Family::Stal: stal_neighbors(w, out); break;
    case Family::Sylv: sylv_neighbors(w, out); break;
    case Family::SylvSharp: sylvsharp_neighbors(w, out); break;
  }
  out.erase(w);  // swapping equal letters reproduces the word itself
  return out;
}

std::set<Word> congruence_class(Family family, const Word& w, int rank) {
  std::set<Word> cls{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word u = std::move(todo.front());
    todo.pop_front();
    for (const Word& v : neighbors(family, u, rank))
      if (cls.insert(v).second) todo.push_back(v);
  }
  return cls;
}

MatchReport matches_canonical(Family family, int rank, int max_len) {
  const MonoidTag tag = monoid_of(family);
  MatchReport report;
  std::vector<std::unordered_map<std::string, std::vector<Word>>> by_len(
      static_cast<std::size_t>(max_len) + 1);
  for_each_word(rank, max_len, [&](const Word& w) {
    by_len[w.size()][canonical_key(tag, w)].push_back(w);
  });

  for (const auto& groups : by_len) {
    for (const auto& [key, group] : groups) {
      report.classes += 1;
      report.words += group.size();
      const Word& u = group.front();
      std::set<Word> cls = congruence_class(family, u, rank);
      for (const Word& v : cls)
        if (canonical_key(tag, v) != key) {
          // related by the presentation, different canonical forms
          report.match = false;
          report.discrepancy = {u, v};
          return report;
        }
      if (cls.size() != group.size()) {
        // equal canonical forms but not related by the presentation
        report.match = false;
        for (const Word& v : group)
          if (!cls.count(v)) {
            report.discrepancy = {u, v};
            break;
          }
        return report;
      }
    }
  }
  return report;
}

}  // namespace plactic::pres
