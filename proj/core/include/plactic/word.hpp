// Words over a ranked alphabet [1..n] and the word-level invariants the
// monoid families are built from: content, support, the right-to-left
// first-occurrence order, and scattered (non-contiguous) subwords.
#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace plactic {

using Symbol = int;                // 1-based
using Word = std::vector<Symbol>;  // possibly empty

/// Occurrence counts of a word; symbols with count zero are not stored.
class Content {
 public:
  Content() = default;
  explicit Content(std::map<Symbol, int> counts);

  int count(Symbol x) const;
  int total() const;
  const std::map<Symbol, int>& counts() const { return counts_; }

  friend bool operator==(const Content&, const Content&) = default;

 private:
  std::map<Symbol, int> counts_;
};

Content content(const Word& w);
std::set<Symbol> support(const Word& w);

/// Ranks the support of w by first occurrence when reading right to left:
/// the k-th new symbol encountered gets rank k.
std::map<Symbol, int> sigma_order(const Word& w);

/// All scattered subwords of w of length 1..max_len, deduplicated.
std::set<Word> scattered_subwords(const Word& w, int max_len);

/// True iff pattern is a (not necessarily contiguous) subsequence of w.
bool contains_scattered(const Word& w, const Word& pattern);

Word reversed(const Word& w);

/// All words over [rank] of length 0..max_len, shortest first and
/// lexicographic within each length, each exactly once.
std::vector<Word> enumerate_words(int rank, int max_len);

template <typename F>
void for_each_word(int rank, int max_len, F&& fn) {
  Word w;
  for (int len = 0; len <= max_len; ++len) {
    w.assign(static_cast<std::size_t>(len), 1);
    for (;;) {
      fn(static_cast<const Word&>(w));
      int i = len - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == rank) {
        w[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++w[static_cast<std::size_t>(i)];
    }
  }
}

// Text syntax shared by the whole CLI: bare digits for symbols 1..9
// ("312"), comma-separated integers in general ("3,1,2"), empty string
// for the empty word.  A comma-free string of digits 1..9 always reads as
// the bare-digit form, so a one-letter word whose symbol has only such
// digits (e.g. 11) has no textual spelling.  parse_word throws
// std::invalid_argument.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace plactic
