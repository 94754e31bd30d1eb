#include "plactic/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace plactic {

Content::Content(std::map<Symbol, int> counts) : counts_(std::move(counts)) {
  std::erase_if(counts_, [](const auto& kv) { return kv.second == 0; });
}

int Content::count(Symbol x) const {
  auto it = counts_.find(x);
  return it == counts_.end() ? 0 : it->second;
}

int Content::total() const {
  int n = 0;
  for (const auto& [sym, cnt] : counts_) n += cnt;
  return n;
}

Content content(const Word& w) {
  std::map<Symbol, int> counts;
  for (Symbol x : w) ++counts[x];
  return Content(std::move(counts));
}

std::set<Symbol> support(const Word& w) { return {w.begin(), w.end()}; }

std::map<Symbol, int> sigma_order(const Word& w) {
  std::map<Symbol, int> rank;
  int next = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (rank.emplace(*it, next).second) ++next;
  return rank;
}

std::set<Word> scattered_subwords(const Word& w, int max_len) {
  std::set<Word> out;
  if (max_len <= 0) return out;
  if (max_len <= 2) {
    // closed form: the support gives length 1, the ordered pairs present
    // give length 2
    for (Symbol x : w) out.insert(Word{x});
    if (max_len == 2) {
      std::set<Symbol> seen;
      for (Symbol x : w) {
        for (Symbol s : seen) out.insert(Word{s, x});
        seen.insert(x);
      }
    }
    return out;
  }
  // general enumeration, deduplicated as we extend shorter subwords
  std::set<Word> frontier{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::set<Word> next;
    for (const Word& p : frontier) {
      for (Symbol x : support(w)) {
        Word q = p;
        q.push_back(x);
        if (contains_scattered(w, q)) next.insert(std::move(q));
      }
    }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

bool contains_scattered(const Word& w, const Word& pattern) {
  std::size_t i = 0;
  for (Symbol x : w) {
    if (i == pattern.size()) return true;
    if (x == pattern[i]) ++i;
  }
  return i == pattern.size();
}

Word reversed(const Word& w) { return {w.rbegin(), w.rend()}; }

std::vector<Word> enumerate_words(int rank, int max_len) {
  std::vector<Word> out;
  for_each_word(rank, max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

namespace {

Symbol parse_symbol(std::string_view tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
    throw std::invalid_argument("bad symbol '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  const bool digit_form = text.find_first_not_of("123456789") ==
                          std::string_view::npos;
  if (digit_form) {
    for (char c : text) w.push_back(c - '0');
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    w.push_back(parse_symbol(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace plactic
