// Uniform access to the seven monoid families: parsing of family and
// semiring tags, canonical-form equivalence, JSON export of canonical
// forms and representations, dimension formulas, and the exhaustive
// equivalence-versus-representation scans.
#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plactic/matrix.hpp"
#include "plactic/word.hpp"

namespace plactic {

enum class MonoidTag { Hypo, Stal, Taig, Sylv, SylvSharp, Baxt, Rps };

inline constexpr MonoidTag kAllMonoids[] = {
    MonoidTag::Hypo, MonoidTag::Stal, MonoidTag::Taig,     MonoidTag::Sylv,
    MonoidTag::SylvSharp, MonoidTag::Baxt, MonoidTag::Rps};

std::optional<MonoidTag> parse_monoid(std::string_view name);
std::string monoid_name(MonoidTag tag);

enum class SemiringTag { Tropical, Natural };
std::optional<SemiringTag> parse_semiring(std::string_view name);
std::string semiring_name(SemiringTag tag);

/// Equality of the family's canonical forms.
bool monoid_equivalent(MonoidTag tag, const Word& u, const Word& v);

/// The family's canonical combinatorial form as JSON.
nlohmann::json canonical_json(MonoidTag tag, const Word& w);

/// Stable string key for grouping words by canonical form.
std::string canonical_key(MonoidTag tag, const Word& w);

template <Semiring S>
BlockDiag<S> representation(MonoidTag tag, const Word& w, int rank);

/// Flattened dimension of the family's representation at the given rank.
int representation_dim(MonoidTag tag, int rank);

/// Representation as JSON; for the patience sorting family an "index"
/// array lists the bottom-row subsets in block order.
nlohmann::json representation_json(MonoidTag tag, SemiringTag semiring,
                                   const Word& w, int rank);

struct FaithfulnessReport {
  std::uint64_t words = 0;
  std::uint64_t classes = 0;
  std::uint64_t violations = 0;
  std::optional<std::pair<Word, Word>> example;  // a violating pair, if any
};

/// Exhaustive check over all words over [rank] of length <= max_len that
/// canonical-form equality and representation equality define the same
/// partition.
FaithfulnessReport faithfulness_scan(MonoidTag tag, int rank, int max_len,
                                     SemiringTag semiring);

/// Number of distinct canonical forms among words of each length 0..max_len.
std::vector<std::uint64_t> class_counts(MonoidTag tag, int rank, int max_len);

// explicit instantiations live in monoid.cpp
extern template BlockDiag<Tropical> representation<Tropical>(MonoidTag, const Word&, int);
extern template BlockDiag<Natural> representation<Natural>(MonoidTag, const Word&, int);

}  // namespace plactic
