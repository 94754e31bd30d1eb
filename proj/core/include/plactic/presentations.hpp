// Defining relations of the hypoplactic, stalactic and two sylvester
// monoids as one-step rewriting neighborhoods, breadth-first congruence
// classes (every relation preserves length, so classes are finite), and
// the oracle comparing the presentation against the insertion algorithms.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

#include "plactic/monoid.hpp"
#include "plactic/word.hpp"

namespace plactic::pres {

enum class Family { Hypo, Stal, Sylv, SylvSharp };

std::optional<Family> family_of(MonoidTag tag);
MonoidTag monoid_of(Family family);

/// All words reachable from w by one application, in either direction, of
/// one instance of the family's relation schema.
std::set<Word> neighbors(Family family, const Word& w, int rank);

/// The congruence class of w among words over [rank]: closure of the
/// neighbor relation.
std::set<Word> congruence_class(Family family, const Word& w, int rank);

struct MatchReport {
  bool match = true;
  std::uint64_t words = 0;
  std::uint64_t classes = 0;
  // a pair related by exactly one of (presentation, canonical form)
  std::optional<std::pair<Word, Word>> discrepancy;
};

/// Checks that, over all words over [rank] of length <= max_len, being in
/// the same rewriting class coincides with having equal canonical forms.
MatchReport matches_canonical(Family family, int rank, int max_len);

}  // namespace plactic::pres
