// Semigroup identities over a variable alphabet, exact deciders for the
// varieties generated by the tableau monoids, exhaustive checking in small
// finite monoids, and bounded substitution search in any of the families.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plactic/monoid.hpp"
#include "plactic/word.hpp"

namespace plactic::ident {

/// Formal equality of two non-empty words whose letters are variable
/// indices 1..k; variables[i-1] names index i.
struct Identity {
  Word lhs, rhs;
  std::vector<std::string> variables;

  int variable_count() const { return static_cast<int>(variables.size()); }
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Parses "xyzxty=yxzxty": lowercase letters are variables, numbered by
/// first appearance.  Throws std::invalid_argument on malformed input or
/// empty sides.
Identity parse_identity(std::string_view text);
std::string format_identity(const Identity& id);

/// Both sides have the same content.
bool balanced(const Identity& id);

/// Finite monoid given by its multiplication table (row major), used for
/// exhaustive identity checking.
struct FiniteMonoid {
  std::string name;
  int size = 0;
  int identity = 0;
  std::vector<int> table;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }
  bool associative() const;
  bool identity_law() const;
};

FiniteMonoid h_monoid();  // {E,I,J,K,L} from the hypoplactic blocks
FiniteMonoid f_monoid();  // flip-flop {E,I,J} from the stalactic blocks
FiniteMonoid t_monoid();  // {E,K,J,I,L} from the taiga blocks

/// Exhaustive over all |M|^{#variables} substitutions (the identity
/// element included); complete for finite monoids.
bool holds_in(const Identity& id, const FiniteMonoid& m);

// Exact deciders, one per variety.
bool holds_hypo(const Identity& id);   // balanced + equal scattered subwords up to length 2
bool holds_stal(const Identity& id);   // balanced + equal right-to-left first-occurrence orders
bool holds_taig(const Identity& id);   // same as the stalactic decider
bool holds_sylv(const Identity& id);   // symbolic evaluation over the J^k / I J^k monoid
bool holds_sylv_sharp(const Identity& id);  // sylvester decider on the reversed sides
bool holds_baxt(const Identity& id);   // conjunction of the two sylvester deciders

/// nullopt for the patience sorting family, which has no exact decider
/// here (its identities depend on the rank).
std::optional<bool> holds_exact(const Identity& id, MonoidTag tag);

struct Counterexample {
  std::vector<Word> assignment;  // assignment[i] substitutes variable i+1
};

/// Substitutes all words over [rank] of length 0..max_len for each
/// variable and compares canonical forms; returns the first mismatch.
/// Sound as a refuter, complete only relative to the bound.
std::optional<Counterexample> bounded_counterexample(const Identity& id,
                                                     MonoidTag tag, int rank,
                                                     int max_len);

}  // namespace plactic::ident
