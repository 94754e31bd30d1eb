#include "plactic/identities.hpp"

#include <map>
#include <stdexcept>

#include "plactic/hypoplactic.hpp"
#include "plactic/stalactic.hpp"
#include "plactic/taiga.hpp"

namespace plactic::ident {

Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw std::invalid_argument("identity needs the form lhs=rhs");

  Identity id;
  std::map<char, Symbol> index;
  auto side = [&](std::string_view part) {
    Word w;
    for (char c : part) {
      if (c < 'a' || c > 'z')
        throw std::invalid_argument(std::string("bad variable '") + c + "'");
      auto [it, inserted] =
          index.emplace(c, static_cast<Symbol>(index.size() + 1));
      if (inserted) id.variables.push_back(std::string(1, c));
      w.push_back(it->second);
    }
    return w;
  };
  id.lhs = side(text.substr(0, eq));
  id.rhs = side(text.substr(eq + 1));
  if (id.lhs.empty() || id.rhs.empty())
    throw std::invalid_argument("identity sides must be non-empty");
  return id;
}

std::string format_identity(const Identity& id) {
  std::string out;
  for (Symbol v : id.lhs) out += id.variables[static_cast<std::size_t>(v) - 1];
  out += '=';
  for (Symbol v : id.rhs) out += id.variables[static_cast<std::size_t>(v) - 1];
  return out;
}

bool balanced(const Identity& id) { return content(id.lhs) == content(id.rhs); }

bool FiniteMonoid::associative() const {
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

bool FiniteMonoid::identity_law() const {
  for (int a = 0; a < size; ++a)
    if (mul(identity, a) != a || mul(a, identity) != a) return false;
  return true;
}

FiniteMonoid h_monoid() {
  auto t = hypo::multiplication_table();
  FiniteMonoid m{"H", 5, 0, {}};
  for (const auto& row : t)
    for (hypo::HElement e : row)
      m.table.push_back(static_cast<int>(e));
  return m;
}

FiniteMonoid f_monoid() {
  auto t = stal::multiplication_table();
  FiniteMonoid m{"F", 3, 0, {}};
  for (const auto& row : t)
    for (stal::FElement e : row) m.table.push_back(static_cast<int>(e));
  return m;
}

FiniteMonoid t_monoid() {
  auto t = taig::multiplication_table();
  FiniteMonoid m{"T", 5, 0, {}};
  for (const auto& row : t)
    for (taig::TElement e : row) m.table.push_back(static_cast<int>(e));
  return m;
}

bool holds_in(const Identity& id, const FiniteMonoid& m) {
  const int nv = id.variable_count();
  std::vector<int> img(static_cast<std::size_t>(nv), 0);
  auto eval = [&](const Word& side) {
    int acc = m.identity;
    for (Symbol v : side) acc = m.mul(acc, img[static_cast<std::size_t>(v) - 1]);
    return acc;
  };
  for (;;) {
    if (eval(id.lhs) != eval(id.rhs)) return false;
    int i = nv - 1;
    while (i >= 0 && img[static_cast<std::size_t>(i)] == m.size - 1) {
      img[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
    ++img[static_cast<std::size_t>(i)];
  }
}

bool holds_hypo(const Identity& id) {
  return balanced(id) &&
         scattered_subwords(id.lhs, 2) == scattered_subwords(id.rhs, 2);
}

bool holds_stal(const Identity& id) {
  return balanced(id) && sigma_order(id.lhs) == sigma_order(id.rhs);
}

bool holds_taig(const Identity& id) { return holds_stal(id); }

namespace {

// Symbolic evaluation over the monoid of elements J^k and I J^k.  A
// substitution is split by the subset T of variables receiving I-type
// values: variables in T map to I J^{k_x}, the rest to J^{k_x}, with the
// exponents k_x unconstrained.  The product collapses to
//   J^{sum of all exponents}                      if no letter lies in T,
//   I J^{k at the last T-letter + later exponents} otherwise,
// so the identity holds iff for every T both sides agree in type and the
// two exponent linear forms coincide.
struct MValue {
  bool itype = false;
  std::map<Symbol, int> form;  // coefficient of k_x per variable
  friend bool operator==(const MValue&, const MValue&) = default;
};

MValue symbolic_eval(const Word& side, unsigned itype_mask) {
  MValue out;
  std::size_t last = side.size();
  for (std::size_t p = 0; p < side.size(); ++p)
    if (itype_mask & (1u << (side[p] - 1))) last = p;
  if (last == side.size()) {
    for (Symbol v : side) ++out.form[v];
    return out;
  }
  out.itype = true;
  ++out.form[side[last]];
  for (std::size_t p = last + 1; p < side.size(); ++p) ++out.form[side[p]];
  return out;
}

}  // namespace

bool holds_sylv(const Identity& id) {
  const int nv = id.variable_count();
  if (nv > 8)
    throw std::invalid_argument("exact sylvester decider limited to 8 variables");
  for (unsigned mask = 0; mask < (1u << nv); ++mask)
    if (!(symbolic_eval(id.lhs, mask) == symbolic_eval(id.rhs, mask)))
      return false;
  return true;
}

bool holds_sylv_sharp(const Identity& id) {
  Identity rev{reversed(id.lhs), reversed(id.rhs), id.variables};
  return holds_sylv(rev);
}

bool holds_baxt(const Identity& id) {
  return holds_sylv(id) && holds_sylv_sharp(id);
}

std::optional<bool> holds_exact(const Identity& id, MonoidTag tag) {
  switch (tag) {
    case MonoidTag::Hypo: return holds_hypo(id);
    case MonoidTag::Stal: return holds_stal(id);
    case MonoidTag::Taig: return holds_taig(id);
    case MonoidTag::Sylv: return holds_sylv(id);
    case MonoidTag::SylvSharp: return holds_sylv_sharp(id);
    case MonoidTag::Baxt: return holds_baxt(id);
    case MonoidTag::Rps: return std::nullopt;
  }
  throw std::invalid_argument("bad monoid tag");
}

std::optional<Counterexample> bounded_counterexample(const Identity& id,
                                                     MonoidTag tag, int rank,
                                                     int max_len) {
  const std::vector<Word> pool = enumerate_words(rank, max_len);
  const int nv = id.variable_count();
  std::vector<std::size_t> pick(static_cast<std::size_t>(nv), 0);
  auto substitute = [&](const Word& side) {
    Word out;
    for (Symbol v : side) {
      const Word& rep = pool[pick[static_cast<std::size_t>(v) - 1]];
      out.insert(out.end(), rep.begin(), rep.end());
    }
    return out;
  };
  for (;;) {
    if (!monoid_equivalent(tag, substitute(id.lhs), substitute(id.rhs))) {
      Counterexample ce;
      for (int v = 0; v < nv; ++v)
        ce.assignment.push_back(pool[pick[static_cast<std::size_t>(v)]]);
      return ce;
    }
    int i = nv - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == pool.size() - 1) {
      pick[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return std::nullopt;
    ++pick[static_cast<std::size_t>(i)];
  }
}

}  // namespace plactic::ident
