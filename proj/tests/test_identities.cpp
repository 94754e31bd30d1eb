#include <algorithm>
#include <random>

#include "doctest.h"
#include "plactic/identities.hpp"
#include "plactic/sylvester.hpp"
#include "test_support.hpp"

using namespace plactic;
using ident::Identity;

namespace {

Identity random_identity(std::mt19937& rng, int max_vars, int max_side) {
  std::uniform_int_distribution<int> nv_dist(1, max_vars);
  const int nv = nv_dist(rng);
  std::uniform_int_distribution<int> len_dist(1, max_side);
  std::uniform_int_distribution<int> var_dist(1, nv);
  Identity id;
  for (int v = 0; v < nv; ++v) id.variables.push_back(std::string(1, char('a' + v)));
  auto side = [&] {
    Word w(static_cast<std::size_t>(len_dist(rng)));
    for (auto& s : w) s = var_dist(rng);
    return w;
  };
  id.lhs = side();
  id.rhs = side();
  return id;
}

// complete refuter for the sylvester decider at a fixed exponent bound:
// every variable runs over the elements J^k and I J^k with k <= 3,
// evaluated as 2x2 matrices
bool m_matrix_refuted(const Identity& id, std::uint64_t max_exp) {
  std::vector<sylv::MElement> pool;
  for (std::uint64_t k = 0; k <= max_exp; ++k) {
    pool.push_back({false, k});
    pool.push_back({true, k});
  }
  const int nv = id.variable_count();
  std::vector<std::size_t> pick(static_cast<std::size_t>(nv), 0);
  auto eval = [&](const Word& side) {
    Matrix<Natural> acc = Matrix<Natural>::identity(2);
    for (Symbol v : side)
      acc = acc * sylv::m_matrix<Natural>(pool[pick[static_cast<std::size_t>(v) - 1]]);
    return acc;
  };
  for (;;) {
    if (!(eval(id.lhs) == eval(id.rhs))) return true;
    int i = nv - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == pool.size() - 1) {
      pick[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_SUITE_BEGIN("identities");

TEST_CASE("parsing") {
  Identity id = ident::parse_identity("xyzxty=yxzxty");
  CHECK(id.variables == std::vector<std::string>{"x", "y", "z", "t"});
  CHECK(id.lhs == Word{1, 2, 3, 1, 4, 2});
  CHECK(id.rhs == Word{2, 1, 3, 1, 4, 2});
  CHECK(ident::format_identity(id) == "xyzxty=yxzxty");

  CHECK_THROWS_AS(ident::parse_identity("xy"), std::invalid_argument);
  CHECK_THROWS_AS(ident::parse_identity("=x"), std::invalid_argument);
  CHECK_THROWS_AS(ident::parse_identity("xY=x"), std::invalid_argument);
}

TEST_CASE("balanced") {
  CHECK(ident::balanced(ident::parse_identity("xyx=yxx")));
  CHECK_FALSE(ident::balanced(ident::parse_identity("xyxzx=xyzx")));
  CHECK(ident::balanced(ident::parse_identity("x=x")));
}

TEST_CASE("finite monoids are sane") {
  for (const auto& m : {ident::h_monoid(), ident::f_monoid(), ident::t_monoid()}) {
    CHECK(m.associative());
    CHECK(m.identity_law());
  }
  CHECK(ident::h_monoid().size == 5);
  CHECK(ident::f_monoid().size == 3);
  CHECK(ident::t_monoid().size == 5);
}

TEST_CASE("holds_in") {
  CHECK(ident::holds_in(ident::parse_identity("xx=x"), ident::f_monoid()));
  CHECK(ident::holds_in(ident::parse_identity("xyx=yx"), ident::f_monoid()));
  CHECK(ident::holds_in(ident::parse_identity("xyxy=yxyx"), ident::h_monoid()));
  CHECK(ident::holds_in(ident::parse_identity("xyxzx=xyzx"), ident::h_monoid()));
  CHECK_FALSE(ident::holds_in(ident::parse_identity("xy=yx"), ident::f_monoid()));
}

TEST_CASE("exact deciders on the named instances") {
  CHECK(ident::holds_hypo(ident::parse_identity("xyxy=yxyx")));
  CHECK_FALSE(ident::holds_hypo(ident::parse_identity("xyxzx=xyzx")));
  CHECK_FALSE(ident::holds_hypo(ident::parse_identity("xy=yx")));

  CHECK(ident::holds_stal(ident::parse_identity("xyx=yxx")));
  CHECK_FALSE(ident::holds_stal(ident::parse_identity("xyxy=yxyx")));
  CHECK_FALSE(ident::holds_stal(ident::parse_identity("xy=yx")));
  CHECK(ident::holds_taig(ident::parse_identity("xyx=yxx")));

  CHECK(ident::holds_sylv(ident::parse_identity("xyzxty=yxzxty")));
  CHECK(ident::holds_sylv(ident::parse_identity("xyxy=yxxy")));
  CHECK_FALSE(ident::holds_sylv(ident::parse_identity("xy=yx")));

  CHECK(ident::holds_sylv_sharp(ident::parse_identity("ytxzyx=ytxzxy")));
  CHECK(ident::holds_sylv_sharp(ident::parse_identity("x=x")));

  CHECK(ident::holds_baxt(ident::parse_identity("xaybxycxdy=xaybyxcxdy")));
  CHECK(ident::holds_baxt(ident::parse_identity("xaybxycydx=xaybyxcydx")));
  CHECK(ident::holds_baxt(ident::parse_identity("xyxyxy=xyyxxy")));
}

TEST_CASE("holds_exact dispatch") {
  Identity id = ident::parse_identity("xyx=yxx");
  CHECK(ident::holds_exact(id, MonoidTag::Stal) == true);
  CHECK(ident::holds_exact(id, MonoidTag::Rps) == std::nullopt);
}

TEST_CASE("sharp decider is the reversal of the sylvester decider") {
  std::mt19937 rng(131);
  for (int t = 0; t < 300; ++t) {
    Identity id = random_identity(rng, 3, 6);
    Identity rev{reversed(id.lhs), reversed(id.rhs), id.variables};
    CHECK(ident::holds_sylv_sharp(id) == ident::holds_sylv(rev));
    CHECK(ident::holds_baxt(id) ==
          (ident::holds_sylv(id) && ident::holds_sylv_sharp(id)));
  }
}

TEST_CASE("bounded substitution search") {
  CHECK(!ident::bounded_counterexample(ident::parse_identity("xyx=yxx"),
                                       MonoidTag::Stal, 2, 2));

  auto ce = ident::bounded_counterexample(ident::parse_identity("xy=yx"),
                                          MonoidTag::Sylv, 2, 1);
  REQUIRE(ce.has_value());
  // the reported assignment really is a counterexample
  Word u, v;
  Identity id = ident::parse_identity("xy=yx");
  for (Symbol s : id.lhs) {
    const Word& rep = ce->assignment[static_cast<std::size_t>(s) - 1];
    u.insert(u.end(), rep.begin(), rep.end());
  }
  for (Symbol s : id.rhs) {
    const Word& rep = ce->assignment[static_cast<std::size_t>(s) - 1];
    v.insert(v.end(), rep.begin(), rep.end());
  }
  CHECK_FALSE(sylv::equivalent(u, v));

  // (xy)^3 = (xy)^2 yx holds in the rank-2 patience sorting monoid
  CHECK(!ident::bounded_counterexample(
      ident::parse_identity("xyxyxy=xyxyyx"), MonoidTag::Rps, 2, 2));
}

TEST_CASE("hypoplactic decider against the finite monoid") {
  std::mt19937 rng(137);
  for (int t = 0; t < 400; ++t) {
    Identity id = random_identity(rng, 3, 6);
    CHECK(ident::holds_hypo(id) ==
          (ident::balanced(id) && ident::holds_in(id, ident::h_monoid())));
  }
}

TEST_CASE("stalactic decider against the flip-flop monoid") {
  std::mt19937 rng(139);
  for (int t = 0; t < 400; ++t) {
    Identity id = random_identity(rng, 3, 6);
    CHECK(ident::holds_stal(id) ==
          (ident::balanced(id) && ident::holds_in(id, ident::f_monoid())));
  }
}

TEST_CASE("the three-element and five-element images satisfy the same balanced identities") {
  std::mt19937 rng(149);
  for (int t = 0; t < 300; ++t) {
    Identity id = random_identity(rng, 3, 6);
    // force balance by shuffling one side into the other
    id.rhs = id.lhs;
    std::shuffle(id.rhs.begin(), id.rhs.end(), rng);
    REQUIRE(ident::balanced(id));
    CHECK(ident::holds_in(id, ident::t_monoid()) ==
          ident::holds_in(id, ident::f_monoid()));
  }
}

TEST_CASE("sylvester decider against the matrix refuter") {
  std::mt19937 rng(151);
  for (int t = 0; t < 300; ++t) {
    Identity id = random_identity(rng, 3, 6);
    bool holds = ident::holds_sylv(id);
    bool refuted = m_matrix_refuted(id, 3);
    if (refuted) CHECK_FALSE(holds);
    if (holds) CHECK_FALSE(refuted);
  }
}

TEST_CASE("decided-true identities survive bounded search") {
  const char* names[] = {"hypo", "stal", "taig", "sylv", "sylvsharp", "baxt"};
  const char* instances[] = {"xyxy=yxyx", "xyx=yxx", "xyx=yxx",
                             "xyzxty=yxzxty", "ytxzyx=ytxzxy", "xyxyxy=xyyxxy"};
  for (int k = 0; k < 6; ++k) {
    MonoidTag tag = *parse_monoid(names[k]);
    Identity id = ident::parse_identity(instances[k]);
    REQUIRE(ident::holds_exact(id, tag) == true);
    CHECK(!ident::bounded_counterexample(id, tag, 2, 3));
  }
  // the six-variable baxter bases, at a smaller substitution bound
  for (const char* text : {"xaybxycxdy=xaybyxcxdy", "xaybxycydx=xaybyxcydx"}) {
    Identity id = ident::parse_identity(text);
    REQUIRE(ident::holds_baxt(id));
    CHECK(!ident::bounded_counterexample(id, MonoidTag::Baxt, 2, 1));
  }
}

TEST_CASE("variable limit on the symbolic decider") {
  // nine distinct variables
  CHECK_THROWS_AS(ident::holds_sylv(ident::parse_identity("abcdefghi=abcdefghi")),
                  std::invalid_argument);
}

TEST_SUITE_END();
