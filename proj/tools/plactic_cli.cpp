// Command line front end: canonical forms, equivalence checks,
// representation matrices, identity deciders, and the exhaustive scans,
// with JSON output by default.
//
// Exit codes: 0 success, 1 property violation, 2 usage or parse error,
// 3 unsupported mode.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "plactic/hypoplactic.hpp"
#include "plactic/identities.hpp"
#include "plactic/monoid.hpp"
#include "plactic/presentations.hpp"
#include "plactic/rps.hpp"
#include "plactic/stalactic.hpp"
#include "plactic/sylvester.hpp"
#include "plactic/taiga.hpp"

using namespace plactic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

MonoidTag monoid_or_throw(const std::string& name) {
  auto tag = parse_monoid(name);
  if (!tag) throw std::invalid_argument("unknown monoid '" + name + "'");
  return *tag;
}

SemiringTag semiring_or_throw(const std::string& name) {
  auto tag = parse_semiring(name);
  if (!tag) throw std::invalid_argument("unknown semiring '" + name + "'");
  return *tag;
}

Word word_in_rank(const std::string& text, int rank) {
  Word w = parse_word(text);
  for (Symbol s : w)
    if (s < 1 || s > rank)
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " out of range for rank " + std::to_string(rank));
  return w;
}

// ---- text renderings ----------------------------------------------------

void render_tree(std::string& out, const sylv::Bst::Node* n) {
  if (!n) {
    out += '_';
    return;
  }
  out += std::to_string(n->data);
  if (n->left || n->right) {
    out += '(';
    render_tree(out, n->left.get());
    out += ',';
    render_tree(out, n->right.get());
    out += ')';
  }
}

void render_taiga(std::string& out, const taig::TaigaTree::Node* n) {
  if (!n) {
    out += '_';
    return;
  }
  out += std::to_string(n->data.label) + "^" + std::to_string(n->data.multiplicity);
  if (n->left || n->right) {
    out += '(';
    render_taiga(out, n->left.get());
    out += ',';
    render_taiga(out, n->right.get());
    out += ')';
  }
}

std::string tableau_text(MonoidTag tag, const Word& w) {
  std::string out;
  switch (tag) {
    case MonoidTag::Hypo: {
      auto t = hypo::tableau_of(w);
      std::size_t offset = 0;
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out.append(2 * offset, ' ');
        for (Symbol s : t.rows[r]) out += std::to_string(s) + ' ';
        out += '\n';
        offset += t.rows[r].size() - 1;
      }
      break;
    }
    case MonoidTag::Stal: {
      for (const auto& c : stal::tableau_of(w).columns)
        out += std::to_string(c.symbol) + "^" + std::to_string(c.multiplicity) + ' ';
      out += '\n';
      break;
    }
    case MonoidTag::Taig: {
      render_taiga(out, taig::tree_of(w).root());
      out += '\n';
      break;
    }
    case MonoidTag::Sylv: {
      render_tree(out, sylv::right_tree_of(w).root());
      out += '\n';
      break;
    }
    case MonoidTag::SylvSharp: {
      render_tree(out, sylv::left_tree_of(w).root());
      out += '\n';
      break;
    }
    case MonoidTag::Baxt: {
      auto p = sylv::baxter_pair_of(w);
      render_tree(out, p.left_tree.root());
      out += " | ";
      render_tree(out, p.right_tree.root());
      out += '\n';
      break;
    }
    case MonoidTag::Rps: {
      for (const auto& col : rps::tableau_of(w).columns) {
        for (Symbol s : col) out += std::to_string(s) + ' ';
        out += '\n';
      }
      break;
    }
  }
  return out;
}

json counterexample_json(const ident::Identity& id,
                         const std::optional<ident::Counterexample>& ce) {
  if (!ce) return nullptr;
  json j = json::object();
  for (int v = 0; v < id.variable_count(); ++v)
    j[id.variables[static_cast<std::size_t>(v)]] =
        format_word(ce->assignment[static_cast<std::size_t>(v)]);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plactic-like monoids: insertion algorithms, semiring matrix "
               "representations, and identity checking"};
  app.require_subcommand(1);

  std::string monoid = "stal", semiring = "tropical", format = "json";
  std::string word_text, word2_text, id_text, mode = "exact";
  int rank = 2, len = 3;
  unsigned seed = 0;
  app.add_option("--format", format, "output format (json|text)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed,
                 "seed for sampling commands (reserved; the provided "
                 "commands are deterministic)");

  auto add_monoid = [&](CLI::App* cmd) {
    cmd->add_option("--monoid", monoid,
                    "monoid family (hypo|stal|taig|sylv|sylvsharp|baxt|rps)")
        ->required();
  };

  CLI::App* tableau = app.add_subcommand(
      "tableau", "canonical combinatorial form of a word");
  add_monoid(tableau);
  tableau->add_option("--rank", rank, "alphabet size")->required();
  tableau->add_option("--word", word_text, "input word");

  CLI::App* equiv = app.add_subcommand(
      "equiv", "decide whether two words have the same canonical form");
  add_monoid(equiv);
  equiv->add_option("--rank", rank, "alphabet size")->required();
  equiv->add_option("word1", word_text, "first word");
  equiv->add_option("word2", word2_text, "second word");

  CLI::App* repmatrix = app.add_subcommand(
      "repmatrix", "block-diagonal representation matrix of a word");
  add_monoid(repmatrix);
  repmatrix->add_option("--rank", rank, "alphabet size")->required();
  repmatrix->add_option("--semiring", semiring, "tropical|natural");
  repmatrix->add_option("--word", word_text, "input word");

  CLI::App* check = app.add_subcommand(
      "check-identity", "decide or boundedly refute an identity");
  add_monoid(check);
  check->add_option("--id", id_text, "identity, e.g. \"xyzxty=yxzxty\"")
      ->required();
  check->add_option("--mode", mode, "exact|bounded")
      ->check(CLI::IsMember({"exact", "bounded"}));
  check->add_option("--rank", rank, "substitution alphabet size (bounded mode)");
  check->add_option("--len", len, "max substitution word length (bounded mode)");

  CLI::App* faith = app.add_subcommand(
      "faithfulness", "exhaustive canonical-form vs matrix scan");
  add_monoid(faith);
  faith->add_option("--rank", rank, "alphabet size")->required();
  faith->add_option("--len", len, "max word length")->required();
  faith->add_option("--semiring", semiring, "tropical|natural");

  CLI::App* chain = app.add_subcommand(
      "chain-length", "maximal chain of bottom rows under the patience "
                      "sorting action");
  chain->add_option("--rank", rank, "alphabet size")->required();

  CLI::App* prescheck = app.add_subcommand(
      "presentation-check", "compare the defining relations against the "
                            "insertion algorithm");
  prescheck
      ->add_option("--monoid", monoid, "family (hypo|stal|sylv|sylvsharp)")
      ->required();
  prescheck->add_option("--rank", rank, "alphabet size")->required();
  prescheck->add_option("--len", len, "max word length")->required();

  CLI::App* classes = app.add_subcommand(
      "classes", "number of canonical forms per word length");
  add_monoid(classes);
  classes->add_option("--rank", rank, "alphabet size")->required();
  classes->add_option("--len", len, "max word length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool as_json = format == "json";
  auto emit = [&](const json& j, const std::string& text) {
    if (as_json)
      std::cout << j.dump() << '\n';
    else
      std::cout << text;
  };

  try {
    if (tableau->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      Word w = word_in_rank(word_text, rank);
      json j = canonical_json(tag, w);
      if (w.empty()) j["empty"] = true;
      emit(j, tableau_text(tag, w));
      return kExitOk;
    }

    if (equiv->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      Word u = word_in_rank(word_text, rank);
      Word v = word_in_rank(word2_text, rank);
      bool eq = monoid_equivalent(tag, u, v);
      emit({{"monoid", monoid_name(tag)}, {"rank", rank}, {"equal", eq}},
           eq ? "true\n" : "false\n");
      return kExitOk;
    }

    if (repmatrix->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      SemiringTag sem = semiring_or_throw(semiring);
      Word w = word_in_rank(word_text, rank);
      json j = representation_json(tag, sem, w, rank);
      std::string text = "dim " + std::to_string(j["dim"].get<int>()) + ", " +
                         std::to_string(j["blocks"].size()) + " blocks\n";
      emit(j, text);
      return kExitOk;
    }

    if (check->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      ident::Identity id = ident::parse_identity(id_text);
      json verdict{{"identity", ident::format_identity(id)}, {"decider", mode}};
      if (mode == "exact") {
        auto holds = ident::holds_exact(id, tag);
        if (!holds) {
          std::cerr << "no exact decider for '" << monoid_name(tag)
                    << "': its identities depend on the rank; use --mode bounded\n";
          return kExitUnsupported;
        }
        verdict["holds"] = *holds;
        verdict["counterexample"] = nullptr;
        emit(verdict, std::string(*holds ? "holds" : "fails") + "\n");
      } else {
        auto ce = ident::bounded_counterexample(id, tag, rank, len);
        verdict["holds"] = !ce.has_value();
        verdict["rank"] = rank;
        verdict["len"] = len;
        verdict["counterexample"] = counterexample_json(id, ce);
        std::string text = ce ? "counterexample found\n"
                              : "no counterexample within the bound\n";
        emit(verdict, text);
      }
      return kExitOk;
    }

    if (faith->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      SemiringTag sem = semiring_or_throw(semiring);
      auto report = faithfulness_scan(tag, rank, len, sem);
      json j{{"monoid", monoid_name(tag)},   {"rank", rank},
             {"max_len", len},               {"semiring", semiring_name(sem)},
             {"words", report.words},        {"classes", report.classes},
             {"violations", report.violations}, {"ok", report.violations == 0}};
      if (report.example)
        j["example"] = {format_word(report.example->first),
                        format_word(report.example->second)};
      emit(j, (report.violations == 0 ? "ok" : "VIOLATION") +
                  std::string(": ") + std::to_string(report.words) + " words, " +
                  std::to_string(report.classes) + " classes\n");
      return report.violations == 0 ? kExitOk : kExitViolation;
    }

    if (chain->parsed()) {
      int length = rps::chain_length(rank);
      Word witness = rps::chain_witness(rank);
      json j{{"rank", rank},
             {"chain_length", length},
             {"witness", format_word(witness)},
             {"witness_rows", rps::distinct_rows_visited(witness)}};
      emit(j, std::to_string(length) + "\n");
      return kExitOk;
    }

    if (prescheck->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      auto family = pres::family_of(tag);
      if (!family)
        throw std::invalid_argument("no presentation for '" + monoid + "'");
      auto report = pres::matches_canonical(*family, rank, len);
      json j{{"family", monoid_name(tag)}, {"rank", rank},
             {"max_len", len},             {"words", report.words},
             {"classes", report.classes},  {"match", report.match}};
      j["first_discrepancy"] =
          report.discrepancy
              ? json::array({format_word(report.discrepancy->first),
                             format_word(report.discrepancy->second)})
              : json(nullptr);
      emit(j, report.match ? "match\n" : "MISMATCH\n");
      return report.match ? kExitOk : kExitViolation;
    }

    if (classes->parsed()) {
      MonoidTag tag = monoid_or_throw(monoid);
      auto counts = class_counts(tag, rank, len);
      json items = json::array();
      std::string text;
      for (std::size_t l = 0; l < counts.size(); ++l) {
        items.push_back({{"len", l}, {"classes", counts[l]}});
        text += std::to_string(l) + ": " + std::to_string(counts[l]) + "\n";
      }
      emit({{"monoid", monoid_name(tag)},
            {"rank", rank},
            {"max_len", len},
            {"counts", items}},
           text);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
