#include "plactic/monoid.hpp"

#include <stdexcept>
#include <unordered_map>

#include "plactic/hypoplactic.hpp"
#include "plactic/rps.hpp"
#include "plactic/stalactic.hpp"
#include "plactic/sylvester.hpp"
#include "plactic/taiga.hpp"

namespace plactic {

std::optional<MonoidTag> parse_monoid(std::string_view name) {
  if (name == "hypo") return MonoidTag::Hypo;
  if (name == "stal") return MonoidTag::Stal;
  if (name == "taig") return MonoidTag::Taig;
  if (name == "sylv") return MonoidTag::Sylv;
  if (name == "sylvsharp") return MonoidTag::SylvSharp;
  if (name == "baxt") return MonoidTag::Baxt;
  if (name == "rps") return MonoidTag::Rps;
  return std::nullopt;
}

std::string monoid_name(MonoidTag tag) {
  switch (tag) {
    case MonoidTag::Hypo: return "hypo";
    case MonoidTag::Stal: return "stal";
    case MonoidTag::Taig: return "taig";
    case MonoidTag::Sylv: return "sylv";
    case MonoidTag::SylvSharp: return "sylvsharp";
    case MonoidTag::Baxt: return "baxt";
    case MonoidTag::Rps: return "rps";
  }
  throw std::invalid_argument("bad monoid tag");
}

std::optional<SemiringTag> parse_semiring(std::string_view name) {
  if (name == "tropical") return SemiringTag::Tropical;
  if (name == "natural") return SemiringTag::Natural;
  return std::nullopt;
}

std::string semiring_name(SemiringTag tag) {
  return tag == SemiringTag::Tropical ? "tropical" : "natural";
}

bool monoid_equivalent(MonoidTag tag, const Word& u, const Word& v) {
  switch (tag) {
    case MonoidTag::Hypo: return hypo::equivalent(u, v);
    case MonoidTag::Stal: return stal::equivalent(u, v);
    case MonoidTag::Taig: return taig::equivalent(u, v);
    case MonoidTag::Sylv: return sylv::equivalent(u, v);
    case MonoidTag::SylvSharp: return sylv::sharp_equivalent(u, v);
    case MonoidTag::Baxt: return sylv::baxter_equivalent(u, v);
    case MonoidTag::Rps: return rps::equivalent(u, v);
  }
  throw std::invalid_argument("bad monoid tag");
}

nlohmann::json canonical_json(MonoidTag tag, const Word& w) {
  switch (tag) {
    case MonoidTag::Hypo: return hypo::to_json(hypo::tableau_of(w));
    case MonoidTag::Stal: return stal::to_json(stal::tableau_of(w));
    case MonoidTag::Taig: return taig::to_json(taig::tree_of(w));
    case MonoidTag::Sylv: return sylv::to_json(sylv::right_tree_of(w), "bst-right");
    case MonoidTag::SylvSharp:
      return sylv::to_json(sylv::left_tree_of(w), "bst-left");
    case MonoidTag::Baxt: return sylv::to_json(sylv::baxter_pair_of(w));
    case MonoidTag::Rps: return rps::to_json(rps::tableau_of(w));
  }
  throw std::invalid_argument("bad monoid tag");
}

std::string canonical_key(MonoidTag tag, const Word& w) {
  return canonical_json(tag, w).dump();
}

template <Semiring S>
BlockDiag<S> representation(MonoidTag tag, const Word& w, int rank) {
  switch (tag) {
    case MonoidTag::Hypo: return hypo::representation<S>(w, rank);
    case MonoidTag::Stal: return stal::representation<S>(w, rank);
    case MonoidTag::Taig: return taig::representation<S>(w, rank);
    case MonoidTag::Sylv: return sylv::representation<S>(w, rank);
    case MonoidTag::SylvSharp: return sylv::sharp_representation<S>(w, rank);
    case MonoidTag::Baxt: return sylv::baxter_representation<S>(w, rank);
    case MonoidTag::Rps: return rps::representation<S>(w, rank);
  }
  throw std::invalid_argument("bad monoid tag");
}

template BlockDiag<Tropical> representation<Tropical>(MonoidTag, const Word&, int);
template BlockDiag<Natural> representation<Natural>(MonoidTag, const Word&, int);

int representation_dim(MonoidTag tag, int rank) {
  switch (tag) {
    case MonoidTag::Hypo:
    case MonoidTag::Stal:
    case MonoidTag::Sylv:
    case MonoidTag::SylvSharp:
      return rank * rank;
    case MonoidTag::Taig: return 3 * rank * rank - 2 * rank;
    case MonoidTag::Baxt: return 2 * rank * rank - rank;
    case MonoidTag::Rps:
      return (1 << (rank - 1)) * (rank * rank + rank);
  }
  throw std::invalid_argument("bad monoid tag");
}

nlohmann::json representation_json(MonoidTag tag, SemiringTag semiring,
                                   const Word& w, int rank) {
  nlohmann::json j;
  if (semiring == SemiringTag::Tropical)
    j = block_diag_json(representation<Tropical>(tag, w, rank));
  else
    j = block_diag_json(representation<Natural>(tag, w, rank));
  j["monoid"] = monoid_name(tag);
  j["rank"] = rank;
  j["semiring"] = semiring_name(semiring);
  if (tag == MonoidTag::Rps) {
    nlohmann::json index = nlohmann::json::array();
    for (rps::BottomRow b : rps::row_order(rank))
      index.push_back(rps::row_symbols(b));
    j["index"] = index;
  }
  return j;
}

namespace {

template <Semiring S>
FaithfulnessReport faithfulness_scan_impl(MonoidTag tag, int rank, int max_len) {
  FaithfulnessReport report;
  std::unordered_map<std::string, std::string> canon_to_rep;
  std::unordered_map<std::string, std::string> rep_to_canon;
  std::unordered_map<std::string, Word> canon_witness, rep_witness;

  for_each_word(rank, max_len, [&](const Word& w) {
    ++report.words;
    std::string ck = canonical_key(tag, w);
    std::string rk = block_diag_key(representation<S>(tag, w, rank));

    auto [cit, cnew] = canon_to_rep.emplace(ck, rk);
    if (cnew) {
      ++report.classes;
      canon_witness.emplace(ck, w);
    } else if (cit->second != rk) {
      // equivalent words with different matrices: not a morphism image
      ++report.violations;
      if (!report.example) report.example = {canon_witness[ck], w};
      return;
    }
    auto [rit, rnew] = rep_to_canon.emplace(rk, ck);
    if (rnew) {
      rep_witness.emplace(rk, w);
    } else if (rit->second != ck) {
      // same matrices for inequivalent words: representation not faithful
      ++report.violations;
      if (!report.example) report.example = {rep_witness[rk], w};
    }
  });
  return report;
}

}  // namespace

FaithfulnessReport faithfulness_scan(MonoidTag tag, int rank, int max_len,
                                     SemiringTag semiring) {
  if (semiring == SemiringTag::Tropical)
    return faithfulness_scan_impl<Tropical>(tag, rank, max_len);
  return faithfulness_scan_impl<Natural>(tag, rank, max_len);
}

std::vector<std::uint64_t> class_counts(MonoidTag tag, int rank, int max_len) {
  std::vector<std::unordered_map<std::string, bool>> seen(
      static_cast<std::size_t>(max_len) + 1);
  for_each_word(rank, max_len, [&](const Word& w) {
    seen[w.size()].emplace(canonical_key(tag, w), true);
  });
  std::vector<std::uint64_t> counts;
  counts.reserve(seen.size());
  for (const auto& s : seen) counts.push_back(s.size());
  return counts;
}

}  // namespace plactic
