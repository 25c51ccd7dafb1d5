#include "crlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "crlab/canonical.hpp"
#include "crlab/graph6.hpp"
#include "crlab/parallel.hpp"
#include "crlab/wl2.hpp"

#include "json.hpp"

namespace crlab {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kTagCard = 20;
constexpr std::uint32_t kTagDeck = 21;
constexpr std::uint32_t kTagCr = 22;
constexpr std::uint32_t kTagWl2 = 23;

Digest cr_digest(const Graph& g) {
  auto inv = cr_invariant(g);
  return digest_list(kTagCr, inv.colors);
}

Digest dcr_digest(const Graph& g) {
  auto d = dcr_invariant(g);
  std::vector<Digest> card_digests;
  for (const auto& card : d.cards) card_digests.push_back(digest_list(kTagCard, card.colors));
  return digest_list(kTagDeck, card_digests);
}

Digest wl2_digest(const Graph& g) {
  auto inv = wl2_invariant(g);
  return digest_list(kTagWl2, inv.colors);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Groups corpus indices by a per-graph key computed in parallel.
template <typename Key>
std::map<Key, std::vector<std::size_t>> group_by(
    const Corpus& corpus, unsigned jobs,
    Key (*key_fn)(const Graph&)) {
  std::vector<Key> keys(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), jobs,
               [&](std::size_t i) { keys[i] = key_fn(corpus.graphs[i]); });
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < keys.size(); i++) groups[keys[i]].push_back(i);
  return groups;
}

std::string g6(const Graph& g) { return emit_graph6(g); }

}  // namespace

VerificationReport verify_main_theorem(const Corpus& corpus, unsigned jobs) {
  auto start = Clock::now();
  VerificationReport r;
  r.experiment = "main";
  r.order = corpus.order;
  r.corpus_size = corpus.graphs.size();
  r.class_counts["iso"] = corpus.graphs.size();

  if (corpus.order <= 2) {
    // K2 and 2K1 share the deck {K1, K1}; the theorem's scope starts at n = 3.
    r.stats["out_of_scope"] = 1;
    r.runtime_sec = seconds_since(start);
    return r;
  }

  auto groups = group_by(corpus, jobs, dcr_digest);
  r.class_counts["dcr"] = groups.size();

  for (const auto& [key, members] : groups) {
    bool any_conn = false, any_disc = false;
    for (auto i : members) (corpus.connected[i] ? any_conn : any_disc) = true;
    if (members.size() > 1) {
      // Two-tier scheme: digest classes are re-verified in exact joint mode.
      for (std::size_t j = 1; j < members.size(); j++) {
        if (!dcr_equivalent_exact(corpus.graphs[members[0]], corpus.graphs[members[j]])) {
          throw IntegrityError("digest-mode deck class disagrees with exact mode: " +
                               g6(corpus.graphs[members[0]]) + " vs " +
                               g6(corpus.graphs[members[j]]));
        }
      }
      std::string listing;
      for (auto i : members) listing += (listing.empty() ? "" : " ") + g6(corpus.graphs[i]);
      r.findings.push_back("dcr class of size " + std::to_string(members.size()) + ": " + listing);
    }
    if (any_conn && any_disc) {
      std::string listing;
      for (auto i : members) listing += (listing.empty() ? "" : " ") + g6(corpus.graphs[i]);
      r.violations.push_back("dcr class mixes connectedness: " + listing);
    }
  }
  r.runtime_sec = seconds_since(start);
  return r;
}

namespace {

std::vector<std::uint64_t> exact_deck_key(const Graph& g) {
  std::vector<std::vector<std::uint64_t>> cards;
  for (const auto& card : deck(g)) cards.push_back(canonical_key(card));
  std::sort(cards.begin(), cards.end());
  std::vector<std::uint64_t> flat;
  for (const auto& c : cards) {
    flat.insert(flat.end(), c.begin(), c.end());
    flat.push_back(~std::uint64_t(0));  // separator
  }
  return flat;
}

}  // namespace

VerificationReport verify_harary(const Corpus& corpus, unsigned jobs) {
  auto start = Clock::now();
  VerificationReport r;
  r.experiment = "harary";
  r.order = corpus.order;
  r.corpus_size = corpus.graphs.size();
  r.class_counts["iso"] = corpus.graphs.size();
  if (corpus.order < 3) {
    r.stats["out_of_scope"] = 1;
    r.runtime_sec = seconds_since(start);
    return r;
  }

  auto groups = group_by(corpus, jobs, exact_deck_key);
  r.class_counts["exact-deck"] = groups.size();

  std::vector<Digest> dcr(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), jobs,
               [&](std::size_t i) { dcr[i] = dcr_digest(corpus.graphs[i]); });

  for (const auto& [key, members] : groups) {
    bool any_conn = false, any_disc = false;
    for (auto i : members) (corpus.connected[i] ? any_conn : any_disc) = true;
    if (any_conn && any_disc) {
      std::string listing;
      for (auto i : members) listing += (listing.empty() ? "" : " ") + g6(corpus.graphs[i]);
      r.violations.push_back("exact-deck class mixes connectedness: " + listing);
    }
    // Exact decks refine CR decks: one dcr digest per exact-deck class.
    for (auto i : members) {
      if (dcr[i] != dcr[members[0]]) {
        r.violations.push_back("exact-deck class split across dcr classes: " +
                               g6(corpus.graphs[members[0]]) + " vs " + g6(corpus.graphs[i]));
      }
    }
  }
  r.runtime_sec = seconds_since(start);
  return r;
}

VerificationReport probe_open_question(const Corpus& corpus, unsigned jobs) {
  auto start = Clock::now();
  VerificationReport r;
  r.experiment = "probe-openq";
  r.order = corpus.order;
  r.corpus_size = corpus.graphs.size();
  r.class_counts["iso"] = corpus.graphs.size();
  if (corpus.order < 2) {
    r.runtime_sec = seconds_since(start);
    return r;
  }

  std::vector<Digest> cr(corpus.graphs.size()), dcr(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), jobs, [&](std::size_t i) {
    cr[i] = cr_digest(corpus.graphs[i]);
    dcr[i] = dcr_digest(corpus.graphs[i]);
  });
  std::map<Digest, std::vector<std::size_t>> dcr_groups;
  for (std::size_t i = 0; i < corpus.graphs.size(); i++) dcr_groups[dcr[i]].push_back(i);
  r.class_counts["dcr"] = dcr_groups.size();

  std::set<Digest> crset(cr.begin(), cr.end());
  r.class_counts["cr"] = crset.size();

  for (const auto& [key, members] : dcr_groups) {
    for (std::size_t a = 0; a < members.size(); a++) {
      for (std::size_t b = a + 1; b < members.size(); b++) {
        std::size_t i = members[a], j = members[b];
        if (cr[i] == cr[j]) continue;
        // Candidate pair: re-verify both predicates in exact joint mode.
        const Graph& gi = corpus.graphs[i];
        const Graph& gj = corpus.graphs[j];
        if (!dcr_equivalent_exact(gi, gj)) {
          throw IntegrityError("probe: digest claims deck-equivalence, exact mode disagrees: " +
                               g6(gi) + " vs " + g6(gj));
        }
        if (cr_equivalent(gi, gj, Mode::Exact)) {
          throw IntegrityError("probe: digest claims CR-inequivalence, exact mode disagrees: " +
                               g6(gi) + " vs " + g6(gj));
        }
        r.findings.push_back("dcr-equivalent but not cr-equivalent: " + g6(gi) + " " + g6(gj));
      }
    }
  }
  std::sort(r.findings.begin(), r.findings.end());
  r.stats["candidate_pairs"] = r.findings.size();
  r.runtime_sec = seconds_since(start);
  return r;
}

VerificationReport verify_hierarchy(const Corpus& corpus, unsigned jobs) {
  auto start = Clock::now();
  VerificationReport r;
  r.experiment = "hierarchy";
  r.order = corpus.order;
  r.corpus_size = corpus.graphs.size();
  const std::size_t n = corpus.graphs.size();
  r.class_counts["iso"] = n;

  std::vector<Digest> cr(n), wl2(n), dcr(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    cr[i] = cr_digest(corpus.graphs[i]);
    wl2[i] = wl2_digest(corpus.graphs[i]);
    dcr[i] = corpus.order >= 2 ? dcr_digest(corpus.graphs[i]) : Digest{};
  });

  auto count_classes = [](const std::vector<Digest>& keys) {
    return std::set<Digest>(keys.begin(), keys.end()).size();
  };
  r.class_counts["cr"] = count_classes(cr);
  r.class_counts["wl2"] = count_classes(wl2);
  if (corpus.order >= 2) r.class_counts["dcr"] = count_classes(dcr);

  // Coarsening never increases the class count.
  if (r.class_counts["wl2"] > r.class_counts["iso"] ||
      r.class_counts["cr"] > r.class_counts["wl2"]) {
    r.violations.push_back("class-count monotonicity broken (iso >= wl2 >= cr)");
  }

  std::map<Digest, std::vector<std::size_t>> wl2_groups;
  for (std::size_t i = 0; i < n; i++) wl2_groups[wl2[i]].push_back(i);

  std::size_t wl2_pairs = 0, cr_pairs = 0;
  {
    std::map<Digest, std::size_t> cr_sizes;
    for (auto& k : cr) cr_sizes[k]++;
    for (auto& [_, c] : cr_sizes) cr_pairs += c * (c - 1) / 2;
  }
  for (const auto& [key, members] : wl2_groups) {
    wl2_pairs += members.size() * (members.size() - 1) / 2;
    for (std::size_t j = 1; j < members.size(); j++) {
      std::size_t i0 = members[0], i = members[j];
      if (cr[i] != cr[i0]) {
        r.violations.push_back("wl2-equivalent pair differs in cr: " +
                               g6(corpus.graphs[i0]) + " " + g6(corpus.graphs[i]));
      }
      if (corpus.order >= 2 && dcr[i] != dcr[i0]) {
        r.violations.push_back("wl2-equivalent pair differs in dcr: " +
                               g6(corpus.graphs[i0]) + " " + g6(corpus.graphs[i]));
      }
      if (corpus.connected[i] != corpus.connected[i0]) {
        r.violations.push_back("wl2-equivalent pair differs in connectedness: " +
                               g6(corpus.graphs[i0]) + " " + g6(corpus.graphs[i]));
      }
    }
  }
  r.stats["pairs_total"] = n * (n - 1) / 2;
  r.stats["wl2_equivalent_pairs"] = wl2_pairs;
  r.stats["cr_equivalent_pairs"] = cr_pairs;
  r.runtime_sec = seconds_since(start);
  return r;
}

VerificationReport verify_little_theorem(const Corpus& corpus, unsigned jobs) {
  auto start = Clock::now();
  VerificationReport r;
  r.experiment = "little";
  r.order = corpus.order;
  r.corpus_size = corpus.graphs.size();
  r.class_counts["iso"] = corpus.graphs.size();
  if (corpus.order < 3) {
    throw std::domain_error("verify_little_theorem: needs order >= 3");
  }
  std::vector<int> counts(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), jobs, [&](std::size_t i) {
    counts[i] = connected_card_count(corpus.graphs[i]);
  });
  for (std::size_t i = 0; i < corpus.graphs.size(); i++) {
    bool predicted = counts[i] >= 2;
    if (predicted != corpus.connected[i]) {
      r.violations.push_back("little-theorem mismatch: " + g6(corpus.graphs[i]) +
                             " has " + std::to_string(counts[i]) + " connected cards");
    }
  }
  r.runtime_sec = seconds_since(start);
  return r;
}

std::string deck_index_line(const Graph& g) {
  return emit_graph6(g) + "\t" + (is_connected(g) ? "C" : "D") + "\t" +
         dcr_digest(g).hex();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "experiment: " << experiment << "\n"
      << "order: " << order << "\n"
      << "corpus_size: " << corpus_size << "\n";
  for (const auto& [k, v] : class_counts) out << "classes." << k << ": " << v << "\n";
  for (const auto& [k, v] : stats) out << "stats." << k << ": " << v << "\n";
  out << "violations: " << violations.size() << "\n";
  for (const auto& v : violations) out << "  VIOLATION " << v << "\n";
  out << "findings: " << findings.size() << "\n";
  for (const auto& f : findings) out << "  finding " << f << "\n";
  out << "runtime_sec: " << runtime_sec << "\n"
      << "version: " << version_tag << "\n"
      << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["order"] = order;
  j["corpus_size"] = corpus_size;
  j["class_counts"] = class_counts;
  j["stats"] = stats;
  j["violations"] = violations;
  j["findings"] = findings;
  j["runtime_sec"] = runtime_sec;
  j["version"] = version_tag;
  j["verdict"] = pass() ? "PASS" : "FAIL";
  return j.dump(2);
}

}  // namespace crlab
