#pragma once

#include <map>
#include <string>
#include <vector>

#include "crlab/deck.hpp"
#include "crlab/enumerate.hpp"

namespace crlab {

/// Digests are not stable across algorithm revisions; reports carry this tag
/// so dumps from different versions are never diffed against each other.
inline constexpr const char* kAlgorithmVersion = "crlab-inv-1";

struct VerificationReport {
  std::string experiment;
  int order = 0;
  std::size_t corpus_size = 0;
  std::map<std::string, std::size_t> class_counts;  // iso / wl2 / cr / dcr / exact-deck
  std::map<std::string, std::size_t> stats;         // pair counts, scope notes
  std::vector<std::string> violations;              // empty <=> PASS
  std::vector<std::string> findings;                // multi-member classes etc.
  double runtime_sec = 0;
  std::string version_tag = kAlgorithmVersion;

  bool pass() const { return violations.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

/// No deck-invariant class may mix connected and disconnected graphs.
/// Multi-member digest classes are re-verified in exact joint mode.
VerificationReport verify_main_theorem(const Corpus& corpus, unsigned jobs = 0);

/// Exact decks (multisets of canonical cards) never mix connectedness, and
/// every exact-deck class lies inside one deck-invariant class.
VerificationReport verify_harary(const Corpus& corpus, unsigned jobs = 0);

/// Lists pairs that are deck-equivalent but not CR-equivalent. Findings are
/// reported, not asserted; digest/exact disagreement is a hard failure.
VerificationReport probe_open_question(const Corpus& corpus, unsigned jobs = 0);

/// wl2-equivalence implies cr-equivalence, deck-equivalence, and equal
/// connectedness; pair counts are reported to expose vacuity.
VerificationReport verify_hierarchy(const Corpus& corpus, unsigned jobs = 0);

/// A graph is connected iff at least two of its cards are connected (n >= 3).
VerificationReport verify_little_theorem(const Corpus& corpus, unsigned jobs = 0);

/// Deck-index record: "graph6 <TAB> C|D <TAB> deck-invariant digest hex".
std::string deck_index_line(const Graph& g);

}  // namespace crlab
