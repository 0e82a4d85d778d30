#pragma once

#include "hitrans/engine.hpp"
#include "hitrans/orbit.hpp"

namespace hitrans {

// Brute-force re-checks of everything the engine claims, independent of the
// construction log (the log only supplies optional search hints).

struct FreenessReport {
  std::size_t words_checked = 0;
  std::vector<Word> flagged;  // words acting as the identity on the whole window
  bool clean() const { return flagged.empty(); }
};

// A flagged word is a red flag, not a disproof: a nontrivial permutation can
// fix any finite window.
FreenessReport check_freeness(const GeneratorAssignment& assign, int max_len,
                              const Window& search_window);

struct TransitivityReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> unrealized;
  bool clean() const { return unrealized.empty(); }
};

// Searches for words of length <= word_len_cap (plus logged mapping
// witnesses) realizing every tuple pair.
TransitivityReport check_transitivity(const GeneratorAssignment& assign, int k,
                                      const Window& win, int word_len_cap,
                                      const ConstructionLog* log = nullptr);

struct NondiscreteReport {
  Int q = 1;                 // w^q fixes the window pointwise
  std::optional<Int> moved;  // a point beyond the window moved by w^q
  bool degenerate() const { return !moved.has_value(); }
};

// hint_points are tried first (typically long-orbit witness chains); then a
// deterministic outward scan. Throws OrbitExceedsCap when a window orbit
// does not close within cap.
NondiscreteReport check_nondiscrete(const Word& w, const GeneratorAssignment& assign,
                                    const Window& win, Int cap,
                                    const std::vector<Int>& hint_points = {});

struct NondiscretePairReport {
  Int q = 1;
  std::optional<Int> moved_first;
  std::optional<Int> moved_second;
};

NondiscretePairReport check_nondiscrete_pair(const Word& w1, const Word& w2,
                                             const GeneratorAssignment& assign,
                                             const Window& win, Int cap,
                                             const std::vector<Int>& hints1 = {},
                                             const std::vector<Int>& hints2 = {});

enum class EmbeddingClass { CertifiedNontrivial, RelatorEquivalent, Unverified };

struct EmbeddingItem {
  Word element;                   // in the surface generators
  EmbeddingClass cls = EmbeddingClass::Unverified;
  std::optional<Int> moved_point;
};

struct EmbeddingReport {
  std::vector<EmbeddingItem> items;
};

EmbeddingReport check_embedding(const EmbeddingSpec& spec, const std::vector<Word>& sample,
                                const Window& win);

struct ReplayReport {
  std::size_t total = 0;
  std::size_t failed = 0;
  bool pairs_present = true;  // every logged insertion appears in the tables
  bool clean() const { return failed == 0 && pairs_present; }
};

ReplayReport replay_log(const ConstructionLog& log, const GeneratorAssignment& assign);

// Search-window radius that covers every point mentioned by the log, so the
// freeness sweep is guaranteed to see each witness.
Int log_extent(const ConstructionLog& log);

// Chain and cycle points recorded for a designated word, as nondiscreteness
// hints.
std::vector<Int> orbit_hint_points(const ConstructionLog& log, const Word& w);

}  // namespace hitrans
