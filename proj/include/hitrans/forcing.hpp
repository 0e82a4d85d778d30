#pragma once

#include <cstdint>
#include <random>
#include <set>

#include "hitrans/words.hpp"

namespace hitrans {

// Growing family of partial bijections for the free generators, with the
// shift generator pinned. Mutated only through the force_* operations;
// existing pairs are never rewritten and the protected window (when set) is
// never touched by new pairs.
class PartialAssignment {
 public:
  explicit PartialAssignment(std::vector<std::string> free_generators,
                             std::optional<Window> protected_window = {},
                             std::optional<std::uint64_t> seed = {});

  static const std::string& shift_name();  // "s"

  const std::vector<std::string>& free_generators() const { return free_gens_; }
  std::vector<std::string> alphabet() const;  // free generators then shift
  const std::optional<Window>& protected_window() const { return protected_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  const PartialInjection& table(const std::string& gen) const;
  std::size_t total_pairs() const;

  bool touched(Int p) const { return touched_.count(p) != 0; }
  bool protected_point(Int p) const { return protected_ && protected_->contains(p); }
  bool excluded(Int p) const { return protected_point(p) || touched(p); }

  // Single partial letter application; the shift is always defined.
  std::optional<Int> step(const Letter& l, Int a) const;
  Trace trace(const Word& w, Int start) const;

  // Throws on conflicts or protected-window violations.
  void insert(const std::string& gen, Int src, Int tgt);

  // Deterministic fresh scan: smallest absolute value, positive before
  // negative, skipping excluded points and points rejected by extra_ok.
  // With a seed the candidates are drawn pseudo-randomly instead.
  Int pick_fresh(const std::function<bool(Int)>& extra_ok);

  // Canonical completion of every table; shift generator becomes Shift(1).
  GeneratorAssignment finalized() const;

 private:
  std::vector<std::string> free_gens_;
  std::optional<Window> protected_;
  std::vector<PartialInjection> tables_;  // aligned with free_gens_
  std::set<Int> touched_;                 // union of all domains and codomains
  std::optional<std::uint64_t> seed_;
  std::optional<std::mt19937_64> rng_;

  const PartialInjection* find_table(std::string_view gen) const;
};

// count distinct integers outside exclusions, the protected window, and
// every table's domain and codomain, chosen by the deterministic rule.
std::vector<Int> fresh_points(PartialAssignment& assign, const std::set<Int>& exclusions,
                              int count);

// Replayable certificate for one discharged requirement. Every recorded
// point stays valid under any later extension or completion because new
// pairs only ever touch fresh points.
struct Witness {
  enum class Kind { Nontrivial, Mapping, LongOrbit, FiniteOrbit };
  Kind kind = Kind::Nontrivial;
  Word word;  // the requirement's word (for Mapping: the realizing word)

  // Nontrivial
  Int moved_from = 0;
  Int moved_to = 0;

  // Mapping
  std::vector<Int> from;
  std::vector<Int> to;
  Int shift = 0;

  // LongOrbit / FiniteOrbit share the cyclically reduced core machinery:
  // word == conjugator * core * conjugator^-1.
  Word core;
  Word conjugator;
  std::vector<Int> chain;  // LongOrbit: chain[i+1] = chain[i]^word, all distinct

  // FiniteOrbit
  Int base = 0;       // the requested point
  Int base_conj = 0;  // base^conjugator
  std::vector<Int> cycle;  // closed <core>-orbit through base_conj
};

struct Insertion {
  std::string gen;
  Int src = 0;
  Int tgt = 0;
  bool operator==(const Insertion&) const = default;
};

struct ForceResult {
  Witness witness;
  std::vector<Insertion> inserted;
};

// Extension operations. Each grows the assignment monotonically
// and returns a witness that replays against any completion.

// v reduced and nonempty. Pure shift powers are witnessed directly without
// touching any table.
ForceResult force_nontrivial(PartialAssignment& assign, const Word& v);

// Realizes x_j -> y_j for all j via the word s^r * t1 * s^-r where t1 is the
// first free generator. Entries of x (resp. y) must be distinct.
ForceResult force_mapping(PartialAssignment& assign, const std::vector<Int>& x,
                          const std::vector<Int>& y);

// Creates a chain b, b^w, ..., b^(w^(t-1)) of pairwise distinct points.
// w reduced and not a conjugate of a power of the shift.
ForceResult force_long_orbit(PartialAssignment& assign, const Word& w, Int t);

// Closes the <w>-orbit of a into a finite cycle. When route surgery is
// needed the closed cycle is extended to at least min_cycle_len periods by
// wrapping the route through extra fresh copies of the core.
ForceResult force_finite_orbit(PartialAssignment& assign, const Word& w, Int a,
                               Int min_cycle_len = 1);

// Witness replay against a total assignment (after finalization) or against
// the growing partial assignment.
bool replay_witness(const Witness& w, const GeneratorAssignment& assign);
bool replay_witness(const Witness& w, const PartialAssignment& assign);

}  // namespace hitrans
