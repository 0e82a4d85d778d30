#pragma once

#include "hitrans/forcing.hpp"
#include "hitrans/surface.hpp"

namespace hitrans {

struct BudgetError : std::invalid_argument {
  explicit BudgetError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidRank : std::invalid_argument {
  explicit InvalidRank(const std::string& what) : std::invalid_argument(what) {}
};

// Finite slice of the requirement families: how far the freeness sweep, the
// transitivity sweep and the orbit control go.
struct ConstructionBudget {
  int n_free = 1;          // non-shift generators t1..tn
  int word_len = 1;        // freeness sweep bound
  int tuple_max = 0;       // transitivity tuple length bound
  Window window{0};        // tuple entries and orbit-closure points
  Int orbit_target = 0;    // long-orbit bound per designated word
  std::vector<Word> designated;  // must not be conjugate shift powers
  std::optional<std::uint64_t> seed;

  std::vector<std::string> free_generator_names() const;  // t1..tn
  std::vector<std::string> alphabet() const;              // t1..tn, s
  void validate() const;                                  // throws BudgetError
};

struct Requirement {
  enum class Kind { Freeness, Transitivity, LongOrbit, FiniteOrbit };
  Kind kind = Kind::Freeness;
  Word word;            // Freeness / LongOrbit / FiniteOrbit
  std::vector<Int> x;   // Transitivity
  std::vector<Int> y;
  Int t = 0;            // LongOrbit
  Int point = 0;        // FiniteOrbit
};

// Deterministic order: all Freeness (length-lex), all Transitivity (tuple
// length, then source, then target tuple), all LongOrbit (designated order,
// t ascending), all FiniteOrbit (designated order, point ascending).
std::vector<Requirement> enumerate_requirements(const ConstructionBudget& budget);

// Ordered k-tuples of distinct window points, lexicographic.
std::vector<std::vector<Int>> distinct_tuples(const Window& win, int k);

struct LogEntry {
  std::string op;  // force_nontrivial | force_mapping | force_long_orbit | force_finite_orbit
  std::vector<Insertion> inserted;
  Witness witness;
};

struct ConstructionLog {
  std::vector<LogEntry> entries;
};

struct ConstructionResult {
  PartialAssignment assignment;
  ConstructionLog log;
};

// Discharges every enumerated requirement in order; one log entry each.
ConstructionResult run_construction(const ConstructionBudget& budget);

GeneratorAssignment finalize(const PartialAssignment& assign);

// A finished construction bundled with the surface-group homomorphism. The
// symbolic layer names the free permutations phi1, phi1', ..., (tau) and
// keeps gamma as a single letter; phi_map ties those names to the
// assignment's generators, gamma_phi spells gamma out.
struct EmbeddingSpec {
  int genus = 0;
  int r = 0;
  bool even = true;
  int power_n = 1;
  GeneratorAssignment assignment;
  std::vector<std::pair<std::string, std::string>> phi_map;
  Word gamma_phi;                                    // over the phi alphabet
  std::vector<std::pair<std::string, Word>> images;  // surface gen -> hybrid word
  std::optional<ConstructionBudget> budget;
  ConstructionLog log;

  Presentation presentation() const;
  const Word& image(const std::string& surface_gen) const;

  Word expand_gamma(const Word& hybrid) const;        // hybrid -> phi alphabet
  Word to_assignment_alphabet(const Word& phi_word) const;
  Word image_in_assignment(const std::string& surface_gen) const;

  // Substitutes a word in the surface generators and reduces (phi alphabet).
  Word symbolic_image(const Word& surface_word) const;

  // Numeric action of a surface word: letter images applied in sequence,
  // no symbolic reduction across letters.
  Int act(const Word& surface_word, Int a) const;
};

EmbeddingSpec surface_hom_even(const GeneratorAssignment& assign, int r, int n);
EmbeddingSpec surface_hom_odd(const GeneratorAssignment& assign, int r, int n);

// phi-alphabet names mapped onto t1..tn, s for the given rank; the first
// phi is the pinned shift.
std::vector<std::pair<std::string, std::string>> phi_assignment_map(int r, bool even);

}  // namespace hitrans
