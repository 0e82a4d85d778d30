#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitrans/permutation.hpp"

namespace hitrans {

// One signed generator occurrence.
struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{gen, -sign}; }
  bool operator==(const Letter&) const = default;
};

struct WordParseError : std::runtime_error {
  explicit WordParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CyclicForm;

// Freely reduced word over named generators. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Free reduction of a raw letter sequence; the only way letters get in.
  static Word reduce(std::vector<Letter> raw);
  static Word generator(std::string name, int sign = 1);

  // Text syntax: identifiers (trailing primes allowed), `~g` for inverses,
  // `g^n` for integer powers (n may be negative), `*` between terms, `1` for
  // the identity. Round-trips with str().
  static Word parse(std::string_view text);
  std::string str() const;

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenate and reduce
  Word pow(Int n) const;

  // w == conjugator * core * conjugator^-1 with core cyclically reduced.
  CyclicForm cyclic_reduce() const;

  // True iff the cyclically reduced core uses only `gen` (empty core counts).
  bool is_conjugate_power_of(std::string_view gen) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

struct CyclicForm {
  Word core;
  Word conjugator;
};

// Total permutation per generator name; evaluation target for words.
class GeneratorAssignment {
 public:
  void set(std::string name, FinPerm p);
  const FinPerm* find(std::string_view name) const;
  const FinPerm& at(std::string_view name) const;  // throws std::out_of_range
  const std::vector<std::pair<std::string, FinPerm>>& entries() const { return entries_; }
  std::vector<std::string> names() const;

 private:
  std::vector<std::pair<std::string, FinPerm>> entries_;  // insertion order
};

// Right action: letters applied left to right.
Int evaluate(const Word& w, const GeneratorAssignment& assign, Int a);

// Intermediate images of a point under the letters of a word. With a partial
// stepper the walk may stop early; the stuck position is data, not an error.
struct Trace {
  std::vector<Int> points;  // start plus one point per applied letter
  struct Stuck {
    std::size_t position;  // 1-based index of the letter that could not apply
    Letter letter;
    Int point;
  };
  std::optional<Stuck> stuck;
  bool complete() const { return !stuck.has_value(); }
};

using PartialStep = std::function<std::optional<Int>(const Letter&, Int)>;

Trace trace(const Word& w, const GeneratorAssignment& assign, Int a);
Trace trace_with(const Word& w, const PartialStep& step, Int a);

// All nonempty reduced words of length <= max_len, each exactly once, in
// length-then-lexicographic order (alphabet order, positive sign first).
std::vector<Word> enumerate_reduced_words(const std::vector<std::string>& alphabet,
                                          int max_len);

// Number of reduced words of exact length len over k generators.
Int reduced_word_count(int k, int len);

}  // namespace hitrans
