#include "hitrans/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hitrans {

Word Word::reduce(std::vector<Letter> raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (auto& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("Letter: sign must be +-1");
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(std::move(l));
    }
  }
  return w;
}

Word Word::generator(std::string name, int sign) {
  return reduce({Letter{std::move(name), sign}});
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(out);  // reversal of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(std::move(raw));
}

Word Word::pow(Int n) const {
  Word base = n < 0 ? inverse() : *this;
  Int count = n < 0 ? -n : n;
  std::vector<Letter> raw;
  raw.reserve(static_cast<std::size_t>(count) * base.letters_.size());
  for (Int i = 0; i < count; ++i)
    raw.insert(raw.end(), base.letters_.begin(), base.letters_.end());
  return reduce(std::move(raw));
}

CyclicForm Word::cyclic_reduce() const {
  std::size_t lo = 0, hi = letters_.size();
  std::vector<Letter> conj;
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
    conj.push_back(letters_[lo]);
    ++lo;
    --hi;
  }
  Word core;
  core.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  Word conjugator;
  conjugator.letters_ = std::move(conj);
  return CyclicForm{std::move(core), std::move(conjugator)};
}

bool Word::is_conjugate_power_of(std::string_view gen) const {
  Word core = cyclic_reduce().core;
  return std::all_of(core.letters().begin(), core.letters().end(),
                     [&](const Letter& l) { return l.gen == gen; });
}

// ---- text syntax ----

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw WordParseError(msg + " at position " + std::to_string(pos));
  }

  std::string ident() {
    if (done() || !ident_start(peek())) fail("expected generator name");
    std::size_t start = pos;
    while (!done() && ident_char(peek())) ++pos;
    while (!done() && peek() == '\'') ++pos;  // trailing primes are part of the name
    return std::string(text.substr(start, pos - start));
  }

  Int integer() {
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    Int value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos;
    }
    return neg ? -value : value;
  }
};

void parse_term(Cursor& cur, std::vector<Letter>& out) {
  cur.skip_ws();
  if (cur.done()) cur.fail("expected term");
  if (cur.peek() == '1') {
    ++cur.pos;
    if (!cur.done() && ident_char(cur.peek())) cur.fail("unexpected character after '1'");
    return;  // identity term
  }
  bool inverted = false;
  if (cur.peek() == '~') {
    inverted = true;
    ++cur.pos;
    cur.skip_ws();
  }
  std::string name = cur.ident();
  Int exponent = 1;
  cur.skip_ws();
  if (!cur.done() && cur.peek() == '^') {
    ++cur.pos;
    cur.skip_ws();
    exponent = cur.integer();
  }
  if (inverted) exponent = -exponent;
  int sign = exponent >= 0 ? 1 : -1;
  for (Int i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i)
    out.push_back(Letter{name, sign});
}

}  // namespace

Word Word::parse(std::string_view text) {
  Cursor cur{text};
  std::vector<Letter> raw;
  cur.skip_ws();
  if (cur.done()) throw WordParseError("empty input (use '1' for the identity)");
  for (;;) {
    parse_term(cur, raw);
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.peek() != '*') cur.fail("expected '*'");
    ++cur.pos;
  }
  return reduce(std::move(raw));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j].gen == letters_[i].gen &&
           letters_[j].sign == letters_[i].sign)
      ++j;
    Int exp = static_cast<Int>(j - i) * letters_[i].sign;
    if (!first) out << " * ";
    first = false;
    if (exp == 1)
      out << letters_[i].gen;
    else if (exp == -1)
      out << '~' << letters_[i].gen;
    else
      out << letters_[i].gen << '^' << exp;
    i = j;
  }
  return out.str();
}

// ---- evaluation ----

void GeneratorAssignment::set(std::string name, FinPerm p) {
  for (auto& [n, perm] : entries_) {
    if (n == name) {
      perm = std::move(p);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(p));
}

const FinPerm* GeneratorAssignment::find(std::string_view name) const {
  for (const auto& [n, perm] : entries_)
    if (n == name) return &perm;
  return nullptr;
}

const FinPerm& GeneratorAssignment::at(std::string_view name) const {
  const FinPerm* p = find(name);
  if (!p) throw std::out_of_range("GeneratorAssignment: no generator " + std::string(name));
  return *p;
}

std::vector<std::string> GeneratorAssignment::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [n, perm] : entries_) out.push_back(n);
  return out;
}

Int evaluate(const Word& w, const GeneratorAssignment& assign, Int a) {
  for (const Letter& l : w.letters()) {
    const FinPerm& p = assign.at(l.gen);
    a = l.sign == 1 ? p.apply(a) : p.apply_inverse(a);
  }
  return a;
}

Trace trace(const Word& w, const GeneratorAssignment& assign, Int a) {
  return trace_with(
      w,
      [&assign](const Letter& l, Int x) -> std::optional<Int> {
        const FinPerm& p = assign.at(l.gen);
        return l.sign == 1 ? p.apply(x) : p.apply_inverse(x);
      },
      a);
}

Trace trace_with(const Word& w, const PartialStep& step, Int a) {
  Trace t;
  t.points.reserve(w.size() + 1);
  t.points.push_back(a);
  std::size_t position = 0;
  for (const Letter& l : w.letters()) {
    ++position;
    std::optional<Int> next = step(l, a);
    if (!next) {
      t.stuck = Trace::Stuck{position, l, a};
      return t;
    }
    a = *next;
    t.points.push_back(a);
  }
  return t;
}

// ---- enumeration ----

std::vector<Word> enumerate_reduced_words(const std::vector<std::string>& alphabet,
                                          int max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_reduced_words: max_len must be >= 1");
  std::vector<Letter> ordered;
  ordered.reserve(alphabet.size() * 2);
  for (const auto& g : alphabet) {
    ordered.push_back(Letter{g, 1});
    ordered.push_back(Letter{g, -1});
  }

  std::vector<Word> out;
  std::vector<std::vector<Letter>> level;
  for (const Letter& l : ordered) level.push_back({l});
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& ls : level) {
      Word w;
      w = Word::reduce(ls);  // already reduced; normalizes storage
      out.push_back(std::move(w));
    }
    if (len == max_len) break;
    std::vector<std::vector<Letter>> next;
    next.reserve(level.size() * (ordered.size() - 1));
    for (const auto& ls : level) {
      for (const Letter& l : ordered) {
        if (ls.back().gen == l.gen && ls.back().sign == -l.sign) continue;
        auto extended = ls;
        extended.push_back(l);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  return out;
}

Int reduced_word_count(int k, int len) {
  if (len < 1) return len == 0 ? 1 : 0;
  Int count = 2 * k;
  for (int i = 1; i < len; ++i) count *= 2 * k - 1;
  return count;
}

}  // namespace hitrans
