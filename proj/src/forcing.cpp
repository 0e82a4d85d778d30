#include "hitrans/forcing.hpp"

#include <algorithm>
#include <cassert>

namespace hitrans {

namespace {
const std::string kShift = "s";
}

PartialAssignment::PartialAssignment(std::vector<std::string> free_generators,
                                     std::optional<Window> protected_window,
                                     std::optional<std::uint64_t> seed)
    : free_gens_(std::move(free_generators)),
      protected_(protected_window),
      tables_(free_gens_.size()),
      seed_(seed) {
  for (const auto& g : free_gens_) {
    if (g == kShift)
      throw std::invalid_argument("PartialAssignment: the shift generator is pinned");
  }
  if (seed_) rng_.emplace(*seed_);
}

const std::string& PartialAssignment::shift_name() { return kShift; }

std::vector<std::string> PartialAssignment::alphabet() const {
  std::vector<std::string> out = free_gens_;
  out.push_back(kShift);
  return out;
}

const PartialInjection* PartialAssignment::find_table(std::string_view gen) const {
  for (std::size_t i = 0; i < free_gens_.size(); ++i)
    if (free_gens_[i] == gen) return &tables_[i];
  return nullptr;
}

const PartialInjection& PartialAssignment::table(const std::string& gen) const {
  const PartialInjection* t = find_table(gen);
  if (!t) throw std::out_of_range("PartialAssignment: no table for " + gen);
  return *t;
}

std::size_t PartialAssignment::total_pairs() const {
  std::size_t n = 0;
  for (const auto& t : tables_) n += t.size();
  return n;
}

std::optional<Int> PartialAssignment::step(const Letter& l, Int a) const {
  if (l.gen == kShift) return a + l.sign;
  const PartialInjection* t = find_table(l.gen);
  if (!t) throw std::out_of_range("PartialAssignment: no table for " + l.gen);
  return l.sign == 1 ? t->image(a) : t->preimage(a);
}

Trace PartialAssignment::trace(const Word& w, Int start) const {
  return trace_with(
      w, [this](const Letter& l, Int a) { return step(l, a); }, start);
}

void PartialAssignment::insert(const std::string& gen, Int src, Int tgt) {
  if (protected_point(src) || protected_point(tgt))
    throw std::logic_error("PartialAssignment: pair touches the protected window");
  for (std::size_t i = 0; i < free_gens_.size(); ++i) {
    if (free_gens_[i] == gen) {
      tables_[i].insert(src, tgt);
      touched_.insert(src);
      touched_.insert(tgt);
      return;
    }
  }
  throw std::out_of_range("PartialAssignment: no table for " + gen);
}

Int PartialAssignment::pick_fresh(const std::function<bool(Int)>& extra_ok) {
  if (rng_) {
    Int range = 64 + 4 * static_cast<Int>(touched_.size());
    if (protected_) range += 4 * protected_->radius();
    for (int attempt = 0; attempt < 100000; ++attempt) {
      std::uniform_int_distribution<Int> dist(-range, range);
      Int cand = dist(*rng_);
      if (!excluded(cand) && extra_ok(cand)) return cand;
      if (attempt % 64 == 63) range *= 2;
    }
    throw std::logic_error("PartialAssignment: seeded fresh scan exhausted");
  }
  const Int limit = 1000000000;
  for (Int k = 0; k <= limit; ++k) {
    if (k == 0) {
      if (!excluded(0) && extra_ok(0)) return 0;
      continue;
    }
    if (!excluded(k) && extra_ok(k)) return k;
    if (!excluded(-k) && extra_ok(-k)) return -k;
  }
  throw std::logic_error("PartialAssignment: fresh scan exhausted");
}

GeneratorAssignment PartialAssignment::finalized() const {
  GeneratorAssignment out;
  for (std::size_t i = 0; i < free_gens_.size(); ++i)
    out.set(free_gens_[i], FinPerm::table(tables_[i]));
  out.set(kShift, FinPerm::shift(1));
  return out;
}

std::vector<Int> fresh_points(PartialAssignment& assign, const std::set<Int>& exclusions,
                              int count) {
  std::vector<Int> out;
  std::set<Int> picked;
  for (int i = 0; i < count; ++i) {
    Int p = assign.pick_fresh([&](Int c) { return !exclusions.count(c) && !picked.count(c); });
    picked.insert(p);
    out.push_back(p);
  }
  return out;
}

namespace {

// One table insertion realizing letter applied at `at` landing on `to`.
void define_letter(PartialAssignment& pa, const Letter& l, Int at, Int to,
                   std::vector<Insertion>& log) {
  Int src = l.sign == 1 ? at : to;
  Int tgt = l.sign == 1 ? to : at;
  pa.insert(l.gen, src, tgt);
  log.push_back(Insertion{l.gen, src, tgt});
}

// Reduced word viewed as s^{r0} v0 s^{r1} v1 ... s^{r(k-1)} v(k-1) s^{rk}
// with each v a single non-shift letter.
struct SigmaDecomposition {
  std::vector<Int> runs;    // k + 1 entries
  std::vector<Letter> vs;   // k entries
};

SigmaDecomposition decompose(const Word& w) {
  SigmaDecomposition d;
  Int run = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen == PartialAssignment::shift_name()) {
      run += l.sign;
    } else {
      d.runs.push_back(run);
      d.vs.push_back(l);
      run = 0;
    }
  }
  d.runs.push_back(run);
  return d;
}

// Chooses anchor points a0..ak so that the whole trace
//   a0 -> a0+r0 -> a1 -> a1+r1 -> ... -> ak -> ak+rk
// runs through points that are fresh and pairwise distinct, then defines the
// v-letters along it. Returns the anchors.
std::vector<Int> build_fresh_path(PartialAssignment& pa, const SigmaDecomposition& d,
                                  const std::set<Int>& extra_exclusions,
                                  std::vector<Insertion>& log) {
  std::set<Int> used = extra_exclusions;
  std::vector<Int> anchors;
  anchors.reserve(d.runs.size());
  for (std::size_t i = 0; i < d.runs.size(); ++i) {
    Int r = d.runs[i];
    Int a = pa.pick_fresh([&](Int c) {
      return !used.count(c) && !used.count(c + r) && !pa.excluded(c + r);
    });
    used.insert(a);
    used.insert(a + r);
    anchors.push_back(a);
  }
  for (std::size_t i = 0; i < d.vs.size(); ++i)
    define_letter(pa, d.vs[i], anchors[i] + d.runs[i], anchors[i + 1], log);
  return anchors;
}

Int net_shift(const Word& w) {
  Int n = 0;
  for (const Letter& l : w.letters()) n += l.sign;
  return n;
}

bool only_shift_letters(const Word& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](const Letter& l) { return l.gen == PartialAssignment::shift_name(); });
}

// Follows the word from `start`, filling any undefined table application
// with a fresh image. The endpoint becomes a defined value of the word.
Int walk_define(PartialAssignment& pa, const Word& w, Int start,
                std::vector<Insertion>& log) {
  Int cur = start;
  for (const Letter& l : w.letters()) {
    std::optional<Int> next = pa.step(l, cur);
    if (!next) {
      Int f = pa.pick_fresh([](Int) { return true; });
      define_letter(pa, l, cur, f, log);
      next = f;
    }
    cur = *next;
  }
  return cur;
}

struct WalkOutcome {
  bool closed = false;
  std::vector<Int> cycle;       // period endpoints, starting at the walk origin
  Int stuck_point = 0;
  std::size_t stuck_letter = 0; // index into the core's letters
  Int consumed = 0;             // successful letter applications
};

Int walk_guard(const PartialAssignment& pa, std::size_t k) {
  return static_cast<Int>((2 * pa.total_pairs() + 64) * k * 2 + 1024);
}

WalkOutcome forward_walk(const PartialAssignment& pa, const std::vector<Letter>& letters,
                         Int origin) {
  WalkOutcome out;
  const std::size_t k = letters.size();
  const Int guard = walk_guard(pa, k);
  out.cycle.push_back(origin);
  Int cur = origin;
  std::size_t phase = 0;
  while (out.consumed <= guard) {
    std::optional<Int> next = pa.step(letters[phase], cur);
    if (!next) {
      out.stuck_point = cur;
      out.stuck_letter = phase;
      return out;
    }
    cur = *next;
    ++out.consumed;
    phase = (phase + 1) % k;
    if (phase == 0) {
      if (cur == origin) {
        out.closed = true;
        return out;
      }
      out.cycle.push_back(cur);
    }
  }
  throw std::logic_error("forward_walk: guard exceeded");
}

WalkOutcome backward_walk(const PartialAssignment& pa, const std::vector<Letter>& letters,
                          Int origin) {
  WalkOutcome out;
  const std::size_t k = letters.size();
  const Int guard = walk_guard(pa, k);
  Int cur = origin;
  std::size_t idx = k - 1;
  while (out.consumed <= guard) {
    std::optional<Int> prev = pa.step(letters[idx].inverse(), cur);
    if (!prev) {
      out.stuck_point = cur;
      out.stuck_letter = idx;  // the letter whose preimage at cur is missing
      return out;
    }
    cur = *prev;
    ++out.consumed;
    if (cur == origin && out.consumed % static_cast<Int>(k) == 0)
      throw std::logic_error("backward_walk: closed although forward walk stuck");
    idx = idx == 0 ? k - 1 : idx - 1;
  }
  throw std::logic_error("backward_walk: guard exceeded");
}

}  // namespace

ForceResult force_nontrivial(PartialAssignment& assign, const Word& v) {
  if (v.empty()) throw std::invalid_argument("force_nontrivial: word is empty");
  ForceResult res;
  res.witness.kind = Witness::Kind::Nontrivial;
  res.witness.word = v;

  if (only_shift_letters(v)) {
    // a pure shift power moves everything; witnessed at 0 with no insertion
    res.witness.moved_from = 0;
    res.witness.moved_to = net_shift(v);
    return res;
  }

  SigmaDecomposition d = decompose(v);
  std::vector<Int> anchors = build_fresh_path(assign, d, {}, res.inserted);
  res.witness.moved_from = anchors.front();
  res.witness.moved_to = anchors.back() + d.runs.back();
  assert(res.witness.moved_from != res.witness.moved_to);
  assert(replay_witness(res.witness, assign));
  return res;
}

ForceResult force_mapping(PartialAssignment& assign, const std::vector<Int>& x,
                          const std::vector<Int>& y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("force_mapping: tuples must be nonempty and equal length");
  auto distinct = [](const std::vector<Int>& v) {
    std::set<Int> s(v.begin(), v.end());
    return s.size() == v.size();
  };
  if (!distinct(x) || !distinct(y))
    throw std::invalid_argument("force_mapping: tuple entries must be distinct");
  if (assign.free_generators().empty())
    throw std::invalid_argument("force_mapping: no free generator to extend");

  const std::string& t1 = assign.free_generators().front();
  auto in_any_domain = [&](Int p) {
    for (const auto& g : assign.free_generators())
      if (assign.table(g).defines(p)) return true;
    return false;
  };
  auto in_any_codomain = [&](Int p) {
    for (const auto& g : assign.free_generators())
      if (assign.table(g).hits(p)) return true;
    return false;
  };

  Int r = 0;
  const Int limit = static_cast<Int>(assign.total_pairs()) * 4 + 1000000;
  for (;; ++r) {
    if (r > limit) throw std::logic_error("force_mapping: no admissible shift found");
    bool ok = true;
    for (std::size_t j = 0; j < x.size() && ok; ++j) {
      if (assign.protected_point(x[j] + r) || in_any_domain(x[j] + r)) ok = false;
      if (assign.protected_point(y[j] + r) || in_any_codomain(y[j] + r)) ok = false;
    }
    if (ok) break;
  }

  ForceResult res;
  res.witness.kind = Witness::Kind::Mapping;
  for (std::size_t j = 0; j < x.size(); ++j) {
    assign.insert(t1, x[j] + r, y[j] + r);
    res.inserted.push_back(Insertion{t1, x[j] + r, y[j] + r});
  }
  Word s = Word::generator(PartialAssignment::shift_name());
  res.witness.word = s.pow(r) * Word::generator(t1) * s.pow(-r);
  res.witness.from = x;
  res.witness.to = y;
  res.witness.shift = r;
  assert(replay_witness(res.witness, assign));
  return res;
}

ForceResult force_long_orbit(PartialAssignment& assign, const Word& w, Int t) {
  if (t < 1) throw std::invalid_argument("force_long_orbit: t must be positive");
  if (w.empty() || w.is_conjugate_power_of(PartialAssignment::shift_name()))
    throw std::invalid_argument("force_long_orbit: word is conjugate to a shift power");

  CyclicForm cf = w.cyclic_reduce();
  ForceResult res;
  res.witness.kind = Witness::Kind::LongOrbit;
  res.witness.word = w;
  res.witness.core = cf.core;
  res.witness.conjugator = cf.conjugator;

  if (t == 1) {
    res.witness.chain.push_back(assign.pick_fresh([](Int) { return true; }));
    return res;
  }

  // Fresh path for core^(t-1); its period endpoints are the core chain.
  Word repeated = cf.core.pow(t - 1);
  SigmaDecomposition d = decompose(repeated);
  std::vector<Int> anchors = build_fresh_path(assign, d, {}, res.inserted);
  Trace tr = assign.trace(repeated, anchors.front());
  if (!tr.complete()) throw std::logic_error("force_long_orbit: fresh path not defined");
  std::vector<Int> core_chain;
  for (Int i = 0; i < t; ++i)
    core_chain.push_back(tr.points[static_cast<std::size_t>(i) * cf.core.size()]);

  if (cf.conjugator.empty()) {
    res.witness.chain = core_chain;
  } else {
    Word back = cf.conjugator.inverse();
    for (Int p : core_chain)
      res.witness.chain.push_back(walk_define(assign, back, p, res.inserted));
  }
  assert(replay_witness(res.witness, assign));
  return res;
}

ForceResult force_finite_orbit(PartialAssignment& assign, const Word& w, Int a,
                               Int min_cycle_len) {
  if (min_cycle_len < 1)
    throw std::invalid_argument("force_finite_orbit: min_cycle_len must be positive");
  if (w.empty() || w.is_conjugate_power_of(PartialAssignment::shift_name()))
    throw std::invalid_argument("force_finite_orbit: word is conjugate to a shift power");

  CyclicForm cf = w.cyclic_reduce();
  const std::vector<Letter>& letters = cf.core.letters();
  const std::size_t k = letters.size();

  ForceResult res;
  res.witness.kind = Witness::Kind::FiniteOrbit;
  res.witness.word = w;
  res.witness.core = cf.core;
  res.witness.conjugator = cf.conjugator;
  res.witness.base = a;
  res.witness.base_conj =
      cf.conjugator.empty() ? a : walk_define(assign, cf.conjugator, a, res.inserted);
  const Int origin = res.witness.base_conj;

  WalkOutcome fwd = forward_walk(assign, letters, origin);
  if (!fwd.closed) {
    WalkOutcome bwd = backward_walk(assign, letters, origin);
    const Int b = fwd.stuck_point;
    const Int c = bwd.stuck_point;
    const std::size_t s0 = fwd.stuck_letter;
    const std::size_t l0 = bwd.stuck_letter;

    // Shortest letter route from phase s0 to just past phase l0, plus
    // whole-core wraps until the closed cycle is long enough.
    Int m = static_cast<Int>((l0 + k - s0) % k) + 1;
    Int base_total = fwd.consumed + m + bwd.consumed;
    if (base_total % static_cast<Int>(k) != 0)
      throw std::logic_error("force_finite_orbit: route does not align with the core");
    Int wraps = std::max<Int>(0, min_cycle_len - base_total / static_cast<Int>(k));
    m += wraps * static_cast<Int>(k);

    auto route_letter = [&](Int j) { return letters[(s0 + static_cast<std::size_t>(j)) % k]; };
    if (m == 1) {
      define_letter(assign, route_letter(0), b, c, res.inserted);
    } else if (m == 2) {
      Int d1 = assign.pick_fresh([&](Int p) { return p != b && p != c; });
      define_letter(assign, route_letter(0), b, d1, res.inserted);
      define_letter(assign, route_letter(1), d1, c, res.inserted);
    } else {
      std::vector<Letter> interior;
      for (Int j = 1; j + 1 < m; ++j) interior.push_back(route_letter(j));
      SigmaDecomposition d = decompose(Word::reduce(interior));
      std::vector<Int> anchors = build_fresh_path(assign, d, {b, c}, res.inserted);
      Int d1 = anchors.front();
      Int d2 = anchors.back() + d.runs.back();
      define_letter(assign, route_letter(0), b, d1, res.inserted);
      define_letter(assign, route_letter(m - 1), d2, c, res.inserted);
    }

    fwd = forward_walk(assign, letters, origin);
    if (!fwd.closed) throw std::logic_error("force_finite_orbit: surgery did not close orbit");
  }
  res.witness.cycle = fwd.cycle;
  assert(replay_witness(res.witness, assign));
  return res;
}

namespace {

template <typename Eval>
bool replay_with(const Witness& w, const Eval& eval) {
  auto eq = [&](const Word& word, Int from, Int to) {
    std::optional<Int> v = eval(word, from);
    return v.has_value() && *v == to;
  };
  auto all_distinct = [](const std::vector<Int>& pts) {
    std::set<Int> s(pts.begin(), pts.end());
    return s.size() == pts.size();
  };
  switch (w.kind) {
    case Witness::Kind::Nontrivial:
      return w.moved_from != w.moved_to && eq(w.word, w.moved_from, w.moved_to);
    case Witness::Kind::Mapping: {
      if (w.from.size() != w.to.size()) return false;
      for (std::size_t j = 0; j < w.from.size(); ++j)
        if (!eq(w.word, w.from[j], w.to[j])) return false;
      return true;
    }
    case Witness::Kind::LongOrbit: {
      if (w.chain.empty() || !all_distinct(w.chain)) return false;
      for (std::size_t i = 0; i + 1 < w.chain.size(); ++i)
        if (!eq(w.word, w.chain[i], w.chain[i + 1])) return false;
      return true;
    }
    case Witness::Kind::FiniteOrbit: {
      if (w.cycle.empty() || !all_distinct(w.cycle)) return false;
      if (!eq(w.conjugator, w.base, w.base_conj)) return false;
      if (w.cycle.front() != w.base_conj) return false;
      for (std::size_t i = 0; i < w.cycle.size(); ++i)
        if (!eq(w.core, w.cycle[i], w.cycle[(i + 1) % w.cycle.size()])) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

bool replay_witness(const Witness& w, const GeneratorAssignment& assign) {
  return replay_with(w, [&](const Word& word, Int a) -> std::optional<Int> {
    return evaluate(word, assign, a);
  });
}

bool replay_witness(const Witness& w, const PartialAssignment& assign) {
  return replay_with(w, [&](const Word& word, Int a) -> std::optional<Int> {
    Trace t = assign.trace(word, a);
    if (!t.complete()) return std::nullopt;
    return t.points.back();
  });
}

}  // namespace hitrans
