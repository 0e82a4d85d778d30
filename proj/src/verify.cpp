#include "hitrans/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hitrans {

namespace {

// 0, 1, -1, 2, -2, ... intersected with the window
std::vector<Int> scan_order(const Window& win) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(win.size()));
  if (win.contains(0)) out.push_back(0);
  for (Int k = 1; k <= win.radius(); ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

}  // namespace

FreenessReport check_freeness(const GeneratorAssignment& assign, int max_len,
                              const Window& search_window) {
  FreenessReport report;
  std::vector<Int> points = scan_order(search_window);
  for (const Word& w : enumerate_reduced_words(assign.names(), max_len)) {
    ++report.words_checked;
    bool moved = false;
    for (Int a : points) {
      if (evaluate(w, assign, a) != a) {
        moved = true;
        break;
      }
    }
    if (!moved) report.flagged.push_back(w);
  }
  return report;
}

TransitivityReport check_transitivity(const GeneratorAssignment& assign, int k,
                                      const Window& win, int word_len_cap,
                                      const ConstructionLog* log) {
  TransitivityReport report;

  // index logged mapping witnesses by their certified tuples
  std::map<std::pair<std::vector<Int>, std::vector<Int>>, const Witness*> by_tuples;
  if (log) {
    for (const LogEntry& e : log->entries)
      if (e.witness.kind == Witness::Kind::Mapping)
        by_tuples[{e.witness.from, e.witness.to}] = &e.witness;
  }

  std::vector<Word> words;
  words.push_back(Word());  // the identity realizes every diagonal pair
  for (Word& w : enumerate_reduced_words(assign.names(), word_len_cap))
    words.push_back(std::move(w));
  std::vector<std::vector<Int>> tuples = distinct_tuples(win, k);
  for (const auto& x : tuples) {
    for (const auto& y : tuples) {
      ++report.pairs_checked;
      auto hit = by_tuples.find({x, y});
      if (hit != by_tuples.end() && replay_witness(*hit->second, assign)) continue;

      bool realized = false;
      for (const Word& w : words) {
        bool ok = true;
        for (std::size_t j = 0; j < x.size() && ok; ++j)
          ok = evaluate(w, assign, x[j]) == y[j];
        if (ok) {
          realized = true;
          break;
        }
      }
      if (!realized) report.unrealized.emplace_back(x, y);
    }
  }
  return report;
}

namespace {

// Orbit length of a under <w>, or nullopt when it exceeds cap.
std::optional<Int> orbit_length(const Word& w, const GeneratorAssignment& assign, Int a,
                                Int cap) {
  Int b = a;
  for (Int len = 1; len <= cap; ++len) {
    b = evaluate(w, assign, b);
    if (b == a) return len;
  }
  return std::nullopt;
}

// moved by w^q iff the orbit length does not divide q
std::optional<bool> moved_by_power(const Word& w, const GeneratorAssignment& assign, Int a,
                                   Int q, Int cap) {
  std::optional<Int> len = orbit_length(w, assign, a, cap);
  if (!len) {
    if (cap >= q) return true;  // length > cap >= q cannot divide q
    return std::nullopt;        // cannot certify either way
  }
  return q % *len != 0;
}

}  // namespace

NondiscreteReport check_nondiscrete(const Word& w, const GeneratorAssignment& assign,
                                    const Window& win, Int cap,
                                    const std::vector<Int>& hint_points) {
  NondiscreteReport report;
  report.q = window_fixing_power(w, assign, win, cap);

  std::vector<Int> candidates;
  for (Int p : hint_points)
    if (!win.contains(p)) candidates.push_back(p);
  const Int scan_limit = win.radius() + 2 * cap + 64;
  for (Int k = win.radius() + 1; k <= scan_limit; ++k) {
    candidates.push_back(k);
    candidates.push_back(-k);
  }
  for (Int a : candidates) {
    std::optional<bool> moved = moved_by_power(w, assign, a, report.q, cap);
    if (moved.has_value() && *moved) {
      report.moved = a;
      return report;
    }
  }
  return report;  // degenerate: no moved point within the search bound
}

NondiscretePairReport check_nondiscrete_pair(const Word& w1, const Word& w2,
                                             const GeneratorAssignment& assign,
                                             const Window& win, Int cap,
                                             const std::vector<Int>& hints1,
                                             const std::vector<Int>& hints2) {
  NondiscreteReport r1 = check_nondiscrete(w1, assign, win, cap, hints1);
  NondiscreteReport r2 = check_nondiscrete(w2, assign, win, cap, hints2);
  Int g = std::gcd(r1.q, r2.q);
  NondiscretePairReport out;
  out.q = (r1.q / g) * r2.q;

  // the single-word moved points stay moved iff their orbit length still
  // fails to divide the common power
  auto removed = [&](const Word& w, std::optional<Int> cand,
                     const std::vector<Int>& hints) -> std::optional<Int> {
    std::vector<Int> candidates;
    if (cand) candidates.push_back(*cand);
    for (Int p : hints) candidates.push_back(p);
    const Int scan_limit = win.radius() + 2 * cap + 64;
    for (Int k = win.radius() + 1; k <= scan_limit; ++k) {
      candidates.push_back(k);
      candidates.push_back(-k);
    }
    for (Int a : candidates) {
      if (win.contains(a)) continue;
      std::optional<bool> moved = moved_by_power(w, assign, a, out.q, cap);
      if (moved.has_value() && *moved) return a;
    }
    return std::nullopt;
  };
  out.moved_first = removed(w1, r1.moved, hints1);
  out.moved_second = removed(w2, r2.moved, hints2);
  return out;
}

EmbeddingReport check_embedding(const EmbeddingSpec& spec, const std::vector<Word>& sample,
                                const Window& win) {
  EmbeddingReport report;
  std::vector<Int> points = scan_order(win);
  for (const Word& g : sample) {
    EmbeddingItem item;
    item.element = g;
    Word symbolic = spec.symbolic_image(g);
    if (symbolic.empty()) {
      item.cls = EmbeddingClass::RelatorEquivalent;
    } else {
      item.cls = EmbeddingClass::Unverified;
      for (Int a : points) {
        if (spec.act(g, a) != a) {
          item.cls = EmbeddingClass::CertifiedNontrivial;
          item.moved_point = a;
          break;
        }
      }
    }
    report.items.push_back(std::move(item));
  }
  return report;
}

ReplayReport replay_log(const ConstructionLog& log, const GeneratorAssignment& assign) {
  ReplayReport report;
  for (const LogEntry& e : log.entries) {
    ++report.total;
    if (!replay_witness(e.witness, assign)) ++report.failed;
    for (const Insertion& ins : e.inserted) {
      const FinPerm* p = assign.find(ins.gen);
      if (!p || p->is_shift() || p->table_data().image(ins.src) != ins.tgt) {
        report.pairs_present = false;
      }
    }
  }
  return report;
}

Int log_extent(const ConstructionLog& log) {
  Int extent = 0;
  auto see = [&extent](Int p) { extent = std::max(extent, p < 0 ? -p : p); };
  for (const LogEntry& e : log.entries) {
    for (const Insertion& ins : e.inserted) {
      see(ins.src);
      see(ins.tgt);
    }
    const Witness& w = e.witness;
    see(w.moved_from);
    see(w.moved_to);
    for (Int p : w.from) see(p);
    for (Int p : w.to) see(p);
    for (Int p : w.chain) see(p);
    for (Int p : w.cycle) see(p);
    see(w.base);
    see(w.base_conj);
  }
  return extent;
}

std::vector<Int> orbit_hint_points(const ConstructionLog& log, const Word& w) {
  std::vector<Int> out;
  for (const LogEntry& e : log.entries) {
    if (e.witness.word == w &&
        (e.witness.kind == Witness::Kind::LongOrbit ||
         e.witness.kind == Witness::Kind::FiniteOrbit)) {
      out.insert(out.end(), e.witness.chain.begin(), e.witness.chain.end());
      out.insert(out.end(), e.witness.cycle.begin(), e.witness.cycle.end());
    }
  }
  return out;
}

}  // namespace hitrans
