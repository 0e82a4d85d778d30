#include "hitrans/engine.hpp"

#include <algorithm>
#include <map>

namespace hitrans {

std::vector<std::string> ConstructionBudget::free_generator_names() const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n_free));
  for (int i = 1; i <= n_free; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

std::vector<std::string> ConstructionBudget::alphabet() const {
  std::vector<std::string> out = free_generator_names();
  out.push_back(PartialAssignment::shift_name());
  return out;
}

void ConstructionBudget::validate() const {
  if (n_free < 1) throw BudgetError("budget: n_free must be >= 1");
  if (word_len < 1) throw BudgetError("budget: word_len must be >= 1");
  if (tuple_max < 0) throw BudgetError("budget: tuple_max must be >= 0");
  if (orbit_target < 0) throw BudgetError("budget: orbit_target must be >= 0");
  std::vector<std::string> names = alphabet();
  for (const Word& w : designated) {
    if (w.empty()) throw BudgetError("budget: designated word is empty");
    if (w.is_conjugate_power_of(PartialAssignment::shift_name()))
      throw BudgetError("budget: designated word " + w.str() +
                        " is a conjugate of a shift power");
    for (const Letter& l : w.letters())
      if (std::find(names.begin(), names.end(), l.gen) == names.end())
        throw BudgetError("budget: designated word uses unknown generator " + l.gen);
  }
}

std::vector<std::vector<Int>> distinct_tuples(const Window& win, int k) {
  std::vector<std::vector<Int>> out;
  if (k < 1 || static_cast<Int>(k) > win.size()) return out;
  std::vector<Int> points = win.points();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  std::vector<bool> used(points.size(), false);
  std::vector<Int> tuple(static_cast<std::size_t>(k));
  // depth-first odometer over distinct indices, lexicographic
  std::size_t depth = 0;
  idx[0] = 0;
  while (true) {
    if (idx[depth] == points.size()) {
      if (depth == 0) break;
      --depth;
      used[idx[depth]] = false;
      ++idx[depth];
      continue;
    }
    if (used[idx[depth]]) {
      ++idx[depth];
      continue;
    }
    tuple[depth] = points[idx[depth]];
    if (depth + 1 == static_cast<std::size_t>(k)) {
      out.push_back(tuple);
      ++idx[depth];
      continue;
    }
    used[idx[depth]] = true;
    ++depth;
    idx[depth] = 0;
  }
  return out;
}

std::vector<Requirement> enumerate_requirements(const ConstructionBudget& budget) {
  budget.validate();
  std::vector<Requirement> out;

  for (Word& w : enumerate_reduced_words(budget.alphabet(), budget.word_len)) {
    Requirement req;
    req.kind = Requirement::Kind::Freeness;
    req.word = std::move(w);
    out.push_back(std::move(req));
  }

  for (int k = 1; k <= budget.tuple_max; ++k) {
    std::vector<std::vector<Int>> tuples = distinct_tuples(budget.window, k);
    for (const auto& x : tuples) {
      for (const auto& y : tuples) {
        Requirement req;
        req.kind = Requirement::Kind::Transitivity;
        req.x = x;
        req.y = y;
        out.push_back(std::move(req));
      }
    }
  }

  for (const Word& w : budget.designated) {
    for (Int t = 1; t <= budget.orbit_target; ++t) {
      Requirement req;
      req.kind = Requirement::Kind::LongOrbit;
      req.word = w;
      req.t = t;
      out.push_back(std::move(req));
    }
  }

  for (const Word& w : budget.designated) {
    for (Int a = -budget.window.radius(); a <= budget.window.radius(); ++a) {
      Requirement req;
      req.kind = Requirement::Kind::FiniteOrbit;
      req.word = w;
      req.point = a;
      out.push_back(std::move(req));
    }
  }

  return out;
}

ConstructionResult run_construction(const ConstructionBudget& budget) {
  budget.validate();
  std::vector<Requirement> requirements = enumerate_requirements(budget);
  PartialAssignment assign(budget.free_generator_names(), std::nullopt, budget.seed);
  ConstructionLog log;
  log.entries.reserve(requirements.size());

  // Orbit closure doubles as the witness that some window orbit reaches the
  // long-orbit target: demand long closures until one shows up.
  std::map<std::string, Int> longest_window_cycle;

  for (const Requirement& req : requirements) {
    LogEntry entry;
    ForceResult res;
    switch (req.kind) {
      case Requirement::Kind::Freeness:
        entry.op = "force_nontrivial";
        res = force_nontrivial(assign, req.word);
        break;
      case Requirement::Kind::Transitivity:
        entry.op = "force_mapping";
        res = force_mapping(assign, req.x, req.y);
        break;
      case Requirement::Kind::LongOrbit:
        entry.op = "force_long_orbit";
        res = force_long_orbit(assign, req.word, req.t);
        break;
      case Requirement::Kind::FiniteOrbit: {
        entry.op = "force_finite_orbit";
        Int& best = longest_window_cycle[req.word.str()];
        Int need = best >= budget.orbit_target ? 1 : std::max<Int>(1, budget.orbit_target);
        res = force_finite_orbit(assign, req.word, req.point, need);
        best = std::max(best, static_cast<Int>(res.witness.cycle.size()));
        break;
      }
    }
    entry.inserted = std::move(res.inserted);
    entry.witness = std::move(res.witness);
    log.entries.push_back(std::move(entry));
  }
  return ConstructionResult{std::move(assign), std::move(log)};
}

GeneratorAssignment finalize(const PartialAssignment& assign) { return assign.finalized(); }

// ---- embedding assembly ----

namespace {
const std::string kGamma = "gamma";
}

std::vector<std::pair<std::string, std::string>> phi_assignment_map(int r, bool even) {
  std::vector<std::string> phis = even ? free_alphabet_even(r) : free_alphabet_odd(r);
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    std::string target = i == 0 ? PartialAssignment::shift_name() : "t" + std::to_string(i);
    out.emplace_back(phis[i], std::move(target));
  }
  return out;
}

Presentation EmbeddingSpec::presentation() const {
  return even ? presentation_even(r) : presentation_odd(r);
}

const Word& EmbeddingSpec::image(const std::string& surface_gen) const {
  for (const auto& [g, w] : images)
    if (g == surface_gen) return w;
  throw std::out_of_range("EmbeddingSpec: no image for " + surface_gen);
}

Word EmbeddingSpec::expand_gamma(const Word& hybrid) const {
  Word out;
  for (const Letter& l : hybrid.letters()) {
    if (l.gen == kGamma)
      out = out * (l.sign == 1 ? gamma_phi : gamma_phi.inverse());
    else
      out = out * Word::generator(l.gen, l.sign);
  }
  return out;
}

Word EmbeddingSpec::to_assignment_alphabet(const Word& phi_word) const {
  std::vector<Letter> letters;
  letters.reserve(phi_word.size());
  for (const Letter& l : phi_word.letters()) {
    for (const auto& [phi, target] : phi_map) {
      if (phi == l.gen) {
        letters.push_back(Letter{target, l.sign});
        break;
      }
    }
  }
  if (letters.size() != phi_word.size())
    throw std::logic_error("EmbeddingSpec: phi word uses a name outside phi_map");
  return Word::reduce(std::move(letters));
}

Word EmbeddingSpec::image_in_assignment(const std::string& surface_gen) const {
  return to_assignment_alphabet(expand_gamma(image(surface_gen)));
}

Word EmbeddingSpec::symbolic_image(const Word& surface_word) const {
  Word out;
  for (const Letter& l : surface_word.letters()) {
    Word img = expand_gamma(image(l.gen));
    out = out * (l.sign == 1 ? img : img.inverse());
  }
  return out;
}

Int EmbeddingSpec::act(const Word& surface_word, Int a) const {
  for (const Letter& l : surface_word.letters()) {
    Word img = image_in_assignment(l.gen);
    a = evaluate(l.sign == 1 ? img : img.inverse(), assignment, a);
  }
  return a;
}

namespace {

EmbeddingSpec build_embedding(const GeneratorAssignment& assign, int r, int n, bool even) {
  if (r < 1) throw InvalidRank("surface_hom: r must be >= 1");
  if (n < 1) throw InvalidRank("surface_hom: power must be >= 1");

  EmbeddingSpec spec;
  spec.even = even;
  spec.r = r;
  spec.genus = even ? 2 * r : 2 * r + 1;
  spec.power_n = n;
  spec.assignment = assign;
  spec.phi_map = phi_assignment_map(r, even);
  for (const auto& [phi, target] : spec.phi_map)
    if (!assign.find(target))
      throw InvalidRank("surface_hom: assignment lacks generator " + target + " for " + phi);

  for (int i = 1; i <= r; ++i) {
    std::string phi = "phi" + std::to_string(i);
    spec.gamma_phi =
        spec.gamma_phi * commutator(Word::generator(phi), Word::generator(phi + "'"));
  }
  if (!even) spec.gamma_phi = spec.gamma_phi * Word::generator("tau");

  Word g = Word::generator(kGamma);
  Word gn = g.pow(n);
  Word gninv = g.pow(-n);
  auto push = [&](const std::string& gen, Word w) {
    spec.images.emplace_back(gen, std::move(w));
  };
  for (int i = 1; i <= r; ++i) {
    std::string phi = "phi" + std::to_string(i);
    std::string outer = even ? "b" : "c";
    push("a" + std::to_string(i), Word::generator(phi));
    push("a" + std::to_string(i) + "'", Word::generator(phi + "'"));
    push(outer + std::to_string(i), gn * Word::generator(phi) * gninv);
    push(outer + std::to_string(i) + "'", gn * Word::generator(phi + "'") * gninv);
  }
  if (!even) {
    push("b", gn * Word::generator("tau").pow(-n));
    push("b'", Word::generator("tau"));
  }

  // sort images into presentation order
  Presentation p = spec.presentation();
  std::vector<std::pair<std::string, Word>> ordered;
  for (const auto& gname : p.generators) ordered.emplace_back(gname, spec.image(gname));
  spec.images = std::move(ordered);

  Word relator_image = spec.symbolic_image(p.relator);
  if (!relator_image.empty())
    throw std::logic_error("surface_hom: relator image failed to collapse");
  return spec;
}

}  // namespace

EmbeddingSpec surface_hom_even(const GeneratorAssignment& assign, int r, int n) {
  return build_embedding(assign, r, n, true);
}

EmbeddingSpec surface_hom_odd(const GeneratorAssignment& assign, int r, int n) {
  return build_embedding(assign, r, n, false);
}

}  // namespace hitrans
