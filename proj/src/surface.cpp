#include "hitrans/surface.hpp"

#include <algorithm>

namespace hitrans {

namespace {

std::string num(std::string base, int i) { return base + std::to_string(i); }

Word gen(const std::string& name) { return Word::generator(name); }

bool is_cyclic_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t off = 0; off < lb.size(); ++off) {
    bool match = true;
    for (std::size_t i = 0; i < la.size() && match; ++i)
      match = la[i] == lb[(i + off) % lb.size()];
    if (match) return true;
  }
  return false;
}

}  // namespace

bool Presentation::has_generator(std::string_view name) const {
  return std::find(generators.begin(), generators.end(), name) != generators.end();
}

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

Presentation presentation_even(int r) {
  if (r < 1) throw std::invalid_argument("presentation_even: r must be >= 1");
  Presentation p;
  for (int i = 1; i <= r; ++i) {
    p.generators.push_back(num("a", i));
    p.generators.push_back(num("a", i) + "'");
  }
  for (int i = 1; i <= r; ++i) {
    p.generators.push_back(num("b", i));
    p.generators.push_back(num("b", i) + "'");
  }
  Word rel;
  for (int i = 1; i <= r; ++i) rel = rel * commutator(gen(num("a", i)), gen(num("a", i) + "'"));
  for (int i = r; i >= 1; --i) rel = rel * commutator(gen(num("b", i) + "'"), gen(num("b", i)));
  p.relator = rel;
  return p;
}

Presentation presentation_odd(int r) {
  if (r < 1) throw std::invalid_argument("presentation_odd: r must be >= 1");
  Presentation p;
  for (int i = 1; i <= r; ++i) {
    p.generators.push_back(num("a", i));
    p.generators.push_back(num("a", i) + "'");
  }
  p.generators.push_back("b");
  p.generators.push_back("b'");
  for (int i = 1; i <= r; ++i) {
    p.generators.push_back(num("c", i));
    p.generators.push_back(num("c", i) + "'");
  }
  // The c-part descends like the even presentation's b-part; the ascending
  // order would stop the folding map from killing the relator for r >= 2.
  Word rel;
  for (int i = 1; i <= r; ++i) rel = rel * commutator(gen(num("a", i)), gen(num("a", i) + "'"));
  rel = rel * commutator(gen("b'"), gen("b"));
  for (int i = r; i >= 1; --i) rel = rel * commutator(gen(num("c", i) + "'"), gen(num("c", i)));
  p.relator = rel;
  return p;
}

Word twist_curve_even(int r) {
  Word x;
  for (int i = 1; i <= r; ++i) x = x * commutator(gen(num("a", i)), gen(num("a", i) + "'"));
  return x;
}

Word twist_curve_odd(int r) { return twist_curve_even(r) * gen("b'"); }

// ---- GroupMap ----

const Word& GroupMap::image(const std::string& g) const {
  auto it = images_.find(g);
  if (it == images_.end()) throw std::out_of_range("GroupMap: no image for " + g);
  return it->second;
}

Word GroupMap::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    const Word& img = image(l.gen);
    out = out * (l.sign == 1 ? img : img.inverse());
  }
  return out;
}

void GroupMap::validate() const {
  for (const auto& g : source_gens_)
    if (!images_.count(g)) throw std::invalid_argument("GroupMap: missing image for " + g);
  if (!source_relator_) return;
  Word img = apply(*source_relator_);
  if (!target_relator_) {
    if (!img.empty())
      throw std::invalid_argument("GroupMap: relator image does not reduce to the identity");
    return;
  }
  Word core = img.cyclic_reduce().core;
  if (core.empty()) return;
  if (!is_cyclic_rotation(core, *target_relator_) &&
      !is_cyclic_rotation(core, target_relator_->inverse()))
    throw std::invalid_argument("GroupMap: relator image is not trivial in the target");
}

GroupMap GroupMap::endomorphism(Presentation source, std::map<std::string, Word> images) {
  GroupMap f;
  f.source_gens_ = source.generators;
  f.target_gens_ = source.generators;
  f.source_relator_ = source.relator;
  f.target_relator_ = std::move(source.relator);
  f.images_ = std::move(images);
  f.validate();
  return f;
}

GroupMap GroupMap::onto_free(Presentation source, std::vector<std::string> target_alphabet,
                             std::map<std::string, Word> images) {
  GroupMap f;
  f.source_gens_ = std::move(source.generators);
  f.target_gens_ = std::move(target_alphabet);
  f.source_relator_ = std::move(source.relator);
  f.images_ = std::move(images);
  f.validate();
  return f;
}

GroupMap GroupMap::free_to_free(std::vector<std::string> source_alphabet,
                                std::vector<std::string> target_alphabet,
                                std::map<std::string, Word> images) {
  GroupMap f;
  f.source_gens_ = std::move(source_alphabet);
  f.target_gens_ = std::move(target_alphabet);
  f.images_ = std::move(images);
  f.validate();
  return f;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  std::map<std::string, Word> images;
  for (const auto& g : inner.source_generators()) images[g] = outer.apply(inner.image(g));
  if (inner.source_relator()) {
    Presentation p{inner.source_generators(), *inner.source_relator()};
    if (outer.target_relator())
      return GroupMap::endomorphism(std::move(p), std::move(images));
    return GroupMap::onto_free(std::move(p), outer.target_generators(), std::move(images));
  }
  return GroupMap::free_to_free(inner.source_generators(), outer.target_generators(),
                                std::move(images));
}

GroupMap power(const GroupMap& f, int n) {
  if (n < 0) throw std::invalid_argument("power: n must be >= 0");
  if (!f.source_relator() || !f.target_relator())
    throw std::invalid_argument("power: endomorphisms only");
  std::map<std::string, Word> identity;
  for (const auto& g : f.source_generators()) identity[g] = Word::generator(g);
  GroupMap acc = GroupMap::endomorphism(
      Presentation{f.source_generators(), *f.source_relator()}, std::move(identity));
  for (int i = 0; i < n; ++i) acc = compose(f, acc);
  return acc;
}

// ---- the concrete twists and foldings ----

GroupMap dehn_twist_even(int r) {
  Presentation p = presentation_even(r);
  Word x = twist_curve_even(r);
  std::map<std::string, Word> images;
  for (int i = 1; i <= r; ++i) {
    images[num("a", i)] = gen(num("a", i));
    images[num("a", i) + "'"] = gen(num("a", i) + "'");
    images[num("b", i)] = x * gen(num("b", i)) * x.inverse();
    images[num("b", i) + "'"] = x * gen(num("b", i) + "'") * x.inverse();
  }
  return GroupMap::endomorphism(std::move(p), std::move(images));
}

std::pair<GroupMap, GroupMap> twists_odd(int r) {
  Presentation p = presentation_odd(r);
  Word x = twist_curve_odd(r);

  std::map<std::string, Word> delta;
  std::map<std::string, Word> zeta;
  for (int i = 1; i <= r; ++i) {
    for (const char* base : {"a", "c"}) {
      std::string g1 = num(base, i);
      std::string g2 = g1 + "'";
      zeta[g1] = gen(g1);
      zeta[g2] = gen(g2);
      if (base[0] == 'a') {
        delta[g1] = gen(g1);
        delta[g2] = gen(g2);
      } else {
        delta[g1] = x * gen(g1) * x.inverse();
        delta[g2] = x * gen(g2) * x.inverse();
      }
    }
  }
  delta["b"] = x * gen("b");
  delta["b'"] = gen("b'");
  zeta["b"] = gen("b") * gen("b'").inverse();
  zeta["b'"] = gen("b'");

  return {GroupMap::endomorphism(p, std::move(delta)),
          GroupMap::endomorphism(p, std::move(zeta))};
}

std::vector<std::string> free_alphabet_even(int r) {
  std::vector<std::string> out;
  for (int i = 1; i <= r; ++i) {
    out.push_back(num("phi", i));
    out.push_back(num("phi", i) + "'");
  }
  return out;
}

std::vector<std::string> free_alphabet_odd(int r) {
  std::vector<std::string> out = free_alphabet_even(r);
  out.push_back("tau");
  return out;
}

GroupMap folding_even(int r) {
  Presentation p = presentation_even(r);
  std::map<std::string, Word> images;
  for (int i = 1; i <= r; ++i) {
    images[num("a", i)] = gen(num("phi", i));
    images[num("b", i)] = gen(num("phi", i));
    images[num("a", i) + "'"] = gen(num("phi", i) + "'");
    images[num("b", i) + "'"] = gen(num("phi", i) + "'");
  }
  return GroupMap::onto_free(std::move(p), free_alphabet_even(r), std::move(images));
}

GroupMap folding_odd(int r) {
  Presentation p = presentation_odd(r);
  std::map<std::string, Word> images;
  for (int i = 1; i <= r; ++i) {
    images[num("a", i)] = gen(num("phi", i));
    images[num("c", i)] = gen(num("phi", i));
    images[num("a", i) + "'"] = gen(num("phi", i) + "'");
    images[num("c", i) + "'"] = gen(num("phi", i) + "'");
  }
  images["b"] = Word();
  images["b'"] = gen("tau");
  return GroupMap::onto_free(std::move(p), free_alphabet_odd(r), std::move(images));
}

Presentation presentation_for_genus(int genus) {
  if (genus < 2) throw std::invalid_argument("presentation_for_genus: genus must be >= 2");
  return genus % 2 == 0 ? presentation_even(genus / 2) : presentation_odd(genus / 2);
}

GroupMap twist_folding(int genus, int n) {
  if (genus < 2) throw std::invalid_argument("twist_folding: genus must be >= 2");
  if (n < 0) throw std::invalid_argument("twist_folding: n must be >= 0");
  if (genus % 2 == 0) {
    int r = genus / 2;
    return compose(folding_even(r), power(dehn_twist_even(r), n));
  }
  int r = genus / 2;
  auto [delta, zeta] = twists_odd(r);
  return compose(folding_odd(r), power(compose(delta, zeta), n));
}

std::optional<int> faithful_index(int genus, const Word& g, int n_max) {
  if (n_max < 0) throw std::invalid_argument("faithful_index: n_max must be >= 0");
  Presentation p = presentation_for_genus(genus);
  for (const Letter& l : g.letters())
    if (!p.has_generator(l.gen))
      throw std::invalid_argument("faithful_index: unknown generator " + l.gen);

  GroupMap twist = genus % 2 == 0 ? dehn_twist_even(genus / 2) : [&] {
    auto [delta, zeta] = twists_odd(genus / 2);
    return compose(delta, zeta);
  }();
  GroupMap fold = genus % 2 == 0 ? folding_even(genus / 2) : folding_odd(genus / 2);

  int last_killed = -1;
  Word twisted = g;
  for (int n = 0; n <= n_max; ++n) {
    if (fold.apply(twisted).empty()) last_killed = n;
    if (n < n_max) twisted = twist.apply(twisted);
  }
  if (last_killed == n_max) return std::nullopt;
  return last_killed + 1;
}

}  // namespace hitrans
