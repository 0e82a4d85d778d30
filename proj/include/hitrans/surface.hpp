#pragma once

#include <map>

#include "hitrans/words.hpp"

namespace hitrans {

// One-relator presentation of a surface group.
struct Presentation {
  std::vector<std::string> generators;
  Word relator;

  bool has_generator(std::string_view name) const;
};

// Genus 2r: <a1,a1',...,ar,ar',b1,b1',...,br,br' |
//            [a1,a1']...[ar,ar'][br',br]...[b1',b1]>
Presentation presentation_even(int r);

// Genus 2r+1: <a1,a1',...,ar,ar',b,b',c1,c1',...,cr,cr' |
//              [a1,a1']...[ar,ar'][b',b][c1',c1]...[cr',cr]>
Presentation presentation_odd(int r);

// The twisting curves: x = [a1,a1']...[ar,ar'] (even),
// x = [a1,a1']...[ar,ar'] * b' (odd).
Word twist_curve_even(int r);
Word twist_curve_odd(int r);

Word commutator(const Word& u, const Word& v);

// Generator-image map between a presented (or free) source and a presented
// (or free) target. Construction eagerly checks that the relator image is
// trivial in the target: it must freely reduce to the empty word when the
// target is free, and must be a conjugate of a cyclic rotation of the target
// relator (or its inverse) when the target is presented.
class GroupMap {
 public:
  static GroupMap endomorphism(Presentation source, std::map<std::string, Word> images);
  static GroupMap onto_free(Presentation source, std::vector<std::string> target_alphabet,
                            std::map<std::string, Word> images);
  static GroupMap free_to_free(std::vector<std::string> source_alphabet,
                               std::vector<std::string> target_alphabet,
                               std::map<std::string, Word> images);

  const std::vector<std::string>& source_generators() const { return source_gens_; }
  const std::vector<std::string>& target_generators() const { return target_gens_; }
  const std::optional<Word>& source_relator() const { return source_relator_; }
  const std::optional<Word>& target_relator() const { return target_relator_; }
  const Word& image(const std::string& gen) const;

  // Substitute generator images and reduce.
  Word apply(const Word& w) const;

 private:
  GroupMap() = default;
  void validate() const;

  std::vector<std::string> source_gens_;
  std::vector<std::string> target_gens_;
  std::optional<Word> source_relator_;
  std::optional<Word> target_relator_;
  std::map<std::string, Word> images_;
};

inline Word apply_map(const GroupMap& f, const Word& w) { return f.apply(w); }

// outer after inner.
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap power(const GroupMap& f, int n);  // endomorphisms only; n >= 0

// Dehn twist h around x on the genus-2r surface group:
// a_i, a_i' fixed; b_i -> x b_i x^-1; b_i' -> x b_i' x^-1.
GroupMap dehn_twist_even(int r);

// Commuting Dehn twists (delta around x, zeta around b') on genus 2r+1.
std::pair<GroupMap, GroupMap> twists_odd(int r);

// Folding homomorphisms onto free groups:
// even: k(a_i) = k(b_i) = phi_i, k(a_i') = k(b_i') = phi_i'
// odd:  k(a_i) = k(c_i) = phi_i, k(a_i') = k(c_i') = phi_i',
//       k(b) = 1, k(b') = tau
GroupMap folding_even(int r);
GroupMap folding_odd(int r);

std::vector<std::string> free_alphabet_even(int r);  // phi1, phi1', ...
std::vector<std::string> free_alphabet_odd(int r);   // ..., tau

// f_n = k . h^n (even genus) or rho_n = k . (delta.zeta)^n (odd genus).
// genus >= 2; parity picks the construction.
GroupMap twist_folding(int genus, int n);

Presentation presentation_for_genus(int genus);

// Least n0 <= n_max with f_n(g) nonempty for all n in [n0, n_max]; empty
// optional when f_{n_max}(g) itself dies. Desk-scale empirical check only.
std::optional<int> faithful_index(int genus, const Word& g, int n_max);

}  // namespace hitrans
