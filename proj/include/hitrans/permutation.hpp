#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hitrans {

using Int = std::int64_t;

// Symmetric integer window [-radius, radius].
class Window {
 public:
  explicit Window(Int radius) : radius_(radius) {
    if (radius < 0) throw std::invalid_argument("Window: radius must be >= 0");
  }

  Int radius() const { return radius_; }
  Int size() const { return 2 * radius_ + 1; }
  bool contains(Int a) const { return a >= -radius_ && a <= radius_; }
  std::vector<Int> points() const;  // ascending

  bool operator==(const Window&) const = default;

 private:
  Int radius_;
};

// Finite partial bijection of Z: no source repeats, no target repeats.
class PartialInjection {
 public:
  PartialInjection() = default;
  static PartialInjection from_pairs(const std::vector<std::pair<Int, Int>>& pairs);

  // Throws std::invalid_argument if src is already defined or tgt already hit.
  void insert(Int src, Int tgt);

  std::optional<Int> image(Int src) const;
  std::optional<Int> preimage(Int tgt) const;
  bool defines(Int src) const { return fwd_.count(src) != 0; }
  bool hits(Int tgt) const { return rev_.count(tgt) != 0; }

  std::size_t size() const { return fwd_.size(); }
  bool empty() const { return fwd_.empty(); }

  PartialInjection inverted() const;

  const std::map<Int, Int>& pairs() const { return fwd_; }          // keyed by source
  const std::map<Int, Int>& inverse_pairs() const { return rev_; }  // keyed by target

  bool operator==(const PartialInjection& other) const { return fwd_ == other.fwd_; }

 private:
  std::map<Int, Int> fwd_;
  std::map<Int, Int> rev_;
};

// Total permutation of Z with a finite description: either the shift
// a -> a + s, or a finite exception table plus its canonical completion.
//
// Completion rule for a table T: enumerate D = Z \ dom(T) in increasing
// order as ..., d(-1), d(0), d(1), ... where d(0) is the least element of D
// that is >= 0; enumerate C = Z \ codom(T) the same way; map d(k) -> c(k).
// The rule is self-inverse under table inversion and is the identity on the
// empty table.
class FinPerm {
 public:
  static FinPerm shift(Int amount);
  static FinPerm table(PartialInjection t);

  bool is_shift() const { return kind_ == Kind::Shift; }
  Int shift_amount() const;                    // shift variant only
  const PartialInjection& table_data() const;  // table variant only

  Int apply(Int a) const;
  Int apply_inverse(Int a) const;  // same as inverted().apply(a), no copy
  FinPerm inverted() const;

  // Structural equality (a completed table is never == a shift, even when
  // they agree pointwise).
  bool operator==(const FinPerm& other) const;

 private:
  enum class Kind { Shift, Table };
  FinPerm() = default;

  Kind kind_ = Kind::Shift;
  Int shift_ = 0;
  PartialInjection table_;
  std::vector<Int> dom_;        // sorted sources
  std::vector<Int> dom_img_;    // targets aligned with dom_
  std::vector<Int> codom_;      // sorted targets
  std::vector<Int> codom_src_;  // sources aligned with codom_
};

// Operation-style helpers.
inline Int apply(const FinPerm& p, Int a) { return p.apply(a); }
inline FinPerm invert(const FinPerm& p) { return p.inverted(); }
FinPerm complete(const PartialInjection& partial);

}  // namespace hitrans
