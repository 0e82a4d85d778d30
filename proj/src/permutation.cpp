#include "hitrans/permutation.hpp"

#include <algorithm>

namespace hitrans {

std::vector<Int> Window::points() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Int a = -radius_; a <= radius_; ++a) out.push_back(a);
  return out;
}

PartialInjection PartialInjection::from_pairs(const std::vector<std::pair<Int, Int>>& pairs) {
  PartialInjection t;
  for (const auto& [src, tgt] : pairs) t.insert(src, tgt);
  return t;
}

void PartialInjection::insert(Int src, Int tgt) {
  if (fwd_.count(src))
    throw std::invalid_argument("PartialInjection: source already defined");
  if (rev_.count(tgt))
    throw std::invalid_argument("PartialInjection: target already hit");
  fwd_.emplace(src, tgt);
  rev_.emplace(tgt, src);
}

std::optional<Int> PartialInjection::image(Int src) const {
  auto it = fwd_.find(src);
  if (it == fwd_.end()) return std::nullopt;
  return it->second;
}

std::optional<Int> PartialInjection::preimage(Int tgt) const {
  auto it = rev_.find(tgt);
  if (it == rev_.end()) return std::nullopt;
  return it->second;
}

PartialInjection PartialInjection::inverted() const {
  PartialInjection t;
  t.fwd_ = rev_;
  t.rev_ = fwd_;
  return t;
}

namespace {

// Anchored index of a within Z \ excluded: index 0 sits at the least
// non-excluded integer >= 0 and indices follow the increasing enumeration.
Int free_index(const std::vector<Int>& excluded, Int a) {
  if (a >= 0) {
    auto lo = std::lower_bound(excluded.begin(), excluded.end(), Int{0});
    auto hi = std::lower_bound(excluded.begin(), excluded.end(), a);
    return a - (hi - lo);
  }
  auto lo = std::lower_bound(excluded.begin(), excluded.end(), a);
  auto hi = std::lower_bound(excluded.begin(), excluded.end(), Int{0});
  return a + (hi - lo);
}

// Inverse of free_index: the non-excluded integer at anchored index k.
Int free_at(const std::vector<Int>& excluded, Int k) {
  if (k >= 0) {
    Int c = k;
    for (;;) {
      auto lo = std::lower_bound(excluded.begin(), excluded.end(), Int{0});
      auto hi = std::upper_bound(excluded.begin(), excluded.end(), c);
      Int cnt = hi > lo ? static_cast<Int>(hi - lo) : 0;
      Int next = k + cnt;
      if (next == c) return c;
      c = next;
    }
  }
  Int c = k;
  for (;;) {
    auto lo = std::lower_bound(excluded.begin(), excluded.end(), c);
    auto hi = std::lower_bound(excluded.begin(), excluded.end(), Int{0});
    Int cnt = hi > lo ? static_cast<Int>(hi - lo) : 0;
    Int next = k - cnt;
    if (next == c) return c;
    c = next;
  }
}

}  // namespace

FinPerm FinPerm::shift(Int amount) {
  FinPerm p;
  p.kind_ = Kind::Shift;
  p.shift_ = amount;
  return p;
}

FinPerm FinPerm::table(PartialInjection t) {
  FinPerm p;
  p.kind_ = Kind::Table;
  p.table_ = std::move(t);
  p.dom_.reserve(p.table_.size());
  p.dom_img_.reserve(p.table_.size());
  for (const auto& [src, tgt] : p.table_.pairs()) {
    p.dom_.push_back(src);
    p.dom_img_.push_back(tgt);
  }
  p.codom_.reserve(p.table_.size());
  p.codom_src_.reserve(p.table_.size());
  for (const auto& [tgt, src] : p.table_.inverse_pairs()) {
    p.codom_.push_back(tgt);
    p.codom_src_.push_back(src);
  }
  return p;
}

Int FinPerm::shift_amount() const {
  if (kind_ != Kind::Shift) throw std::logic_error("FinPerm: not a shift");
  return shift_;
}

const PartialInjection& FinPerm::table_data() const {
  if (kind_ != Kind::Table) throw std::logic_error("FinPerm: not a table");
  return table_;
}

Int FinPerm::apply(Int a) const {
  if (kind_ == Kind::Shift) return a + shift_;
  auto it = std::lower_bound(dom_.begin(), dom_.end(), a);
  if (it != dom_.end() && *it == a) return dom_img_[it - dom_.begin()];
  return free_at(codom_, free_index(dom_, a));
}

Int FinPerm::apply_inverse(Int a) const {
  if (kind_ == Kind::Shift) return a - shift_;
  auto it = std::lower_bound(codom_.begin(), codom_.end(), a);
  if (it != codom_.end() && *it == a) return codom_src_[it - codom_.begin()];
  // the anchored alignment is self-inverse, so invert the index arithmetic
  return free_at(dom_, free_index(codom_, a));
}

FinPerm FinPerm::inverted() const {
  if (kind_ == Kind::Shift) return shift(-shift_);
  return table(table_.inverted());
}

bool FinPerm::operator==(const FinPerm& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Shift) return shift_ == other.shift_;
  return table_ == other.table_;
}

FinPerm complete(const PartialInjection& partial) { return FinPerm::table(partial); }

}  // namespace hitrans
