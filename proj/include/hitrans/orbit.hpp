#pragma once

#include "hitrans/words.hpp"

namespace hitrans {

struct OrbitExceedsCap : std::runtime_error {
  explicit OrbitExceedsCap(const std::string& what) : std::runtime_error(what) {}
};

struct OrbitInfo {
  Int length = 0;
  Int representative = 0;  // least window point on the orbit
  Int window_points = 0;   // how many window points the orbit covers
};

struct OrbitReport {
  std::vector<Int> orbit_lengths;  // ascending, one entry per reported orbit
  std::vector<Int> truncated;      // window points whose orbit exceeded the cap
  std::vector<OrbitInfo> details;  // discovery order

  bool all_finite() const { return truncated.empty(); }
  Int max_length() const;
};

// Orbit structure of <w> restricted to the window: for each window point not
// yet covered, iterate a, a^w, a^(w^2), ... until return or cap.
OrbitReport orbit_structure(const Word& w, const GeneratorAssignment& assign,
                            const Window& win, Int cap = 1000000);

// Least positive m (lcm of the lengths of orbits meeting the window) such
// that w^m fixes the window pointwise. Throws OrbitExceedsCap when an orbit
// through the window does not close within cap.
Int window_fixing_power(const Word& w, const GeneratorAssignment& assign,
                        const Window& win, Int cap = 1000000);

}  // namespace hitrans
