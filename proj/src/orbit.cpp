#include "hitrans/orbit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace hitrans {

Int OrbitReport::max_length() const {
  if (orbit_lengths.empty()) return 0;
  return orbit_lengths.back();
}

OrbitReport orbit_structure(const Word& w, const GeneratorAssignment& assign,
                            const Window& win, Int cap) {
  if (cap < 1) throw std::invalid_argument("orbit_structure: cap must be positive");
  OrbitReport report;
  std::set<Int> covered;  // window points already on a reported orbit
  for (Int a = -win.radius(); a <= win.radius(); ++a) {
    if (covered.count(a)) continue;
    Int b = a;
    Int length = 0;
    bool closed = false;
    while (length < cap) {
      b = evaluate(w, assign, b);
      ++length;
      if (b == a) {
        closed = true;
        break;
      }
    }
    if (!closed) {
      report.truncated.push_back(a);
      continue;
    }
    OrbitInfo info;
    info.length = length;
    info.representative = a;
    // second pass marks the window points the cycle covers
    b = a;
    for (Int i = 0; i < length; ++i) {
      if (win.contains(b)) {
        covered.insert(b);
        ++info.window_points;
      }
      b = evaluate(w, assign, b);
    }
    report.orbit_lengths.push_back(length);
    report.details.push_back(info);
  }
  std::sort(report.orbit_lengths.begin(), report.orbit_lengths.end());
  return report;
}

Int window_fixing_power(const Word& w, const GeneratorAssignment& assign,
                        const Window& win, Int cap) {
  OrbitReport report = orbit_structure(w, assign, win, cap);
  if (!report.all_finite())
    throw OrbitExceedsCap("window_fixing_power: orbit through " +
                          std::to_string(report.truncated.front()) +
                          " did not close within cap");
  Int m = 1;
  for (Int len : report.orbit_lengths) {
    Int g = std::gcd(m, len);
    if (m / g > std::numeric_limits<Int>::max() / len)
      throw std::overflow_error("window_fixing_power: lcm overflow");
    m = (m / g) * len;
  }
  return m;
}

}  // namespace hitrans
