#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace stlw {

// Space-time point (t, x). Component 0 is time, component 1 is space.
using Vec2 = Eigen::Vector2d;

// State vector in R^m (m = 1 for scalar laws).
using State = Eigen::VectorXd;

// One column of values per cell, m rows.
using StateMatrix = Eigen::MatrixXd;

inline constexpr int kExterior = -1;  // cell-id sentinel for the domain boundary

// Deterministic 64-bit mix, used wherever seeded pseudo-randomness is needed.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Compensated (Kahan) accumulator for reproducible reductions.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace stlw
