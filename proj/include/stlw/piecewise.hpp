#pragma once

#include "stlw/types.hpp"

#include <vector>

namespace stlw {

// One polynomial piece on [lo, hi]: value(x) = sum_k coeffs.col(k) (x - lo)^k,
// coeffs is m x (deg+1).
struct PiecewisePiece {
  double lo = 0.0;
  double hi = 0.0;
  StateMatrix coeffs;
};

// Piecewise-polynomial data of x with explicit breakpoints. Outside the
// covered interval the value extends as the constant end value, so cell
// averaging near the lateral closure stays well defined.
class PiecewiseFn {
 public:
  PiecewiseFn() = default;
  explicit PiecewiseFn(std::vector<PiecewisePiece> pieces);

  int m() const { return m_; }
  const std::vector<PiecewisePiece>& pieces() const { return pieces_; }
  std::vector<double> breakpoints() const;

  State eval(double x) const;

  // Exact integral over [a, b] (breakpoint splitting, polynomial antiderivatives).
  State integral(double a, double b) const;

  // Exact integral of |u(x) - shift| over [a, b]; pieces must have degree <= 1.
  // Scalar data only.
  double abs_shift_integral(double a, double b, double shift) const;

  // L1 norm over the covered interval (degree <= 1, scalar).
  double l1_norm() const;

 private:
  State eval_piece(const PiecewisePiece& p, double x) const;

  std::vector<PiecewisePiece> pieces_;
  int m_ = 0;
};

// Factories for the test corpus. All produce pieces covering [x_lo, x_hi].
PiecewiseFn pw_constant(const State& c, double x_lo, double x_hi);
PiecewiseFn pw_constant(double c, double x_lo, double x_hi);
// indicator of [a, b]
PiecewiseFn pw_indicator(double a, double b, double x_lo, double x_hi);
// two-state Riemann data: uL for x < x0, uR for x > x0
PiecewiseFn pw_riemann(double uL, double uR, double x0, double x_lo, double x_hi);
// linear ramp from (a, va) to (b, vb), constant outside
PiecewiseFn pw_ramp(double a, double va, double b, double vb, double x_lo, double x_hi);

}  // namespace stlw
