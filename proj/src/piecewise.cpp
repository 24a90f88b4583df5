#include "stlw/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stlw {

PiecewiseFn::PiecewiseFn(std::vector<PiecewisePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("piecewise: no pieces");
  m_ = int(pieces_[0].coeffs.rows());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].hi <= pieces_[i].lo) throw std::invalid_argument("piecewise: empty piece");
    if (i > 0 && pieces_[i].lo != pieces_[i - 1].hi)
      throw std::invalid_argument("piecewise: pieces must be contiguous");
    if (int(pieces_[i].coeffs.rows()) != m_)
      throw std::invalid_argument("piecewise: inconsistent dimension");
  }
}

std::vector<double> PiecewiseFn::breakpoints() const {
  std::vector<double> bp;
  bp.push_back(pieces_.front().lo);
  for (const auto& p : pieces_) bp.push_back(p.hi);
  return bp;
}

State PiecewiseFn::eval_piece(const PiecewisePiece& p, double x) const {
  const double s = x - p.lo;
  State v = State::Zero(m_);
  for (int k = int(p.coeffs.cols()) - 1; k >= 0; --k) v = v * s + p.coeffs.col(k);
  return v;
}

State PiecewiseFn::eval(double x) const {
  const double lo_cov = pieces_.front().lo;
  const double hi_cov = pieces_.back().hi;
  if (x <= lo_cov) return eval_piece(pieces_.front(), lo_cov);
  if (x >= hi_cov) return eval_piece(pieces_.back(), hi_cov);
  for (const auto& p : pieces_)
    if (x < p.hi) return eval_piece(p, x);
  return eval_piece(pieces_.back(), x);
}

State PiecewiseFn::integral(double a, double b) const {
  if (b < a) return -integral(b, a);
  State acc = State::Zero(m_);
  const double lo_cov = pieces_.front().lo;
  const double hi_cov = pieces_.back().hi;
  if (a < lo_cov) acc += (std::min(b, lo_cov) - a) * eval(lo_cov);
  if (b > hi_cov) acc += (b - std::max(a, hi_cov)) * eval(hi_cov);
  for (const auto& p : pieces_) {
    const double lo = std::max(a, p.lo);
    const double hi = std::min(b, p.hi);
    if (hi <= lo) continue;
    const double s0 = lo - p.lo, s1 = hi - p.lo;
    double pw0 = s0, pw1 = s1;
    for (int k = 0; k < int(p.coeffs.cols()); ++k) {
      acc += p.coeffs.col(k) * ((pw1 - pw0) / double(k + 1));
      pw0 *= s0;
      pw1 *= s1;
    }
  }
  return acc;
}

namespace {

// exact integral of |c0 + c1 s| for s in [s0, s1]
double abs_linear_integral(double c0, double c1, double s0, double s1) {
  auto prim = [&](double s) { return c0 * s + 0.5 * c1 * s * s; };
  auto segment = [&](double a, double b) {
    const double v = prim(b) - prim(a);
    return std::abs(v);
  };
  if (c1 == 0.0) return std::abs(c0) * (s1 - s0);
  const double root = -c0 / c1;
  if (root <= s0 || root >= s1) return segment(s0, s1);
  return segment(s0, root) + segment(root, s1);
}

}  // namespace

double PiecewiseFn::abs_shift_integral(double a, double b, double shift) const {
  if (m_ != 1) throw std::invalid_argument("abs_shift_integral: scalar data only");
  if (b < a) return -abs_shift_integral(b, a, shift);
  double acc = 0.0;
  const double lo_cov = pieces_.front().lo;
  const double hi_cov = pieces_.back().hi;
  if (a < lo_cov) acc += (std::min(b, lo_cov) - a) * std::abs(eval(lo_cov)[0] - shift);
  if (b > hi_cov) acc += (b - std::max(a, hi_cov)) * std::abs(eval(hi_cov)[0] - shift);
  for (const auto& p : pieces_) {
    if (p.coeffs.cols() > 2)
      throw std::invalid_argument("abs_shift_integral: degree must be <= 1");
    const double lo = std::max(a, p.lo);
    const double hi = std::min(b, p.hi);
    if (hi <= lo) continue;
    const double c0 = p.coeffs(0, 0) - shift;
    const double c1 = p.coeffs.cols() > 1 ? p.coeffs(0, 1) : 0.0;
    acc += abs_linear_integral(c0, c1, lo - p.lo, hi - p.lo);
  }
  return acc;
}

double PiecewiseFn::l1_norm() const {
  return abs_shift_integral(pieces_.front().lo, pieces_.back().hi, 0.0);
}

namespace {

PiecewisePiece const_piece(double lo, double hi, const State& v) {
  PiecewisePiece p;
  p.lo = lo;
  p.hi = hi;
  p.coeffs = v;
  return p;
}

}  // namespace

PiecewiseFn pw_constant(const State& c, double x_lo, double x_hi) {
  return PiecewiseFn({const_piece(x_lo, x_hi, c)});
}

PiecewiseFn pw_constant(double c, double x_lo, double x_hi) {
  State v(1);
  v << c;
  return pw_constant(v, x_lo, x_hi);
}

PiecewiseFn pw_indicator(double a, double b, double x_lo, double x_hi) {
  if (!(x_lo < a && a < b && b < x_hi))
    throw std::invalid_argument("pw_indicator: need x_lo < a < b < x_hi");
  State zero(1), one(1);
  zero << 0.0;
  one << 1.0;
  return PiecewiseFn(
      {const_piece(x_lo, a, zero), const_piece(a, b, one), const_piece(b, x_hi, zero)});
}

PiecewiseFn pw_riemann(double uL, double uR, double x0, double x_lo, double x_hi) {
  if (!(x_lo < x0 && x0 < x_hi)) throw std::invalid_argument("pw_riemann: x0 must be interior");
  State l(1), r(1);
  l << uL;
  r << uR;
  return PiecewiseFn({const_piece(x_lo, x0, l), const_piece(x0, x_hi, r)});
}

PiecewiseFn pw_ramp(double a, double va, double b, double vb, double x_lo, double x_hi) {
  if (!(x_lo < a && a < b && b < x_hi)) throw std::invalid_argument("pw_ramp: bad interval");
  State cl(1), cr(1);
  cl << va;
  cr << vb;
  PiecewisePiece mid;
  mid.lo = a;
  mid.hi = b;
  mid.coeffs.resize(1, 2);
  mid.coeffs(0, 0) = va;
  mid.coeffs(0, 1) = (vb - va) / (b - a);
  return PiecewiseFn({const_piece(x_lo, a, cl), mid, const_piece(b, x_hi, cr)});
}

}  // namespace stlw
