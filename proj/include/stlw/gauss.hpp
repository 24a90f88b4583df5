#pragma once

#include <vector>

namespace stlw {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes/weights computed by Newton iteration on Legendre polynomials;
// cached per order, accurate to machine precision.
const GaussRule& gauss_legendre(int n);

// Quadrature controls shared by face/volume integrators. `refined()` doubles
// the subdivision counts so callers can measure quadrature sensitivity.
struct QuadratureSpec {
  int face_points = 5;     // Gauss points per face segment
  int face_segments = 4;   // composite segments per face
  int volume_subdiv = 1;   // triangle subdivision level for cell integrals
  int line_points = 16;    // Gauss points per 1D reference segment (L1 norms)

  QuadratureSpec refined() const {
    QuadratureSpec q = *this;
    q.face_segments *= 2;
    q.volume_subdiv *= 2;
    q.line_points = line_points;  // splitting handled by segment counts
    return q;
  }
};

// Composite Gauss integral of f over [a, b] with `segments` equal pieces.
template <typename F>
double integrate_segments(F&& f, double a, double b, int points, int segments) {
  const GaussRule& rule = gauss_legendre(points);
  double total = 0.0;
  const double w = (b - a) / segments;
  for (int s = 0; s < segments; ++s) {
    const double lo = a + s * w;
    const double mid = lo + 0.5 * w;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + 0.5 * w * rule.nodes[i]);
    total += 0.5 * w * acc;
  }
  return total;
}

}  // namespace stlw
