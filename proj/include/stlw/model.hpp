#pragma once

#include "stlw/types.hpp"

#include <memory>
#include <string>

namespace stlw {

// Conservation law in divergence form: d/dt u + d/dx f(u, y) = p(u, y),
// with admissible box P and an optional flux Jacobian for CFL estimates.
struct PhysicalModel {
  std::string name;
  int m = 1;
  std::function<State(const State&, const Vec2&)> flux;
  std::function<State(const State&, const Vec2&)> source;  // nullptr-like when zero
  State box_lo, box_hi;                                    // admissible set P
  std::function<Eigen::MatrixXd(const State&, const Vec2&)> dflux_du;
  bool zero_flux = false;
  bool zero_source = true;
  bool homogeneous = true;  // flux independent of y

  bool admissible(const State& u) const {
    for (int i = 0; i < m; ++i)
      if (!(u[i] >= box_lo[i] && u[i] <= box_hi[i])) return false;
    return true;
  }

  // max spectral radius of df/du over sampled admissible states
  double max_wave_speed(int samples = 33) const;
};

PhysicalModel make_burgers(double box = 2.0);
PhysicalModel make_advection(double c, double box = 2.0);
PhysicalModel make_trivial(double box = 2.0);
// Similarity-coordinate form of a scalar law: flux f(u) - xi u, source -d u.
PhysicalModel make_selfsimilar_burgers(int dim = 1, double box = 2.0);

PhysicalModel make_model(const std::string& kind, double param = 0.0);

// Entropy / entropy-flux pair with the inequality right-hand side g.
struct EntropyPair {
  std::string name;
  std::function<double(const State&, const Vec2&)> eta0;  // strictly convex in u
  std::function<double(const State&, const Vec2&)> eta1;
  std::function<double(const State&, const Vec2&)> g;
  bool has_kink = false;
  double kink_u = 0.0;  // Kruzkov parameter a
};

// Kruzkov family |u - a| with flux sgn(u - a)(f(u) - f(a)); scalar models.
EntropyPair kruzkov_pair(const PhysicalModel& model, double a);

// Finite-difference check of d(eta1)/du == eta0' df/du at sampled states,
// skipping a neighbourhood of the Kruzkov kink. Returns the max relative defect.
double entropy_compatibility_defect(const EntropyPair& pair, const PhysicalModel& model,
                                    int samples = 9);

}  // namespace stlw
