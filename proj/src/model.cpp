#include "stlw/model.hpp"

#include <cmath>
#include <stdexcept>

namespace stlw {

double PhysicalModel::max_wave_speed(int samples) const {
  if (!dflux_du) throw std::runtime_error("model '" + name + "' has no flux Jacobian");
  double speed = 0.0;
  const Vec2 origin(0.0, 0.0);
  for (int i = 0; i < samples; ++i) {
    const double s = samples == 1 ? 0.5 : double(i) / (samples - 1);
    State u = box_lo + s * (box_hi - box_lo);
    const Eigen::MatrixXd J = dflux_du(u, origin);
    const auto ev = J.eigenvalues();
    for (int k = 0; k < ev.size(); ++k) speed = std::max(speed, std::abs(ev[k]));
  }
  return speed;
}

namespace {

PhysicalModel scalar_base(const std::string& name, double box) {
  PhysicalModel m;
  m.name = name;
  m.m = 1;
  m.box_lo = State::Constant(1, -box);
  m.box_hi = State::Constant(1, box);
  m.source = nullptr;
  return m;
}

}  // namespace

PhysicalModel make_burgers(double box) {
  PhysicalModel m = scalar_base("burgers", box);
  m.flux = [](const State& u, const Vec2&) {
    State f(1);
    f[0] = 0.5 * u[0] * u[0];
    return f;
  };
  m.dflux_du = [](const State& u, const Vec2&) {
    Eigen::MatrixXd J(1, 1);
    J(0, 0) = u[0];
    return J;
  };
  return m;
}

PhysicalModel make_advection(double c, double box) {
  PhysicalModel m = scalar_base("advection", box);
  m.flux = [c](const State& u, const Vec2&) { return State(c * u); };
  m.dflux_du = [c](const State&, const Vec2&) {
    Eigen::MatrixXd J(1, 1);
    J(0, 0) = c;
    return J;
  };
  return m;
}

PhysicalModel make_trivial(double box) {
  PhysicalModel m = scalar_base("trivial", box);
  m.flux = [](const State& u, const Vec2&) { return State(State::Zero(u.size())); };
  m.dflux_du = [](const State&, const Vec2&) { return Eigen::MatrixXd::Zero(1, 1); };
  m.zero_flux = true;
  return m;
}

PhysicalModel make_selfsimilar_burgers(int dim, double box) {
  PhysicalModel m = scalar_base("selfsimilar_burgers", box);
  m.flux = [](const State& u, const Vec2& y) {
    State f(1);
    f[0] = 0.5 * u[0] * u[0] - y[1] * u[0];
    return f;
  };
  m.dflux_du = [](const State& u, const Vec2& y) {
    Eigen::MatrixXd J(1, 1);
    J(0, 0) = u[0] - y[1];
    return J;
  };
  m.source = [dim](const State& u, const Vec2&) { return State(-double(dim) * u); };
  m.zero_source = false;
  m.homogeneous = false;
  return m;
}

PhysicalModel make_model(const std::string& kind, double param) {
  if (kind == "burgers") return make_burgers();
  if (kind == "advection") return make_advection(param);
  if (kind == "trivial") return make_trivial();
  if (kind == "selfsimilar") return make_selfsimilar_burgers(param > 0 ? int(param) : 1);
  throw std::invalid_argument("unknown model kind: " + kind);
}

EntropyPair kruzkov_pair(const PhysicalModel& model, double a) {
  if (model.m != 1) throw std::invalid_argument("kruzkov_pair: scalar models only");
  EntropyPair p;
  p.name = "kruzkov(a=" + std::to_string(a) + ")";
  p.has_kink = true;
  p.kink_u = a;
  auto flux = model.flux;
  p.eta0 = [a](const State& u, const Vec2&) { return std::abs(u[0] - a); };
  p.eta1 = [a, flux](const State& u, const Vec2& y) {
    State ua = State::Constant(1, a);
    const double sgn = u[0] > a ? 1.0 : (u[0] < a ? -1.0 : 0.0);
    return sgn * (flux(u, y)[0] - flux(ua, y)[0]);
  };
  auto source = model.source;
  p.g = [a, source](const State& u, const Vec2& y) {
    if (!source) return 0.0;
    const double sgn = u[0] > a ? 1.0 : (u[0] < a ? -1.0 : 0.0);
    return sgn * source(u, y)[0];
  };
  return p;
}

double entropy_compatibility_defect(const EntropyPair& pair, const PhysicalModel& model,
                                    int samples) {
  const Vec2 y(0.1, 0.2);
  const double eps = 1e-6;
  double defect = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = double(i + 1) / (samples + 1);
    State u = model.box_lo + s * (model.box_hi - model.box_lo);
    if (pair.has_kink && std::abs(u[0] - pair.kink_u) < 1e-2) continue;
    State up = u, um = u;
    up[0] += eps;
    um[0] -= eps;
    const double deta1 = (pair.eta1(up, y) - pair.eta1(um, y)) / (2 * eps);
    const double deta0 = (pair.eta0(up, y) - pair.eta0(um, y)) / (2 * eps);
    const double dfdu = model.dflux_du(u, y)(0, 0);
    const double lhs = deta1;
    const double rhs = deta0 * dfdu;
    defect = std::max(defect, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return defect;
}

}  // namespace stlw
