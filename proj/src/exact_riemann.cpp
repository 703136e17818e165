#include "hydro/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hydro/errors.hpp"

namespace hydro {

namespace {

struct Side {
  double rho, u, p, c;
};

Side make_side(const PrimitiveState& w, const GasModel& m,
               const char* which) {
  if (!(w.rho > 0.0)) throw PositivityError("rho", which);
  if (!(w.pres > 0.0)) throw PositivityError("pres", which);
  return {w.rho, w.vel_a, w.pres, std::sqrt(m.gamma * w.pres / w.rho)};
}

// f_K(p): velocity change across the left or right wave as a function of
// the star pressure.  Shock branch for p > p_K, rarefaction otherwise.
double side_fn(double p, const Side& s, double gamma) {
  if (p > s.p) {
    const double a = 2.0 / ((gamma + 1.0) * s.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
    return (p - s.p) * std::sqrt(a / (p + b));
  }
  return 2.0 * s.c / (gamma - 1.0) *
         (std::pow(p / s.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

double side_fn_deriv(double p, const Side& s, double gamma) {
  if (p > s.p) {
    const double a = 2.0 / ((gamma + 1.0) * s.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(a / (p + b));
    return root * (1.0 - 0.5 * (p - s.p) / (p + b));
  }
  return 1.0 / (s.rho * s.c) *
         std::pow(p / s.p, -(gamma + 1.0) / (2.0 * gamma));
}

double pressure_fn(double p, const Side& l, const Side& r, double du,
                   double gamma) {
  return side_fn(p, l, gamma) + side_fn(p, r, gamma) + du;
}

void require_no_vacuum(const Side& l, const Side& r, double du,
                       double gamma) {
  // Vacuum forms when the rarefactions cannot absorb the velocity jump.
  if (2.0 * (l.c + r.c) / (gamma - 1.0) <= du) {
    throw Error(ErrorCategory::Validation,
                "vacuum-generating Riemann states are out of scope");
  }
}

// When the root lies at or below both initial pressures, both waves are
// rarefactions and the pressure equation has a closed-form solution.
double two_rarefaction_root(const Side& l, const Side& r, double du,
                            double gamma) {
  const double z = (gamma - 1.0) / (2.0 * gamma);
  const double numer = l.c + r.c - 0.5 * (gamma - 1.0) * du;
  const double denom = l.c / std::pow(l.p, z) + r.c / std::pow(r.p, z);
  return std::pow(numer / denom, 1.0 / z);
}

// Primitive-variable linearization, used only as a Newton starting point.
double initial_guess(const Side& l, const Side& r, double du) {
  return 0.5 * (l.p + r.p) - 0.125 * du * (l.rho + r.rho) * (l.c + r.c);
}

// The pressure function is monotone increasing and concave (f'' < 0 on
// both branches), which makes unsafeguarded Newton safe: a step taken at
// f > 0 lands at or below the root, and every step taken at f <= 0 stays
// below it and moves up.  The iteration is monotone after the first step.
double newton_root(const Side& l, const Side& r, double du, double gamma,
                   double p_start, double p_floor, int* iterations_out) {
  double p = std::max(p_start, p_floor);
  int iterations = 0;
  for (; iterations < 100; ++iterations) {
    const double f = pressure_fn(p, l, r, du, gamma);
    const double df = side_fn_deriv(p, l, gamma) + side_fn_deriv(p, r, gamma);
    double next = p - f / df;
    if (next < p_floor) next = p_floor;  // possible only on the first step
    const double change = std::abs(next - p);
    p = next;
    if (change <= 1.0e-14 * p) break;
  }
  if (iterations_out) *iterations_out = iterations;
  return p;
}

}  // namespace

double riemann_pstar_bisect(const PrimitiveState& left,
                            const PrimitiveState& right,
                            const GasModel& model) {
  const Side l = make_side(left, model, "left state");
  const Side r = make_side(right, model, "right state");
  const double du = right.vel_a - left.vel_a;
  const double g = model.gamma;
  require_no_vacuum(l, r, du, g);

  // Establish a sign change around the root.  f is negative as p -> 0
  // (vacuum excluded) and grows without bound, so both loops terminate.
  double lo = std::min(l.p, r.p);
  double hi = std::max(l.p, r.p);
  if (pressure_fn(lo, l, r, du, g) >= 0.0) {
    hi = lo;
    while (pressure_fn(lo, l, r, du, g) >= 0.0) {
      lo *= 0.5;
      if (lo < 1.0e-300) {
        throw Error(ErrorCategory::Validation,
                    "bisection found no lower bracket for p*");
      }
    }
  } else {
    while (pressure_fn(hi, l, r, du, g) < 0.0) hi *= 2.0;
  }

  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pressure_fn(mid, l, r, du, g) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1.0e-14 * hi) break;
  }
  return 0.5 * (lo + hi);
}

WaveStructure exact_riemann(const PrimitiveState& left,
                            const PrimitiveState& right,
                            const GasModel& model) {
  const Side l = make_side(left, model, "left state");
  const Side r = make_side(right, model, "right state");
  const double du = right.vel_a - left.vel_a;
  const double g = model.gamma;
  require_no_vacuum(l, r, du, g);

  const double p_min = std::min(l.p, r.p);
  double p;
  int iterations = 0;
  if (pressure_fn(p_min, l, r, du, g) >= 0.0) {
    // Root at or below both pressures: both waves are rarefactions and the
    // pressure equation is solvable in closed form.
    p = two_rarefaction_root(l, r, du, g);
  } else {
    // Root above p_min, where f(p_min) < 0 makes p_min a valid floor.
    p = newton_root(l, r, du, g, initial_guess(l, r, du), p_min, &iterations);
  }

  const double residual = pressure_fn(p, l, r, du, g);
  const double scale = std::abs(side_fn(p, l, g)) +
                       std::abs(side_fn(p, r, g)) + std::abs(du) + l.c + r.c;
  if (!(std::abs(residual) <= 1.0e-12 * scale)) {
    throw Error(ErrorCategory::Validation,
                "exact Riemann solver failed to converge, residual " +
                    std::to_string(residual));
  }

  WaveStructure ws{};
  ws.p_star = p;
  ws.iterations = iterations;
  ws.u_star =
      0.5 * (left.vel_a + right.vel_a) + 0.5 * (side_fn(p, r, g) - side_fn(p, l, g));

  const double gm = (g - 1.0) / (g + 1.0);
  if (p > l.p) {  // left shock
    ws.left.type = WaveType::Shock;
    const double ratio = p / l.p;
    ws.left.head = l.u - l.c * std::sqrt((g + 1.0) / (2.0 * g) * ratio +
                                         (g - 1.0) / (2.0 * g));
    ws.left.tail = ws.left.head;
    ws.rho_star_left = l.rho * (ratio + gm) / (gm * ratio + 1.0);
  } else {  // left rarefaction
    ws.left.type = WaveType::Rarefaction;
    const double c_star = l.c * std::pow(p / l.p, (g - 1.0) / (2.0 * g));
    ws.left.head = l.u - l.c;
    ws.left.tail = ws.u_star - c_star;
    ws.rho_star_left = l.rho * std::pow(p / l.p, 1.0 / g);
  }
  if (p > r.p) {  // right shock
    ws.right.type = WaveType::Shock;
    const double ratio = p / r.p;
    ws.right.head = r.u + r.c * std::sqrt((g + 1.0) / (2.0 * g) * ratio +
                                          (g - 1.0) / (2.0 * g));
    ws.right.tail = ws.right.head;
    ws.rho_star_right = r.rho * (ratio + gm) / (gm * ratio + 1.0);
  } else {  // right rarefaction
    ws.right.type = WaveType::Rarefaction;
    const double c_star = r.c * std::pow(p / r.p, (g - 1.0) / (2.0 * g));
    ws.right.head = r.u + r.c;
    ws.right.tail = ws.u_star + c_star;
    ws.rho_star_right = r.rho * std::pow(p / r.p, 1.0 / g);
  }
  return ws;
}

PrimitiveState sample_riemann(const WaveStructure& ws,
                              const PrimitiveState& left,
                              const PrimitiveState& right, double xi,
                              const GasModel& model) {
  const double g = model.gamma;

  if (xi <= ws.u_star) {
    const Side l = make_side(left, model, "left state");
    if (ws.left.type == WaveType::Shock) {
      if (xi <= ws.left.head) return left;
      return {ws.rho_star_left, ws.u_star, left.vel_b, ws.p_star};
    }
    if (xi <= ws.left.head) return left;
    if (xi >= ws.left.tail)
      return {ws.rho_star_left, ws.u_star, left.vel_b, ws.p_star};
    // inside the left fan
    const double u = 2.0 / (g + 1.0) * (l.c + 0.5 * (g - 1.0) * l.u + xi);
    const double c = 2.0 / (g + 1.0) * (l.c + 0.5 * (g - 1.0) * (l.u - xi));
    const double rho = l.rho * std::pow(c / l.c, 2.0 / (g - 1.0));
    const double p = l.p * std::pow(c / l.c, 2.0 * g / (g - 1.0));
    return {rho, u, left.vel_b, p};
  }

  const Side r = make_side(right, model, "right state");
  if (ws.right.type == WaveType::Shock) {
    if (xi >= ws.right.head) return right;
    return {ws.rho_star_right, ws.u_star, right.vel_b, ws.p_star};
  }
  if (xi >= ws.right.head) return right;
  if (xi <= ws.right.tail)
    return {ws.rho_star_right, ws.u_star, right.vel_b, ws.p_star};
  // inside the right fan
  const double u = 2.0 / (g + 1.0) * (-r.c + 0.5 * (g - 1.0) * r.u + xi);
  const double c = 2.0 / (g + 1.0) * (r.c - 0.5 * (g - 1.0) * (r.u - xi));
  const double rho = r.rho * std::pow(c / r.c, 2.0 / (g - 1.0));
  const double p = r.p * std::pow(c / r.c, 2.0 * g / (g - 1.0));
  return {rho, u, right.vel_b, p};
}

}  // namespace hydro
