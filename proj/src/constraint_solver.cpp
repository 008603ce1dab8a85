#include "yb/constraint_solver.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/LevenbergMarquardt>

namespace yb {

namespace {

constexpr int kA = 0, kB = 1, kC = 2, kD = 3, kE = 4, kF = 5, kG = 6, kH = 7;

WirtingerValue from_jet(const HoloJet& j) {
  WirtingerValue w;
  w.value = j.v;
  for (int k = 0; k < 8; ++k) w.dz[k] = j.d(k);
  return w;
}

BasicEightVertexGate<HoloJet> jet_gate(const EightVertexGate& gate) {
  const auto v = entries(gate);
  std::array<HoloJet, 8> jets;
  for (int k = 0; k < 8; ++k) jets[k] = HoloJet::variable(v[k], k);
  return gate_from_entries(jets);
}

// |p|^2 + |q|^2 - 1
WirtingerValue unit_sum(const std::array<Complex, 8>& v, int p, int q) {
  WirtingerValue w;
  w.value = std::norm(v[p]) + std::norm(v[q]) - 1.0;
  w.dz[p] = std::conj(v[p]);
  w.dzbar[p] = v[p];
  w.dz[q] = std::conj(v[q]);
  w.dzbar[q] = v[q];
  return w;
}

// p conj(q) + r conj(s)
WirtingerValue cross_sum(const std::array<Complex, 8>& v, int p, int q, int r, int s) {
  WirtingerValue w;
  w.value = v[p] * std::conj(v[q]) + v[r] * std::conj(v[s]);
  w.dz[p] += std::conj(v[q]);
  w.dzbar[q] += v[p];
  w.dz[r] += std::conj(v[s]);
  w.dzbar[s] += v[r];
  return w;
}

void append_unitarity(const EightVertexGate& gate, std::vector<WirtingerValue>& out) {
  const auto v = entries(gate);
  out.push_back(unit_sum(v, kA, kB));
  out.push_back(unit_sum(v, kC, kD));
  out.push_back(unit_sum(v, kE, kF));
  out.push_back(unit_sum(v, kG, kH));
  out.push_back(cross_sum(v, kA, kG, kB, kH));
  out.push_back(cross_sum(v, kC, kE, kD, kF));
}

}  // namespace

std::vector<WirtingerValue> condition_values(ConditionSet set, const EightVertexGate& gate) {
  std::vector<WirtingerValue> out;
  const auto r = jet_gate(gate);
  if (set == ConditionSet::kCase4) {
    const HoloJet a2 = r.a * r.a, d2 = r.d * r.d, h2 = r.h * r.h;
    out.push_back(from_jet(a2 - d2 - (d2 - h2)));
    out.push_back(from_jet(d2 - h2 - (r.a * r.c - r.h * r.c)));
    out.push_back(from_jet(a2 + h2 - (d2 + d2)));
    out.push_back(from_jet(r.b * r.g - r.c * r.c));
    out.push_back(from_jet(r.e - r.d));
    out.push_back(from_jet(r.f - r.c));
  } else {
    for (const HoloJet& j : ybe_differences(r)) out.push_back(from_jet(j));
  }
  append_unitarity(gate, out);
  return out;
}

ConstraintSystem::ConstraintSystem(ConditionSet set, std::array<int, 8> binding)
    : set_(set), binding_(binding) {
  for (int b : binding_) {
    if (b < kPinnedZero) throw std::invalid_argument("ConstraintSystem: bad binding");
    unknowns_ = std::max(unknowns_, b + 1);
  }
  if (unknowns_ == 0) throw std::invalid_argument("ConstraintSystem: no unknowns");
}

ConstraintSystem& ConstraintSystem::with_modulus_floor(double floor, std::array<bool, 8> floored) {
  floor_ = floor;
  floored_ = floored;
  return *this;
}

int ConstraintSystem::values() const {
  const int conditions = set_ == ConditionSet::kCase4 ? 6 + kUnitarityConditionCount
                                                      : kYbeConditionCount + kUnitarityConditionCount;
  const int floors = floor_ > 0.0 ? static_cast<int>(std::count(floored_.begin(), floored_.end(), true)) : 0;
  return 2 * conditions + floors;
}

EightVertexGate ConstraintSystem::gate(const Eigen::VectorXd& params) const {
  std::array<Complex, 8> v{};
  for (int k = 0; k < 8; ++k) {
    const int u = binding_[k];
    if (u != kPinnedZero) v[k] = Complex(params(2 * u), params(2 * u + 1));
  }
  return gate_from_entries(v);
}

namespace {

// Hinge floor - |z|, active only below the floor.
WirtingerValue floor_penalty(Complex z, int k, double floor) {
  WirtingerValue w;
  const double mod = std::abs(z);
  if (mod >= floor) return w;
  w.value = floor - mod;
  if (mod > 0.0) {
    w.dz[k] = -std::conj(z) / (2.0 * mod);
    w.dzbar[k] = -z / (2.0 * mod);
  } else {
    w.dz[k] = w.dzbar[k] = -0.5;
  }
  return w;
}

}  // namespace

Eigen::VectorXd ConstraintSystem::residuals(const Eigen::VectorXd& params) const {
  const EightVertexGate g = gate(params);
  const auto conds = condition_values(set_, g);
  Eigen::VectorXd out(values());
  int row = 0;
  for (const auto& c : conds) {
    out(row++) = c.value.real();
    out(row++) = c.value.imag();
  }
  if (floor_ > 0.0) {
    const auto v = entries(g);
    for (int k = 0; k < 8; ++k) {
      if (floored_[k]) out(row++) = floor_penalty(v[k], k, floor_).value.real();
    }
  }
  return out;
}

Eigen::MatrixXd ConstraintSystem::jacobian(const Eigen::VectorXd& params) const {
  const EightVertexGate g = gate(params);
  std::vector<WirtingerValue> rows = condition_values(set_, g);
  const std::size_t complex_rows = rows.size();
  if (floor_ > 0.0) {
    const auto v = entries(g);
    for (int k = 0; k < 8; ++k) {
      if (floored_[k]) rows.push_back(floor_penalty(v[k], k, floor_));
    }
  }
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(values(), parameters());
  const Complex i(0.0, 1.0);
  int row = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool complex_valued = r < complex_rows;
    for (int k = 0; k < 8; ++k) {
      const int u = binding_[k];
      if (u == kPinnedZero) continue;
      const Complex ddx = rows[r].dz[k] + rows[r].dzbar[k];
      const Complex ddy = i * (rows[r].dz[k] - rows[r].dzbar[k]);
      jac(row, 2 * u) += ddx.real();
      jac(row, 2 * u + 1) += ddy.real();
      if (complex_valued) {
        jac(row + 1, 2 * u) += ddx.imag();
        jac(row + 1, 2 * u + 1) += ddy.imag();
      }
    }
    row += complex_valued ? 2 : 1;
  }
  return jac;
}

double ConstraintSystem::score(const EightVertexGate& g) const {
  double worst = 0.0;
  for (const auto& c : condition_values(set_, g)) worst = std::max(worst, std::abs(c.value));
  return worst;
}

EightVertexGate ConstraintSystem::project_to_floor(const EightVertexGate& g) const {
  auto v = entries(g);
  for (int k = 0; k < 8; ++k) {
    if (!floored_[k] || floor_ <= 0.0) continue;
    const double mod = std::abs(v[k]);
    if (mod >= floor_) continue;
    v[k] = mod > 0.0 ? v[k] * (floor_ / mod) : Complex(floor_, 0.0);
  }
  return gate_from_entries(v);
}

Eigen::VectorXd ConstraintSystem::random_start(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd x(parameters());
  for (int u = 0; u < unknowns_; ++u) {
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * 3.14159265358979323846 * unit(rng);
    x(2 * u) = radius * std::cos(angle);
    x(2 * u + 1) = radius * std::sin(angle);
  }
  return x;
}

namespace {

struct LmFunctor : Eigen::DenseFunctor<double> {
  explicit LmFunctor(const ConstraintSystem& system)
      : Eigen::DenseFunctor<double>(system.parameters(), system.values()), system(system) {}

  int operator()(const InputType& x, ValueType& fvec) const {
    fvec = system.residuals(x);
    return 0;
  }
  int df(const InputType& x, JacobianType& fjac) const {
    fjac = system.jacobian(x);
    return 0;
  }

  const ConstraintSystem& system;
};

}  // namespace

SolverOutcome ConstraintSystem::minimize(Eigen::VectorXd x) const {
  if (x.size() != parameters()) throw std::invalid_argument("minimize: start has wrong size");
  LmFunctor functor(*this);
  Eigen::LevenbergMarquardt<LmFunctor> lm(functor);
  lm.setMaxfev(2000);
  lm.setFtol(1e-15);
  lm.setXtol(1e-15);
  lm.minimize(x);
  int evaluations = static_cast<int>(lm.nfev());

  // Minimum-norm Gauss-Newton polish; the solution sets are manifolds, so
  // the Jacobian is rank deficient at convergence.
  double norm = residuals(x).norm();
  for (int step = 0; step < 8 && norm > 0.0; ++step) {
    const Eigen::VectorXd r = residuals(x);
    const Eigen::VectorXd dx = jacobian(x).completeOrthogonalDecomposition().solve(-r);
    const Eigen::VectorXd trial = x + dx;
    const double trial_norm = residuals(trial).norm();
    ++evaluations;
    if (!(trial_norm < norm)) break;
    x = trial;
    norm = trial_norm;
  }

  SolverOutcome out;
  out.gate = floor_ > 0.0 ? project_to_floor(gate(x)) : gate(x);
  out.max_residual = score(out.gate);
  out.evaluations = evaluations;
  return out;
}

}  // namespace yb
