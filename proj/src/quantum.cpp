#include "zerocap/quantum.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zerocap {

namespace {

using cd = std::complex<double>;

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

ValidationReport check_density_matrix(const ComplexMatrix& rho) {
  ValidationReport report;
  if (rho.rows() != rho.cols() || rho.rows() < 1) {
    report.push_back({"shape", "state", "not a square matrix"});
    return report;
  }
  if (rho.rows() > kMaxQuantumDimension * kMaxQuantumDimension) {
    report.push_back({"shape", "state", "dimension too large"});
    return report;
  }
  const double herm = max_abs(rho - rho.adjoint());
  if (herm > 1e-12) report.push_back({"hermitian", "state", "deviation " + fmt(herm)});
  const cd trace = rho.trace();
  if (std::abs(trace - cd(1.0, 0.0)) > 1e-12) {
    report.push_back({"trace", "state", "trace " + fmt(trace.real())});
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (rho + rho.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-10) report.push_back({"positive-semidefinite", "state", fmt(min_eig)});
  return report;
}

ValidationReport check_measurement(const std::vector<ComplexMatrix>& elements, int dim) {
  ValidationReport report;
  if (elements.empty()) {
    report.push_back({"shape", "measurement", "no elements"});
    return report;
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& e = elements[k];
    const std::string where = "element " + std::to_string(k);
    if (e.rows() != dim || e.cols() != dim) {
      report.push_back({"shape", where, "dimension mismatch"});
      continue;
    }
    const double herm = max_abs(e - e.adjoint());
    if (herm > 1e-10) report.push_back({"hermitian", where, fmt(herm)});
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (e + e.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -1e-10) report.push_back({"positive-semidefinite", where, fmt(min_eig)});
    sum += e;
  }
  const double completeness = max_abs(sum - ComplexMatrix::Identity(dim, dim));
  if (completeness > 1e-10) {
    report.push_back({"completeness", "measurement", "deviation " + fmt(completeness)});
  }
  return report;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace_b(const ComplexMatrix& rho, int dim_a, int dim_b) {
  ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k) out(i, j) += rho(i * dim_b + k, j * dim_b + k);
  return out;
}

ComplexMatrix partial_trace_a(const ComplexMatrix& rho, int dim_a, int dim_b) {
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i)
    for (int j = 0; j < dim_b; ++j)
      for (int k = 0; k < dim_a; ++k) out(i, j) += rho(k * dim_b + i, k * dim_b + j);
  return out;
}

ComplexMatrix pure_state(const ComplexVector& psi) { return psi * psi.adjoint(); }

ValidationReport validate_quantum_model(const QuantumModel& q) {
  ValidationReport report;
  if (q.dim_a < 1 || q.dim_b < 1 || q.dim_a > kMaxQuantumDimension ||
      q.dim_b > kMaxQuantumDimension) {
    report.push_back({"shape", "model", "local dimensions must lie in 1..16"});
    return report;
  }
  if (q.state.rows() != q.dim_a * q.dim_b || q.state.cols() != q.dim_a * q.dim_b) {
    report.push_back({"shape", "state", "state dimension is not dim_a * dim_b"});
    return report;
  }
  for (auto& v : check_density_matrix(q.state)) report.push_back(std::move(v));
  auto check_party = [&](const std::vector<std::vector<ComplexMatrix>>& meas, int dim,
                         const char* who) {
    if (meas.empty()) report.push_back({"shape", who, "no measurements"});
    for (std::size_t x = 0; x < meas.size(); ++x) {
      if (meas[x].size() != meas.front().size()) {
        report.push_back({"shape", std::string(who) + " input " + std::to_string(x),
                          "outcome counts differ between inputs"});
      }
      for (auto& v : check_measurement(meas[x], dim)) {
        v.location = std::string(who) + " input " + std::to_string(x) + " " + v.location;
        report.push_back(std::move(v));
      }
    }
  };
  check_party(q.alice, q.dim_a, "alice");
  check_party(q.bob, q.dim_b, "bob");
  return report;
}

Behavior behavior_from_quantum(const QuantumModel& q) {
  const auto report = validate_quantum_model(q);
  if (!report.empty()) {
    throw std::invalid_argument("invalid quantum model: " + report.front().constraint + " at " +
                                report.front().location + " (" + report.front().detail + ")");
  }
  const Scenario s{static_cast<int>(q.alice.size()), static_cast<int>(q.bob.size()),
                   static_cast<int>(q.alice.front().size()),
                   static_cast<int>(q.bob.front().size())};
  std::vector<Scalar> table(s.size(), Scalar::floating(0.0));
  for (int x = 0; x < s.x_card; ++x)
    for (int y = 0; y < s.y_card; ++y)
      for (int a = 0; a < s.a_card; ++a)
        for (int b = 0; b < s.b_card; ++b) {
          const cd value = (kron(q.alice[x][a], q.bob[y][b]) * q.state).trace();
          if (std::abs(value.imag()) > 1e-10) {
            throw std::invalid_argument("trace formula left an imaginary residue");
          }
          table[s.index(x, y, a, b)] = Scalar::floating(value.real());
        }
  return Behavior(s, std::move(table));
}

ComplexMatrix make_max_entangled(int d) {
  if (d < 2 || d > kMaxQuantumDimension) {
    throw std::invalid_argument("maximally entangled state needs 2 <= d <= 16");
  }
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) psi(i * d + i) = 1.0 / std::sqrt(double(d));
  return pure_state(psi);
}

ComplexMatrix make_singlet() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);   // |01>
  psi(2) = -1.0 / std::sqrt(2.0);  // |10>
  return pure_state(psi);
}

std::array<ComplexMatrix, 2> planar_qubit_projectors(double theta) {
  ComplexMatrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  const ComplexMatrix bloch = std::sin(theta) * x + std::cos(theta) * z;
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return {0.5 * (id + bloch), 0.5 * (id - bloch)};
}

QuantumModel make_i3322_model() {
  using std::numbers::pi;
  const std::array<double, 3> alice_angles{0.0, pi / 3, 2 * pi / 3};
  const std::array<double, 3> bob_angles{4 * pi / 3, 2 * pi / 3, pi};
  QuantumModel q;
  q.dim_a = 2;
  q.dim_b = 2;
  q.state = make_singlet();
  for (double t : alice_angles) {
    const auto p = planar_qubit_projectors(t);
    q.alice.push_back({p[0], p[1]});
  }
  for (double t : bob_angles) {
    const auto p = planar_qubit_projectors(t);
    q.bob.push_back({p[0], p[1]});
  }
  return q;
}

Behavior make_i3322_table() {
  // p(a=b)/2 per column (x,y); p(a!=b)/2 is 1/2 minus it.
  const long same[3][3] = {{3, 3, 4}, {4, 1, 3}, {3, 4, 1}};  // eighths
  const Scenario s{3, 3, 2, 2};
  std::vector<Scalar> table(s.size());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          table[s.index(x, y, a, b)] =
              a == b ? Scalar::rational(same[x][y], 8) : Scalar::rational(4 - same[x][y], 8);
        }
  return Behavior(s, std::move(table));
}

Behavior make_cglmp_behavior() {
  using std::numbers::pi;
  auto csc2 = [](double t) { return 1.0 / (std::sin(t) * std::sin(t)); };
  const double eta = 1.0 / 54.0;
  const double c1 = eta * csc2(pi / 12);      // ~0.276
  const double c3 = eta * csc2(pi / 4);       // 1/27
  const double c5 = eta * csc2(5 * pi / 12);  // ~0.0198
  // Rows (x,y); columns (a,b) = 00,01,02,10,...,22.
  const double rows[4][9] = {
      {c1, c5, c3, c3, c1, c5, c5, c3, c1},  // (0,0)
      {c1, c3, c5, c5, c1, c3, c3, c5, c1},  // (0,1)
      {c1, c3, c5, c5, c1, c3, c3, c5, c1},  // (1,0)
      {c3, c1, c5, c5, c3, c1, c1, c5, c3},  // (1,1)
  };
  const Scenario s{2, 2, 3, 3};
  std::vector<Scalar> table(s.size());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) table[s.index(x, y, a, b)] = Scalar::floating(rows[x * 2 + y][a * 3 + b]);
  return Behavior(s, std::move(table));
}

}  // namespace zerocap
