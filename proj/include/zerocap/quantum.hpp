#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <vector>

#include "zerocap/behaviors.hpp"

namespace zerocap {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kMaxQuantumDimension = 16;

/// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
ValidationReport check_density_matrix(const ComplexMatrix& rho);

/// Each element Hermitian and PSD; the elements sum to the identity within
/// 1e-10.
ValidationReport check_measurement(const std::vector<ComplexMatrix>& elements, int dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr_B of an operator on C^dim_a (x) C^dim_b.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho, int dim_a, int dim_b);
ComplexMatrix partial_trace_a(const ComplexMatrix& rho, int dim_a, int dim_b);

/// |psi><psi| for a (normalized) state vector.
ComplexMatrix pure_state(const ComplexVector& psi);

/// State plus one measurement (list of POVM elements indexed by outcome)
/// per input for each party.
struct QuantumModel {
  int dim_a = 2;
  int dim_b = 2;
  ComplexMatrix state;
  std::vector<std::vector<ComplexMatrix>> alice;
  std::vector<std::vector<ComplexMatrix>> bob;
};

ValidationReport validate_quantum_model(const QuantumModel& q);

/// p(a,b|x,y) = Re Tr[(A_x^a (x) B_y^b) rho], floating mode. Throws
/// std::invalid_argument when the model is invalid or an imaginary residue
/// exceeds 1e-10.
Behavior behavior_from_quantum(const QuantumModel& q);

/// (1/sqrt d) sum_i |ii> as a density matrix.
ComplexMatrix make_max_entangled(int d);

/// (|01> - |10>)/sqrt 2 as a density matrix.
ComplexMatrix make_singlet();

/// Rank-one projectors (I + s (sin t X + cos t Z))/2 for s = +1 (outcome 0)
/// and s = -1 (outcome 1).
std::array<ComplexMatrix, 2> planar_qubit_projectors(double theta);

/// Singlet with planar angles A = (0, pi/3, 2pi/3), B = (4pi/3, 2pi/3, pi).
QuantumModel make_i3322_model();

/// The dyadic-rational 3-3-2-2 table printed alongside those angles.
/// Column (x,y) = (2,1) of that table does not follow from the angles (see
/// README); this is the table used for exact protocol evaluation.
Behavior make_i3322_table();

/// Two-qutrit CGLMP-optimal correlation in closed form:
/// entries (1/54) csc^2 of pi/12, pi/4 or 5pi/12. Floating mode.
Behavior make_cglmp_behavior();

}  // namespace zerocap
