#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace purex {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Global absolute tolerance used by all validity checks (default 1e-10).
double& numeric_tolerance();

/// Thrown by postselect when the requested outcome has (numerically) zero
/// probability; callers treat the round as failed.
struct impossible_outcome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxRegisterDim = 16;  // 4 qubits

bool is_valid_register_dim(Eigen::Index dim);
int qubit_count(Eigen::Index dim);

/// Hermitian, unit-trace, positive-semidefinite matrix. Validated on
/// construction against numeric_tolerance().
class DensityOp {
public:
    explicit DensityOp(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    int qubits() const { return qubit_count(m_.rows()); }

private:
    ComplexMatrix m_;
};

/// Tensor product, a on the more significant qubits.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Lift a two-qubit unitary to an n-qubit register, acting on the given
/// (distinct, 1-based) target qubits. Qubit 1 is the most significant bit;
/// targets.first maps to the more significant qubit of u.
ComplexMatrix embed(const ComplexMatrix& u, std::pair<int, int> targets, int n_qubits);

/// U rho U^dagger.
DensityOp evolve(const DensityOp& rho, const ComplexMatrix& u);

/// Trace out all qubits not in keep (1-based labels, qubit 1 most
/// significant). Kept qubits retain their relative order.
DensityOp partial_trace(const DensityOp& rho, const std::vector<int>& keep);

struct PostselectResult {
    DensityOp state;
    double probability;
};

/// Project onto the given Hermitian idempotent and renormalize.
/// Throws impossible_outcome when the outcome probability is <= 1e-12.
PostselectResult postselect(const DensityOp& rho, const ComplexMatrix& projector);

/// min over |phi| = 1 of the Frobenius norm ||a - phi*b||; zero iff the
/// matrices agree up to a global phase.
double dist_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace purex
