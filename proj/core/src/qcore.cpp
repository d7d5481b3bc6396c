#include "purex/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace purex {

double& numeric_tolerance() {
    static double tol = 1e-10;
    return tol;
}

bool is_valid_register_dim(Eigen::Index dim) {
    return dim >= 2 && dim <= kMaxRegisterDim && (dim & (dim - 1)) == 0;
}

int qubit_count(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    return n;
}

namespace {

void require_square_register(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols() || !is_valid_register_dim(m.rows()))
        throw std::invalid_argument(std::string(what) + ": expected a square matrix of dimension 2/4/8/16");
}

// Bit of qubit q (1-based, qubit 1 most significant) in basis index i.
inline int qubit_bit(Eigen::Index i, int q, int n_qubits) {
    return static_cast<int>((i >> (n_qubits - q)) & 1);
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    ComplexMatrix d = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff() <= tol * 10;
}

}  // namespace

DensityOp::DensityOp(ComplexMatrix m) : m_(std::move(m)) {
    require_square_register(m_, "DensityOp");
    const double tol = numeric_tolerance();
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("DensityOp: matrix is not Hermitian");
    if (std::abs(m_.trace().real() - 1.0) > tol || std::abs(m_.trace().imag()) > tol)
        throw std::invalid_argument("DensityOp: trace is not 1");
    // Diagonalize the Hermitian part; rounding may leave tiny negative eigenvalues.
    ComplexMatrix herm = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol)
        throw std::invalid_argument("DensityOp: matrix has a negative eigenvalue");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_register(a, "kron");
    require_square_register(b, "kron");
    const Eigen::Index da = a.rows(), db = b.rows();
    if (da * db > kMaxRegisterDim)
        throw std::invalid_argument("kron: register too large (more than 4 qubits)");
    ComplexMatrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a(i, j) * b;
    return out;
}

ComplexMatrix embed(const ComplexMatrix& u, std::pair<int, int> targets, int n_qubits) {
    if (u.rows() != 4 || u.cols() != 4)
        throw std::invalid_argument("embed: expected a 4x4 operator");
    auto [qa, qb] = targets;
    if (qa == qb) throw std::invalid_argument("embed: duplicate target qubits");
    if (qa < 1 || qa > n_qubits || qb < 1 || qb > n_qubits)
        throw std::invalid_argument("embed: target qubit outside the register");
    if (!is_unitary(u, numeric_tolerance()))
        throw std::invalid_argument("embed: operator is not unitary");

    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    const Eigen::Index mask_a = Eigen::Index{1} << (n_qubits - qa);
    const Eigen::Index mask_b = Eigen::Index{1} << (n_qubits - qb);
    const Eigen::Index rest_mask = (dim - 1) & ~(mask_a | mask_b);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const int ra = qubit_bit(r, qa, n_qubits);
        const int rb = qubit_bit(r, qb, n_qubits);
        for (Eigen::Index c = 0; c < dim; ++c) {
            if ((r & rest_mask) != (c & rest_mask)) continue;
            const int ca = qubit_bit(c, qa, n_qubits);
            const int cb = qubit_bit(c, qb, n_qubits);
            out(r, c) = u(2 * ra + rb, 2 * ca + cb);
        }
    }
    return out;
}

DensityOp evolve(const DensityOp& rho, const ComplexMatrix& u) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim())
        throw std::invalid_argument("evolve: dimension mismatch");
    return DensityOp(u * rho.matrix() * u.adjoint());
}

DensityOp partial_trace(const DensityOp& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
    const int n = rho.qubits();
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
    for (int q : kept)
        if (q < 1 || q > n) throw std::invalid_argument("partial_trace: qubit outside the register");

    std::vector<int> traced;
    for (int q = 1; q <= n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    const auto nk = static_cast<int>(kept.size());
    const auto nt = static_cast<int>(traced.size());
    const Eigen::Index dk = Eigen::Index{1} << nk;
    const Eigen::Index dt = Eigen::Index{1} << nt;

    // Assemble a full register index from a kept sub-index and a traced sub-index.
    auto full_index = [&](Eigen::Index k, Eigen::Index t) {
        Eigen::Index idx = 0;
        for (int i = 0; i < nk; ++i)
            idx |= ((k >> (nk - 1 - i)) & 1) << (n - kept[static_cast<size_t>(i)]);
        for (int i = 0; i < nt; ++i)
            idx |= ((t >> (nt - 1 - i)) & 1) << (n - traced[static_cast<size_t>(i)]);
        return idx;
    };

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index r = 0; r < dk; ++r)
        for (Eigen::Index c = 0; c < dk; ++c)
            for (Eigen::Index t = 0; t < dt; ++t)
                out(r, c) += rho.matrix()(full_index(r, t), full_index(c, t));
    return DensityOp(std::move(out));
}

PostselectResult postselect(const DensityOp& rho, const ComplexMatrix& projector) {
    if (projector.rows() != rho.dim() || projector.cols() != rho.dim())
        throw std::invalid_argument("postselect: dimension mismatch");
    const double tol = numeric_tolerance();
    if ((projector - projector.adjoint()).cwiseAbs().maxCoeff() > tol ||
        (projector * projector - projector).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("postselect: operator is not a Hermitian idempotent");

    ComplexMatrix projected = projector * rho.matrix() * projector;
    const double p = projected.trace().real();
    if (p <= 1e-12)
        throw impossible_outcome("postselect: outcome probability is zero");
    return {DensityOp(projected / p), p};
}

double dist_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dist_up_to_phase: dimension mismatch");
    // ||a - phi b|| is minimized by phi aligned with tr(b^dag a). Form the
    // difference explicitly: the expanded formula ||a||^2 + ||b||^2 - 2|tr|
    // cancels catastrophically when a and b agree up to phase.
    const Complex overlap = (b.adjoint() * a).trace();
    if (std::abs(overlap) == 0.0)
        return std::sqrt(a.squaredNorm() + b.squaredNorm());
    const Complex phi = overlap / std::abs(overlap);
    return (a - phi * b).norm();
}

}  // namespace purex
