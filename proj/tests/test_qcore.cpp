#include "helpers.hpp"

#include "purex/gates.hpp"
#include "purex/states.hpp"

#include <doctest.h>

using namespace purex;
using namespace purex::test;

namespace {

ComplexMatrix proj00() {
    ComplexMatrix p = ComplexMatrix::Zero(2, 2);
    p(0, 0) = 1;
    return p;
}

}  // namespace

TEST_CASE("kron basics") {
    ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK(kron(i2, i2).isApprox(ComplexMatrix::Identity(4, 4)));

    ComplexMatrix zz = kron(pauli_z(), pauli_z());
    Eigen::Vector4cd d;
    d << 1, -1, -1, 1;
    CHECK(zz.isApprox(ComplexMatrix(d.asDiagonal())));
}

TEST_CASE("kron tensor layout against direct index computation") {
    ComplexMatrix a = proj00();
    ComplexMatrix b = pauli_x();
    ComplexMatrix got = kron(a, b);
    // Oracle: out(2i+k, 2j+l) = a(i,j) * b(k,l).
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(got(2 * i + k, 2 * j + l) == a(i, j) * b(k, l));
    // sigma_x in the upper-left 2x2 block, zeros elsewhere
    CHECK(got.block(0, 0, 2, 2).isApprox(b));
    CHECK(got.block(2, 2, 2, 2).isZero());
}

TEST_CASE("kron rejects registers beyond four qubits") {
    ComplexMatrix big = ComplexMatrix::Identity(16, 16);
    CHECK_THROWS_AS(kron(big, ComplexMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("kron associativity is exact") {
    std::mt19937 rng(11);
    ComplexMatrix a = random_complex(2, rng);
    ComplexMatrix b = random_complex(2, rng);
    ComplexMatrix c = random_complex(2, rng);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("embed full-register and identity cases") {
    CHECK(embed(swap_gate(), {1, 2}, 2).isApprox(swap_gate()));
    CHECK(embed(ComplexMatrix::Identity(4, 4), {1, 3}, 4)
              .isApprox(ComplexMatrix::Identity(16, 16)));
}

TEST_CASE("embed CNOT on qubits (1,3) of four") {
    ComplexMatrix u = embed(cnot_direct(), {1, 3}, 4);
    // |1000> (index 8) -> |1010> (index 10); enumerate the full basis action.
    for (int idx = 0; idx < 16; ++idx) {
        int q1 = (idx >> 3) & 1;
        int expected = q1 ? idx ^ 2 : idx;  // control q1 flips q3
        Eigen::VectorXcd in = Eigen::VectorXcd::Zero(16);
        in(idx) = 1;
        Eigen::VectorXcd out = u * in;
        CHECK(std::abs(out(expected) - Complex(1, 0)) < 1e-12);
    }
}

TEST_CASE("embed error paths") {
    CHECK_THROWS_AS(embed(cnot_direct(), {2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(embed(2.0 * cnot_direct(), {1, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(embed(cnot_direct(), {1, 5}, 4), std::invalid_argument);
}

TEST_CASE("evolve basics") {
    std::mt19937 rng(17);
    DensityOp rho = random_density(4, rng);
    CHECK(evolve(rho, ComplexMatrix::Identity(4, 4)).matrix().isApprox(rho.matrix()));

    ComplexMatrix p10 = ComplexMatrix::Zero(4, 4);
    p10(2, 2) = 1;
    ComplexMatrix expected = cnot_direct() * p10 * cnot_direct().adjoint();
    CHECK(evolve(DensityOp(p10), cnot_direct()).matrix().isApprox(expected));
    CHECK(std::abs(expected(3, 3).real() - 1.0) < 1e-12);

    ComplexMatrix p00 = ComplexMatrix::Zero(4, 4);
    p00(0, 0) = 1;
    CHECK(evolve(DensityOp(p00), cnot_direct()).matrix().isApprox(p00));

    CHECK_THROWS_AS(evolve(rho, ComplexMatrix::Identity(8, 8)), std::invalid_argument);
}

TEST_CASE("evolve preserves trace and spectrum under random unitaries") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        DensityOp rho = random_density(4, rng);
        ComplexMatrix u = random_unitary(4, rng);
        DensityOp out = evolve(rho, u);
        CHECK(std::abs(out.matrix().trace().real() - 1.0) <= 1e-10);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> e1(rho.matrix());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> e2(out.matrix());
        CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("partial_trace marginals") {
    CHECK(partial_trace(bell_state(BellKind::PhiPlus), {1})
              .matrix()
              .isApprox(0.5 * ComplexMatrix::Identity(2, 2)));

    std::mt19937 rng(29);
    DensityOp a = random_density(4, rng);
    DensityOp b = random_density(4, rng);
    DensityOp prod(kron(a.matrix(), b.matrix()));
    CHECK(partial_trace(prod, {1, 2}).matrix().isApprox(a.matrix(), 1e-10));
    CHECK(partial_trace(prod, {3, 4}).matrix().isApprox(b.matrix(), 1e-10));

    CHECK_THROWS_AS(partial_trace(prod, {}), std::invalid_argument);
}

TEST_CASE("partial_trace against an independent index-summation oracle") {
    DensityOp w = werner(0.7);
    std::mt19937 rng(31);
    DensityOp other = random_density(4, rng);
    DensityOp full(kron(w.matrix(), other.matrix()));
    // Oracle: rho_out(r, c) = sum_t rho(4r + t, 4c + t) for the MSB pair.
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int t = 0; t < 4; ++t) expected(r, c) += full.matrix()(4 * r + t, 4 * c + t);
    DensityOp got = partial_trace(full, {1, 2});
    CHECK(got.matrix().isApprox(expected, 1e-12));
    CHECK(got.matrix().isApprox(w.matrix(), 1e-10));
}

TEST_CASE("postselect basics") {
    DensityOp phi = bell_state(BellKind::PhiPlus);
    auto [same, p1] = postselect(phi, ComplexMatrix::Identity(4, 4));
    CHECK(p1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.matrix().isApprox(phi.matrix()));

    ComplexMatrix even = ComplexMatrix::Zero(4, 4);
    even(0, 0) = 1;
    even(3, 3) = 1;
    auto [kept, p2] = postselect(phi, even);
    CHECK(p2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kept.matrix().isApprox(phi.matrix()));

    // Werner parity weight F + (1-F)/3
    auto [state, p3] = postselect(werner(0.7), even);
    CHECK(p3 == doctest::Approx(0.8).epsilon(1e-12));

    ComplexMatrix odd = ComplexMatrix::Identity(4, 4) - even;
    CHECK_THROWS_AS(postselect(phi, odd), impossible_outcome);
    CHECK_THROWS_AS(postselect(phi, 0.5 * even), std::invalid_argument);
}

TEST_CASE("postselect probabilities over complete projector sets sum to 1") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        DensityOp rho = random_density(4, rng);
        double total = 0.0;
        for (int k = 0; k < 4; ++k) {
            ComplexMatrix p = ComplexMatrix::Zero(4, 4);
            p(k, k) = 1;
            try {
                total += postselect(rho, p).probability;
            } catch (const impossible_outcome&) {
            }
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("locality: a unitary on discarded qubits leaves the marginal alone") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        DensityOp rho = random_density(16, rng);
        ComplexMatrix u = embed(random_unitary(4, rng), {3, 4}, 4);
        DensityOp before = partial_trace(rho, {1, 2});
        DensityOp after = partial_trace(evolve(rho, u), {1, 2});
        CHECK((before.matrix() - after.matrix()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("dist_up_to_phase") {
    std::mt19937 rng(43);
    ComplexMatrix u = random_unitary(4, rng);
    CHECK(dist_up_to_phase(u, u) <= 1e-12);
    CHECK(dist_up_to_phase(u, -u) <= 1e-12);
    CHECK(dist_up_to_phase(u, Complex(0, 1) * u) <= 1e-12);
    // Cross terms vanish: distance is sqrt(||I||^2 + ||sx||^2) = 2.
    CHECK(dist_up_to_phase(ComplexMatrix::Identity(2, 2), pauli_x()) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(dist_up_to_phase(u, ComplexMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("DensityOp validation rejects bad matrices") {
    ComplexMatrix nonherm = ComplexMatrix::Zero(2, 2);
    nonherm(0, 0) = 0.5;
    nonherm(1, 1) = 0.5;
    nonherm(0, 1) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(DensityOp{nonherm}, std::invalid_argument);

    ComplexMatrix badtrace = ComplexMatrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOp{badtrace}, std::invalid_argument);

    ComplexMatrix negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(DensityOp{negative}, std::invalid_argument);
}
