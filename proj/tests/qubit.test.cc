// Copyright 2026 The ssg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssg/qubit.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "ssg/errors.h"
#include "ssg/gates.h"
#include "test_util.h"

using namespace ssg;

namespace {

const Complex I1{0, 1};

/// (|l1| + |l2|)^2 = tr(M^2) + 2 |det M| for Hermitian M.
double trace_norm_oracle(const Mat2 &m) {
    double tr_sq = trace(m * m).real();
    return std::sqrt(std::max(0.0, tr_sq + 2 * std::abs(determinant(m).real())));
}

void expect_mat_near(const Mat2 &a, const Mat2 &b, double tol = 1e-12) {
    EXPECT_LE(max_abs_diff(a, b), tol);
}

}  // namespace

TEST(qubit, pauli_matrices) {
    expect_mat_near(pauli(Pauli::I), Mat2::of(1, 0, 0, 1), 0);
    expect_mat_near(pauli(Pauli::X), Mat2::of(0, 1, 1, 0), 0);
    expect_mat_near(pauli(Pauli::Y), Mat2::of(0, -I1, I1, 0), 0);
    expect_mat_near(pauli(Pauli::Z), Mat2::of(1, 0, 0, -1), 0);
    for (auto p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
        expect_mat_near(pauli(p) * pauli(p), Mat2::identity(), 0);
    }
}

TEST(qubit, mat_ops) {
    expect_mat_near(pauli(Pauli::X) * pauli(Pauli::X), Mat2::identity(), 0);
    expect_mat_near(dagger(Mat2::of(0, I1, 0, 0)), Mat2::of(0, 0, -I1, 0), 0);
    EXPECT_EQ(trace(Mat2::identity()), Complex(2));
    Mat2 m = Mat2::of({1, 2}, {3, -4}, {0.5, 0}, {-1, 1});
    expect_mat_near(dagger(dagger(m)), m, 0);
    expect_mat_near(m + m - Complex(2) * m, Mat2::zero(), 0);
    EXPECT_EQ(determinant(Mat2::diag(2, 3)), Complex(6));
}

TEST(qubit, hermitian_eigenvalues) {
    auto z = hermitian_eigenvalues(pauli(Pauli::Z));
    EXPECT_NEAR(z.high, 1, 1e-15);
    EXPECT_NEAR(z.low, -1, 1e-15);

    Mat2 m = Complex(0.5) * (Complex(-1) * Mat2::identity() + Complex(2) * pauli(Pauli::X));
    auto e = hermitian_eigenvalues(m);
    EXPECT_NEAR(e.high, 0.5, 1e-15);
    EXPECT_NEAR(e.low, -1.5, 1e-15);

    auto h = hermitian_eigenvalues(Complex(0.5) * Mat2::identity());
    EXPECT_EQ(h.high, 0.5);
    EXPECT_EQ(h.low, 0.5);

    EXPECT_THROW(hermitian_eigenvalues(Mat2::of(0, 1, 0, 0)), NotHermitian);
    EXPECT_THROW(trace_norm(Mat2::of(0, I1, I1, 0)), NotHermitian);
}

TEST(qubit, trace_norm_examples) {
    EXPECT_NEAR(trace_norm(pauli(Pauli::Z)), 2, 1e-15);
    Mat2 m = Complex(0.5) * (Complex(-1) * Mat2::identity() + Complex(2) * pauli(Pauli::X));
    EXPECT_NEAR(trace_norm(m), 2, 1e-15);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; k++) {
        EXPECT_NEAR(trace_norm(bloch_to_density(ssg_test::random_ball(rng)).matrix()), 1, 1e-12);
    }
}

TEST(qubit, trace_norm_matches_eigenvalues_property) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> n(0, 1);
    for (int k = 0; k < 1000; k++) {
        double a = n(rng), d = n(rng);
        Complex b{n(rng), n(rng)};
        Mat2 m = Mat2::of(a, b, std::conj(b), d);
        auto e = hermitian_eigenvalues(m);
        ASSERT_GE(e.high, e.low);
        ASSERT_NEAR(trace_norm(m), std::abs(e.high) + std::abs(e.low), 1e-12);
        ASSERT_NEAR(trace_norm(m), trace_norm_oracle(m), 1e-12);
        ASSERT_NEAR(positive_part_trace(m), std::max(0.0, e.high) + std::max(0.0, e.low), 1e-12);
    }
}

TEST(qubit, closed_form_trace_norm_property) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> len(0, 4);
    for (int k = 0; k < 1000; k++) {
        BlochVector r = ssg_test::random_direction(rng) * len(rng);
        Mat2 a = Complex(0.5) * (Complex(-1) * Mat2::identity() + pauli_combination(r));
        ASSERT_NEAR(trace_norm(a), std::max(1.0, r.norm()), 1e-12);
    }
}

TEST(qubit, bloch_to_density_examples) {
    expect_mat_near(bloch_to_density({0, 0, 1}).matrix(), Mat2::diag(1, 0), 0);
    expect_mat_near(bloch_to_density({0, 0, 0}).matrix(), Mat2::diag(0.5, 0.5), 0);
    expect_mat_near(bloch_to_density({1, 0, 0}).matrix(), Mat2::of(0.5, 0.5, 0.5, 0.5), 0);
    EXPECT_EQ(density_to_bloch(DensityMatrix::ket0()), (BlochVector{0, 0, 1}));
    EXPECT_EQ(density_to_bloch(DensityMatrix::maximally_mixed()), (BlochVector{0, 0, 0}));
    EXPECT_EQ(density_to_bloch(bloch_to_density({1, 0, 0})), (BlochVector{1, 0, 0}));
    EXPECT_THROW(bloch_to_density({1, 1, 0}), OutsideBlochBall);
    EXPECT_NO_THROW(bloch_to_density({0, 0, 1 + 1e-10}));
}

TEST(qubit, bloch_round_trip_property) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 1000; k++) {
        BlochVector v = ssg_test::random_ball(rng);
        BlochVector w = density_to_bloch(bloch_to_density(v));
        ASSERT_NEAR(w.x, v.x, 1e-12);
        ASSERT_NEAR(w.y, v.y, 1e-12);
        ASSERT_NEAR(w.z, v.z, 1e-12);
    }
}

TEST(qubit, pure_states_have_eigenvalues_one_and_zero) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 1000; k++) {
        auto e = hermitian_eigenvalues(bloch_to_density(ssg_test::random_direction(rng)).matrix());
        ASSERT_NEAR(e.high, 1, 1e-12);
        ASSERT_NEAR(e.low, 0, 1e-12);
    }
}

TEST(qubit, density_matrix_validation) {
    EXPECT_THROW(DensityMatrix(Mat2::diag(1, 1)), InvalidState);
    EXPECT_THROW(DensityMatrix(Mat2::diag(1.5, -0.5)), InvalidState);
    EXPECT_THROW(DensityMatrix(Mat2::of(0.5, 0.5, 0, 0.5)), InvalidState);
    EXPECT_NO_THROW(DensityMatrix(Mat2::diag(1 + 1e-10, -1e-10)));
}

TEST(qubit, measure_rect) {
    EXPECT_EQ(measure_rect(DensityMatrix::ket1()), 1);
    EXPECT_EQ(measure_rect(DensityMatrix::ket0()), 0);
    DensityMatrix r = apply_gate(DensityMatrix::ket0(), rotation_x(2 * std::numbers::pi / 3));
    EXPECT_NEAR(measure_rect(r), 0.75, 1e-15);
    EXPECT_NEAR(r.matrix()(0, 0).real(), 0.25, 1e-15);

    std::mt19937_64 rng(6);
    for (int k = 0; k < 1000; k++) {
        DensityMatrix rho = bloch_to_density(ssg_test::random_ball(rng));
        ASSERT_NEAR(measure_rect(rho) + rho.matrix()(0, 0).real(), 1, 1e-12);
    }
}

TEST(qubit, clamp_probability) {
    EXPECT_EQ(clamp_probability(-1e-8), 0);
    EXPECT_EQ(clamp_probability(1 + 1e-8), 1);
    EXPECT_EQ(clamp_probability(0.25), 0.25);
    EXPECT_THROW(clamp_probability(1.01), ProbabilityOutOfRange);
    EXPECT_THROW(clamp_probability(-2e-6), ProbabilityOutOfRange);
}
