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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssg/errors.h"

namespace ssg {

Mat2 Mat2::identity() {
    return diag(1, 1);
}

Mat2 Mat2::zero() {
    return Mat2{};
}

Mat2 Mat2::diag(Complex a, Complex b) {
    return of(a, 0, 0, b);
}

Mat2 Mat2::of(Complex m00, Complex m01, Complex m10, Complex m11) {
    Mat2 m;
    m.e = {m00, m01, m10, m11};
    return m;
}

Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    return Mat2::of(
        a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
        a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
        a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
        a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

Mat2 operator+(const Mat2 &a, const Mat2 &b) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.e[k] = a.e[k] + b.e[k];
    }
    return r;
}

Mat2 operator-(const Mat2 &a, const Mat2 &b) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.e[k] = a.e[k] - b.e[k];
    }
    return r;
}

Mat2 operator*(Complex s, const Mat2 &m) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.e[k] = s * m.e[k];
    }
    return r;
}

Mat2 dagger(const Mat2 &m) {
    return Mat2::of(std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1)));
}

Complex trace(const Mat2 &m) {
    return m(0, 0) + m(1, 1);
}

Complex determinant(const Mat2 &m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double r = 0;
    for (size_t k = 0; k < 4; k++) {
        r = std::max(r, std::abs(a.e[k] - b.e[k]));
    }
    return r;
}

bool is_hermitian(const Mat2 &m, double tol) {
    return max_abs_diff(m, dagger(m)) <= tol;
}

Mat2 pauli(Pauli which) {
    switch (which) {
        case Pauli::I:
            return Mat2::identity();
        case Pauli::X:
            return Mat2::of(0, 1, 1, 0);
        case Pauli::Y:
            return Mat2::of(0, Complex(0, -1), Complex(0, 1), 0);
        case Pauli::Z:
            return Mat2::diag(1, -1);
    }
    return Mat2::identity();
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double BlochVector::dot(const BlochVector &other) const {
    return x * other.x + y * other.y + z * other.z;
}

Mat2 pauli_combination(const BlochVector &v) {
    return Mat2::of(v.z, Complex(v.x, -v.y), Complex(v.x, v.y), -v.z);
}

DensityMatrix::DensityMatrix(const Mat2 &m) : m_(m) {
    if (!is_hermitian(m)) {
        throw InvalidState("density matrix is not Hermitian");
    }
    Complex tr = trace(m);
    if (std::abs(tr - 1.0) > STATE_TOLERANCE) {
        std::stringstream ss;
        ss << "density matrix trace is " << tr.real() << ", expected 1";
        throw InvalidState(ss.str());
    }
    if (hermitian_eigenvalues(m).low < -STATE_TOLERANCE) {
        throw InvalidState("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::ket0() {
    return DensityMatrix(Mat2::diag(1, 0));
}

DensityMatrix DensityMatrix::ket1() {
    return DensityMatrix(Mat2::diag(0, 1));
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Mat2::diag(0.5, 0.5));
}

EigenPair hermitian_eigenvalues(const Mat2 &m) {
    if (!is_hermitian(m)) {
        throw NotHermitian("matrix is not Hermitian");
    }
    // For Hermitian m the discriminant is ((a - d)/2)^2 + |b|^2, which avoids
    // the cancellation in (tr/2)^2 - det.
    double a = m(0, 0).real();
    double d = m(1, 1).real();
    double half_trace = (a + d) / 2;
    double radius = std::hypot((a - d) / 2, std::abs(m(0, 1)));
    return {half_trace + radius, half_trace - radius};
}

double trace_norm(const Mat2 &m) {
    auto ev = hermitian_eigenvalues(m);
    return std::abs(ev.high) + std::abs(ev.low);
}

double positive_part_trace(const Mat2 &m) {
    auto ev = hermitian_eigenvalues(m);
    return std::max(ev.high, 0.0) + std::max(ev.low, 0.0);
}

DensityMatrix bloch_to_density(const BlochVector &v) {
    if (v.norm() > 1 + STATE_TOLERANCE) {
        std::stringstream ss;
        ss << "Bloch vector norm " << v.norm() << " exceeds 1";
        throw OutsideBlochBall(ss.str());
    }
    return DensityMatrix(Complex(0.5) * (Mat2::identity() + pauli_combination(v)));
}

BlochVector density_to_bloch(const DensityMatrix &rho) {
    const Mat2 &m = rho.matrix();
    return {2 * m(0, 1).real(), -2 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

double clamp_probability(double p) {
    if (!(p >= -PROBABILITY_CLAMP_LIMIT && p <= 1 + PROBABILITY_CLAMP_LIMIT)) {
        std::stringstream ss;
        ss << "probability " << p << " is outside [0, 1]";
        throw ProbabilityOutOfRange(ss.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

double measure_rect(const DensityMatrix &rho) {
    return clamp_probability(rho.matrix()(1, 1).real());
}

}  // namespace ssg
