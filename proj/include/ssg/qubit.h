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

#ifndef SSG_QUBIT_H
#define SSG_QUBIT_H

#include <array>
#include <complex>

namespace ssg {

using Complex = std::complex<double>;

/// Validation tolerance for hermiticity, trace, positivity and Bloch norm.
inline constexpr double STATE_TOLERANCE = 1e-9;
/// Probabilities further than this outside [0, 1] are errors, not rounding.
inline constexpr double PROBABILITY_CLAMP_LIMIT = 1e-6;

/// Dense 2x2 complex matrix, row-major.
struct Mat2 {
    std::array<Complex, 4> e{};

    constexpr Complex &operator()(int row, int col) {
        return e[2 * row + col];
    }
    constexpr const Complex &operator()(int row, int col) const {
        return e[2 * row + col];
    }

    static Mat2 identity();
    static Mat2 zero();
    static Mat2 diag(Complex a, Complex b);
    static Mat2 of(Complex m00, Complex m01, Complex m10, Complex m11);

    bool operator==(const Mat2 &other) const = default;
};

Mat2 operator*(const Mat2 &a, const Mat2 &b);
Mat2 operator+(const Mat2 &a, const Mat2 &b);
Mat2 operator-(const Mat2 &a, const Mat2 &b);
Mat2 operator*(Complex s, const Mat2 &m);
Mat2 dagger(const Mat2 &m);
Complex trace(const Mat2 &m);
Complex determinant(const Mat2 &m);
/// Largest absolute entry of a - b.
double max_abs_diff(const Mat2 &a, const Mat2 &b);
bool is_hermitian(const Mat2 &m, double tol = STATE_TOLERANCE);

enum class Pauli { I, X, Y, Z };
Mat2 pauli(Pauli which);

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm() const;
    double dot(const BlochVector &other) const;
    BlochVector operator+(const BlochVector &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    BlochVector operator-(const BlochVector &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    BlochVector operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    bool operator==(const BlochVector &other) const = default;
};

/// x*sigma_x + y*sigma_y + z*sigma_z.
Mat2 pauli_combination(const BlochVector &v);

/// 2x2 density matrix. Always Hermitian, unit trace and positive semidefinite
/// to within STATE_TOLERANCE.
class DensityMatrix {
   public:
    /// Validates and stores m. Throws InvalidState when m is not a state.
    explicit DensityMatrix(const Mat2 &m);

    /// |0><0|, the initial state of every game.
    static DensityMatrix ket0();
    /// |1><1|.
    static DensityMatrix ket1();
    static DensityMatrix maximally_mixed();

    const Mat2 &matrix() const {
        return m_;
    }

   private:
    Mat2 m_;
};

struct EigenPair {
    double high;
    double low;
};

/// Closed-form eigenvalues of a Hermitian 2x2 matrix, high >= low.
/// Throws NotHermitian.
EigenPair hermitian_eigenvalues(const Mat2 &m);

/// Sum of absolute eigenvalues of a Hermitian 2x2 matrix. Throws NotHermitian.
double trace_norm(const Mat2 &m);

/// Sum of the positive eigenvalues of a Hermitian 2x2 matrix.
double positive_part_trace(const Mat2 &m);

/// (I + x sigma_x + y sigma_y + z sigma_z) / 2. |0><0| sits at (0, 0, +1).
/// Throws OutsideBlochBall when |v| > 1 + STATE_TOLERANCE.
DensityMatrix bloch_to_density(const BlochVector &v);
BlochVector density_to_bloch(const DensityMatrix &rho);

/// Clamps p into [0, 1]; throws ProbabilityOutOfRange beyond PROBABILITY_CLAMP_LIMIT.
double clamp_probability(double p);

/// Probability that a rectilinear measurement of rho yields 1.
double measure_rect(const DensityMatrix &rho);

}  // namespace ssg

#endif
