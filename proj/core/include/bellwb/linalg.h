// Copyright 2026 The bellwb Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bellwb {

using Complex = std::complex<double>;

/// Dense complex matrix stored in row-major order.
///
/// Sized for operators on up to 10 qubits (1024 x 1024); there is no sparse
/// representation.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Outer product |a><b|.
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }
    std::span<Complex> entries() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;

    /// Largest |A[j][k] - conj(A[k][j])|.
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const;
    /// <v|A|v>.
    Complex expectation(std::span<const Complex> v) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest elementwise |a - b|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Pauli matrix sigma_mu with mu = 0 (identity), 1 (x), 2 (y), 3 (z).
const ComplexMatrix &pauli(int mu);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
/// Kronecker product of a list of factors, left to right.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// Tr(a b) as sum_{jk} a[j][k] b[k][j], without forming the product.
Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Ordered set of distinct party (qubit) indices.
///
/// Party 0 owns the most significant bit of a computational-basis index.
class QubitIndexSet {
   public:
    /// Sorts and validates; throws std::invalid_argument on empty input or duplicates.
    explicit QubitIndexSet(std::vector<int> parties);

    std::span<const int> parties() const { return parties_; }
    std::size_t size() const { return parties_.size(); }
    bool contains(int party) const;
    /// Basis-index bitmask for an n_parties register.
    std::size_t mask(int n_parties) const;
    /// Parties in [0, n_parties) not in this set.
    QubitIndexSet complement(int n_parties) const;

    friend bool operator==(const QubitIndexSet &, const QubitIndexSet &) = default;

   private:
    std::vector<int> parties_;
};

/// Transpose the tensor factors of the listed parties of a 2^N x 2^N operator.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, const QubitIndexSet &parties, int n_parties);

struct EigenSystem {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    ComplexMatrix vectors;
    int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-12 ||H||_F
/// (at most 100 sweeps). Throws std::invalid_argument if the input deviates
/// from Hermiticity by more than 1e-10.
EigenSystem hermitian_eigensystem(const ComplexMatrix &h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h);
double min_eigenvalue(const ComplexMatrix &h);

/// PSD predicate: lambda_min >= -1e-10 max(1, ||H||_F).
bool is_positive_semidefinite(const ComplexMatrix &h);
double psd_tolerance(const ComplexMatrix &h);

/// Number of qubits n with 2^n == dim; throws std::invalid_argument otherwise.
int qubit_count(std::size_t dim);

}  // namespace bellwb
