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

#include "bellwb/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bellwb {

namespace {

constexpr double kHermitianInputTol = 1e-10;
constexpr double kJacobiRelTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPsdRelTol = 1e-10;

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                sum += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexMatrix m(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Complex t = 0;
    for (std::size_t k = 0; k < rows_; ++k) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0;
    for (const auto &z : data_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) {
        return INFINITY;
    }
    double worst = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("operator*: inner dimensions differ");
    }
    ComplexMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                m(r, c) += ark * b(k, c);
            }
        }
    }
    return m;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("apply: vector length does not match columns");
    }
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Complex ComplexMatrix::expectation(std::span<const Complex> v) const {
    auto av = apply(v);
    Complex acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        acc += std::conj(v[k]) * av[k];
    }
    return acc;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

const ComplexMatrix &pauli(int mu) {
    static const ComplexMatrix kPaulis[4] = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {1, 0}},
        {{0, Complex(0, -1)}, {Complex(0, 1), 0}},
        {{1, 0}, {0, -1}},
    };
    if (mu < 0 || mu > 3) {
        throw std::out_of_range("pauli: index must be in [0, 3]");
    }
    return kPaulis[mu];
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex x = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    m(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return m;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
    ComplexMatrix acc = ComplexMatrix::identity(1);
    for (const auto &f : factors) {
        acc = kron(acc, f);
    }
    return acc;
}

Complex trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw std::invalid_argument("trace_product: operands must be square with equal dimensions");
    }
    Complex acc = 0;
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            acc += a(j, k) * b(k, j);
        }
    }
    return acc;
}

QubitIndexSet::QubitIndexSet(std::vector<int> parties) : parties_(std::move(parties)) {
    if (parties_.empty()) {
        throw std::invalid_argument("QubitIndexSet: empty party set");
    }
    std::sort(parties_.begin(), parties_.end());
    if (std::adjacent_find(parties_.begin(), parties_.end()) != parties_.end()) {
        throw std::invalid_argument("QubitIndexSet: duplicate party index");
    }
    if (parties_.front() < 0) {
        throw std::invalid_argument("QubitIndexSet: negative party index");
    }
}

bool QubitIndexSet::contains(int party) const {
    return std::binary_search(parties_.begin(), parties_.end(), party);
}

std::size_t QubitIndexSet::mask(int n_parties) const {
    std::size_t m = 0;
    for (int p : parties_) {
        if (p >= n_parties) {
            throw std::out_of_range("QubitIndexSet: party " + std::to_string(p) + " out of range for " +
                                    std::to_string(n_parties) + " parties");
        }
        m |= std::size_t{1} << (n_parties - 1 - p);
    }
    return m;
}

QubitIndexSet QubitIndexSet::complement(int n_parties) const {
    std::vector<int> rest;
    for (int p = 0; p < n_parties; ++p) {
        if (!contains(p)) {
            rest.push_back(p);
        }
    }
    return QubitIndexSet(std::move(rest));
}

int qubit_count(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, const QubitIndexSet &parties, int n_parties) {
    if (!rho.is_square()) {
        throw std::invalid_argument("partial_transpose: matrix is not square");
    }
    if (qubit_count(rho.rows()) != n_parties) {
        throw std::invalid_argument("partial_transpose: dimension does not match 2^n_parties");
    }
    const std::size_t mask = parties.mask(n_parties);
    const std::size_t dim = rho.rows();
    ComplexMatrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            out(r2, c2) = rho(r, c);
        }
    }
    return out;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw std::invalid_argument("hermitian_eigensystem: matrix is not square");
    }
    const double scale = h.frobenius_norm();
    if (h.hermiticity_defect() > kHermitianInputTol * std::max(1.0, scale)) {
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = kJacobiRelTol * scale;

    int sweeps = 0;
    while (sweeps < kJacobiMaxSweeps && off_diagonal_norm(a) > target) {
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // Phase-align a_pq to a real positive value, then apply a real rotation.
                const Complex phase = apq / mag;  // e^{i theta}
                const Complex phase_conj = std::conj(phase);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * phase_conj * akq;
                    a(k, q) = s * akp + c * phase_conj * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * phase_conj * vkq;
                    v(k, q) = s * vkp + c * phase_conj * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem out;
    out.sweeps = sweeps;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h) { return hermitian_eigensystem(h).values; }

double min_eigenvalue(const ComplexMatrix &h) {
    auto values = hermitian_eigenvalues(h);
    if (values.empty()) {
        throw std::invalid_argument("min_eigenvalue: empty matrix");
    }
    return values.front();
}

double psd_tolerance(const ComplexMatrix &h) { return kPsdRelTol * std::max(1.0, h.frobenius_norm()); }

bool is_positive_semidefinite(const ComplexMatrix &h) { return min_eigenvalue(h) >= -psd_tolerance(h); }

}  // namespace bellwb
