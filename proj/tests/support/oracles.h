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

// Independent reference implementations used only by the test suites. None of
// these share code paths with the library beyond the basic matrix container.

#ifndef BELLWB_TESTS_SUPPORT_ORACLES_H
#define BELLWB_TESTS_SUPPORT_ORACLES_H

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "bellwb/bellwb.h"

namespace bellwb::testing {

using Complex = std::complex<double>;

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            e(r, c) = m(r, c);
        }
    }
    return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd &e) {
    ComplexMatrix m(e.rows(), e.cols());
    for (Eigen::Index r = 0; r < e.rows(); ++r) {
        for (Eigen::Index c = 0; c < e.cols(); ++c) {
            m(r, c) = e(r, c);
        }
    }
    return m;
}

/// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigen_spectrum(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
    const auto &v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

inline double eigen_min_eigenvalue(const ComplexMatrix &m) { return eigen_spectrum(m).front(); }

/// Local-realistic maximum by enumerating all 2^{NM} outcome tables and
/// summing every setting tuple directly.
inline double naive_lhv_bound(int n, int m) {
    const int bits = n * m;
    std::size_t tuples = 1;
    for (int k = 0; k < n; ++k) {
        tuples *= static_cast<std::size_t>(m);
    }
    const int eta = ((m + 1) % 2) * (n % 2) + 1;
    std::vector<double> coeff(tuples);
    std::vector<std::vector<int>> digits(tuples, std::vector<int>(n));
    for (std::size_t t = 0; t < tuples; ++t) {
        std::size_t rest = t;
        double total = 0;
        for (int p = n - 1; p >= 0; --p) {
            digits[t][p] = static_cast<int>(rest % m);
            rest /= m;
            total += std::numbers::pi / m * digits[t][p] + std::numbers::pi / (2.0 * m * n) * eta;
        }
        coeff[t] = std::cos(total);
    }
    double best = 0;
    for (std::uint64_t table = 0; table < (std::uint64_t{1} << bits); ++table) {
        double sum = 0;
        for (std::size_t t = 0; t < tuples; ++t) {
            int sign = 1;
            for (int p = 0; p < n; ++p) {
                if ((table >> (p * m + digits[t][p])) & 1) {
                    sign = -sign;
                }
            }
            sum += sign * coeff[t];
        }
        best = std::max(best, std::abs(sum));
    }
    return best;
}

/// Tr(rho sigma_mu1 x ... x sigma_muN) via explicit Pauli strings.
inline std::vector<double> pauli_string_tensor(const DensityMatrix &rho) {
    const int n = rho.n_parties();
    std::size_t count = 1;
    for (int k = 0; k < n; ++k) {
        count *= 4;
    }
    std::vector<double> out(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<ComplexMatrix> factors;
        for (int p = 0; p < n; ++p) {
            factors.push_back(pauli(static_cast<int>((idx >> (2 * (n - 1 - p))) & 3)));
        }
        out[idx] = trace_product(rho.matrix(), kron_all(factors)).real();
    }
    return out;
}

/// Quantum correlation for one setting tuple via explicit observable products.
inline double correlation_oracle(const BellScenario &s, const DensityMatrix &rho, std::size_t tuple) {
    std::vector<ComplexMatrix> factors;
    const auto m = tuple_from_index(s, tuple);
    for (int p = 0; p < s.n_parties(); ++p) {
        const double phi = std::numbers::pi / s.n_settings() * m[p] +
                           std::numbers::pi / (2.0 * s.n_settings() * s.n_parties()) * s.eta();
        factors.push_back(ComplexMatrix{{0, std::polar(1.0, -phi)}, {std::polar(1.0, phi), 0}});
    }
    return trace_product(rho.matrix(), kron_all(factors)).real();
}

class TestRng {
   public:
    explicit TestRng(std::uint64_t seed) : engine_(seed) {}
    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

inline ComplexMatrix random_complex(std::size_t rows, std::size_t cols, TestRng &rng) {
    ComplexMatrix m(rows, cols);
    for (auto &z : m.entries()) {
        z = {rng.normal(), rng.normal()};
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, TestRng &rng) {
    const auto g = random_complex(dim, dim, rng);
    auto h = g + g.adjoint();
    h *= 0.5;
    return h;
}

/// Ginibre-distributed density matrix G G^dagger / Tr.
inline DensityMatrix random_density(int n, TestRng &rng, std::size_t rank = 0) {
    const std::size_t dim = std::size_t{1} << n;
    const auto g = random_complex(dim, rank ? rank : dim, rng);
    auto rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r + 1; c < dim; ++c) {
            rho(c, r) = std::conj(rho(r, c));
        }
        rho(r, r) = rho(r, r).real();
    }
    return DensityMatrix::from_matrix(rho);
}

/// Haar-ish random SU(2) element.
inline ComplexMatrix random_unitary2(TestRng &rng) {
    const double a = 2 * std::numbers::pi * rng.uniform();
    const double b = 2 * std::numbers::pi * rng.uniform();
    const double t = std::acos(std::sqrt(rng.uniform()));
    return ComplexMatrix{{std::polar(std::cos(t), a), std::polar(std::sin(t), b)},
                         {-std::polar(std::sin(t), -b), std::polar(std::cos(t), -a)}};
}

inline ComplexMatrix random_qubit_density(TestRng &rng) {
    const auto g = random_complex(2, 2, rng);
    auto rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    rho(1, 0) = std::conj(rho(0, 1));
    return rho;
}

/// Convex mixture of `terms` random product states.
inline DensityMatrix random_separable(int n, int terms, TestRng &rng) {
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix acc(dim, dim);
    double weight_sum = 0;
    std::vector<double> weights(terms);
    for (auto &w : weights) {
        w = rng.uniform() + 1e-3;
        weight_sum += w;
    }
    for (int k = 0; k < terms; ++k) {
        std::vector<ComplexMatrix> factors;
        for (int p = 0; p < n; ++p) {
            factors.push_back(random_qubit_density(rng));
        }
        acc += kron_all(factors) * Complex(weights[k] / weight_sum);
    }
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r + 1; c < dim; ++c) {
            acc(c, r) = std::conj(acc(r, c));
        }
    }
    return DensityMatrix::from_matrix(acc);
}

}  // namespace bellwb::testing

#endif  // BELLWB_TESTS_SUPPORT_ORACLES_H
