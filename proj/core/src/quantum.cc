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

#include "bellwb/quantum.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellwb/errors.h"

namespace bellwb {

namespace {

constexpr double kStateNormTol = 1e-12;
constexpr double kStateHermitianTol = 1e-12;
constexpr double kStateTraceTol = 1e-10;
constexpr double kStateMinEigenvalue = -1e-10;
constexpr std::size_t kSumChunk = 64;

std::size_t basis_dim(int n_parties) { return std::size_t{1} << n_parties; }

void check_parties(const BellScenario &s, const DensityMatrix &rho, const char *op) {
    if (s.n_parties() != rho.n_parties()) {
        throw std::invalid_argument(std::string(op) + ": state has " + std::to_string(rho.n_parties()) +
                                    " parties, scenario has " + std::to_string(s.n_parties()));
    }
}

void check_structure(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InvalidState("density matrix is not square");
    }
    try {
        qubit_count(m.rows());
    } catch (const std::invalid_argument &e) {
        throw InvalidState(std::string("density matrix: ") + e.what());
    }
    if (m.hermiticity_defect() > kStateHermitianTol) {
        throw InvalidState("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0)) > kStateTraceTol) {
        throw InvalidState("density matrix trace differs from 1");
    }
}

ComplexMatrix bell_term(const BellScenario &s, std::span<const ComplexMatrix> observables,
                        std::span<const double> coefficients, std::size_t index) {
    std::vector<ComplexMatrix> factors;
    factors.reserve(s.n_parties());
    for (int m : tuple_from_index(s, index)) {
        factors.push_back(observables[m]);
    }
    ComplexMatrix term = kron_all(factors);
    term *= coefficients[index];
    return term;
}

ComplexMatrix sum_terms(const BellScenario &s, std::span<const ComplexMatrix> observables,
                        std::span<const double> coefficients, std::size_t lo, std::size_t hi) {
    if (hi - lo <= kSumChunk) {
        const std::size_t dim = basis_dim(s.n_parties());
        ComplexMatrix acc(dim, dim);
        for (std::size_t k = lo; k < hi; ++k) {
            acc += bell_term(s, observables, coefficients, k);
        }
        return acc;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    ComplexMatrix left = sum_terms(s, observables, coefficients, lo, mid);
    left += sum_terms(s, observables, coefficients, mid, hi);
    return left;
}

}  // namespace

PureState::PureState(int n_parties, std::vector<Complex> amplitudes)
    : n_parties_(n_parties), amplitudes_(std::move(amplitudes)) {
    if (n_parties < 1 || amplitudes_.size() != basis_dim(n_parties)) {
        throw InvalidState("pure state must have 2^N amplitudes");
    }
    double norm = 0;
    for (const auto &a : amplitudes_) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kStateNormTol) {
        throw InvalidState("pure state is not normalized");
    }
}

DensityMatrix PureState::projector() const {
    return DensityMatrix::from_trusted(ComplexMatrix::outer(amplitudes_, amplitudes_));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    check_structure(m);
    double lowest;
    try {
        lowest = min_eigenvalue(m);
    } catch (const std::invalid_argument &e) {
        throw InvalidState(std::string("density matrix: ") + e.what());
    }
    if (lowest < kStateMinEigenvalue) {
        throw InvalidState("density matrix is not positive semidefinite (min eigenvalue " + std::to_string(lowest) +
                           ")");
    }
    const int n = qubit_count(m.rows());
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix m) {
    check_structure(m);
    const int n = qubit_count(m.rows());
    return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_parties) {
    const std::size_t dim = basis_dim(n_parties);
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return from_trusted(std::move(m));
}

ComplexMatrix equatorial_observable(double phi) {
    return {{0, Complex(std::cos(phi), -std::sin(phi))}, {Complex(std::cos(phi), std::sin(phi)), 0}};
}

PureState ghz_state(int n_parties, GhzSign sign) {
    if (n_parties < 2) {
        throw std::invalid_argument("ghz_state requires N >= 2");
    }
    std::vector<Complex> amps(basis_dim(n_parties));
    amps.front() = std::numbers::sqrt2 / 2;
    amps.back() = sign == GhzSign::kPlus ? std::numbers::sqrt2 / 2 : -std::numbers::sqrt2 / 2;
    return PureState(n_parties, std::move(amps));
}

PureState generalized_ghz(int n_parties, double alpha) {
    if (n_parties < 2) {
        throw std::invalid_argument("generalized_ghz requires N >= 2");
    }
    std::vector<Complex> amps(basis_dim(n_parties));
    amps.front() = std::cos(alpha);
    amps.back() = std::sin(alpha);
    return PureState(n_parties, std::move(amps));
}

PureState product_state(std::span<const std::array<Complex, 2>> qubits) {
    std::vector<Complex> amps{1.0};
    for (const auto &q : qubits) {
        std::vector<Complex> next;
        next.reserve(amps.size() * 2);
        for (const auto &a : amps) {
            next.push_back(a * q[0]);
            next.push_back(a * q[1]);
        }
        amps = std::move(next);
    }
    return PureState(static_cast<int>(qubits.size()), std::move(amps));
}

DensityMatrix dur_state(int n_parties, double alpha_n) {
    if (n_parties < 3) {
        throw std::invalid_argument("dur_state requires N >= 3");
    }
    const std::size_t dim = basis_dim(n_parties);
    const std::size_t all_ones = dim - 1;
    const double weight = 1.0 / (n_parties + 1);
    ComplexMatrix m(dim, dim);

    const Complex phase = std::polar(1.0, alpha_n);
    m(0, 0) = 0.5 * weight;
    m(all_ones, all_ones) = 0.5 * weight;
    m(all_ones, 0) = 0.5 * weight * phase;
    m(0, all_ones) = 0.5 * weight * std::conj(phase);

    for (int k = 0; k < n_parties; ++k) {
        const std::size_t single = std::size_t{1} << (n_parties - 1 - k);
        m(single, single) += 0.5 * weight;
        m(all_ones ^ single, all_ones ^ single) += 0.5 * weight;
    }
    return DensityMatrix::from_trusted(std::move(m));
}

ComplexMatrix bell_operator_sum(const BellScenario &s) {
    const std::size_t terms = s.num_tuples();
    const std::size_t dim = basis_dim(s.n_parties());
    if (s.n_parties() > 14 || terms > kOperatorSumBudget / (dim * dim)) {
        throw BudgetExceeded("bell_operator_sum: M^N * 4^N exceeds budget");
    }
    std::vector<ComplexMatrix> observables;
    observables.reserve(s.n_settings());
    for (int m = 0; m < s.n_settings(); ++m) {
        observables.push_back(equatorial_observable(angle(s, 0, m)));
    }
    const auto coefficients = coefficient_tensor(s).values;
    return sum_terms(s, observables, coefficients, 0, terms);
}

ComplexMatrix bell_operator_closed(const BellScenario &s) {
    const std::size_t dim = basis_dim(s.n_parties());
    // |psi+><psi+| - |psi-><psi-| = |0..0><1..1| + |1..1><0..0|.
    const double half = 0.5 * static_cast<double>(s.num_tuples());
    ComplexMatrix b(dim, dim);
    b(0, dim - 1) = half;
    b(dim - 1, 0) = half;
    return b;
}

double ghz_overlap(const DensityMatrix &rho, GhzSign sign) {
    const auto &m = rho.matrix();
    const std::size_t last = rho.dim() - 1;
    const double coherence = (m(0, last) + m(last, 0)).real();
    const double diag = (m(0, 0) + m(last, last)).real();
    return 0.5 * (diag + (sign == GhzSign::kPlus ? coherence : -coherence));
}

double quantum_value(const BellScenario &s, const DensityMatrix &rho, QuantumValuePath path) {
    check_parties(s, rho, "quantum_value");
    if (path == QuantumValuePath::kOperatorSum) {
        return trace_product(bell_operator_sum(s), rho.matrix()).real();
    }
    const double half = 0.5 * static_cast<double>(s.num_tuples());
    return half * (ghz_overlap(rho, GhzSign::kPlus) - ghz_overlap(rho, GhzSign::kMinus));
}

DensityMatrix apply_local_unitaries(const DensityMatrix &rho, std::span<const ComplexMatrix> unitaries) {
    const int n = rho.n_parties();
    if (unitaries.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("apply_local_unitaries: need one unitary per party");
    }
    ComplexMatrix m = rho.matrix();
    const std::size_t dim = rho.dim();
    for (int p = 0; p < n; ++p) {
        const auto &u = unitaries[p];
        if (u.rows() != 2 || u.cols() != 2) {
            throw std::invalid_argument("apply_local_unitaries: unitaries must be 2x2");
        }
        const std::size_t bit = std::size_t{1} << (n - 1 - p);
        for (std::size_t r0 = 0; r0 < dim; ++r0) {
            if (r0 & bit) {
                continue;
            }
            const std::size_t r1 = r0 | bit;
            for (std::size_t c = 0; c < dim; ++c) {
                const Complex a = m(r0, c);
                const Complex b = m(r1, c);
                m(r0, c) = u(0, 0) * a + u(0, 1) * b;
                m(r1, c) = u(1, 0) * a + u(1, 1) * b;
            }
        }
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c0 = 0; c0 < dim; ++c0) {
                if (c0 & bit) {
                    continue;
                }
                const std::size_t c1 = c0 | bit;
                const Complex a = m(r, c0);
                const Complex b = m(r, c1);
                m(r, c0) = a * std::conj(u(0, 0)) + b * std::conj(u(0, 1));
                m(r, c1) = a * std::conj(u(1, 0)) + b * std::conj(u(1, 1));
            }
        }
    }
    return DensityMatrix::from_trusted(std::move(m));
}

DensityMatrix untwist_phase(const DensityMatrix &rho, double alpha_n) {
    const ComplexMatrix u_dagger{{1, 0}, {0, std::polar(1.0, -alpha_n / rho.n_parties())}};
    std::vector<ComplexMatrix> factors(rho.n_parties(), u_dagger);
    return apply_local_unitaries(rho, factors);
}

double twirled_quantum_value(const BellScenario &s, const DensityMatrix &rho, double alpha_n,
                             QuantumValuePath path) {
    check_parties(s, rho, "twirled_quantum_value");
    return quantum_value(s, untwist_phase(rho, alpha_n), path);
}

CorrelationTensor::CorrelationTensor(int n_parties, std::vector<double> entries)
    : n_parties_(n_parties), entries_(std::move(entries)) {
    if (entries_.size() != (std::size_t{1} << (2 * n_parties))) {
        throw std::invalid_argument("CorrelationTensor: expected 4^N entries");
    }
}

std::size_t CorrelationTensor::index(std::span<const int> mu) const {
    if (mu.size() != static_cast<std::size_t>(n_parties_)) {
        throw std::invalid_argument("CorrelationTensor: index length must equal N");
    }
    std::size_t k = 0;
    for (int m : mu) {
        if (m < 0 || m > 3) {
            throw std::out_of_range("CorrelationTensor: index component outside [0, 3]");
        }
        k = k * 4 + static_cast<std::size_t>(m);
    }
    return k;
}

CorrelationTensor correlation_tensor(const DensityMatrix &rho) {
    const int n = rho.n_parties();
    if (n > kCorrelationTensorMaxParties) {
        throw BudgetExceeded("correlation_tensor: N = " + std::to_string(n) + " exceeds " +
                             std::to_string(kCorrelationTensorMaxParties));
    }
    const auto &m = rho.matrix();
    const std::size_t dim = rho.dim();
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<double> entries(count);
    static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t x_mask = 0;
        std::size_t y_mask = 0;
        std::size_t z_mask = 0;
        for (int p = 0; p < n; ++p) {
            const int mu = static_cast<int>((flat >> (2 * (n - 1 - p))) & 3);
            const std::size_t bit = std::size_t{1} << (n - 1 - p);
            if (mu == 1 || mu == 2) {
                x_mask |= bit;
            }
            if (mu == 2) {
                y_mask |= bit;
            }
            if (mu == 3) {
                z_mask |= bit;
            }
        }
        const int n_y = std::popcount(y_mask);
        // Tr(rho P) = sum_c rho(c ^ x, c) P(c, c ^ x); the Pauli phase is
        // i^{(#y with bit 1) - (#y with bit 0)} (-1)^{#z with bit 1}.
        Complex acc = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            const int y_ones = std::popcount(c & y_mask);
            const int z_ones = std::popcount(c & z_mask);
            Complex phase = kIPowers[((2 * y_ones - n_y) % 4 + 4) % 4];
            if (z_ones & 1) {
                phase = -phase;
            }
            acc += m(c ^ x_mask, c) * phase;
        }
        entries[flat] = acc.real();
    }
    return CorrelationTensor(n, std::move(entries));
}

double ghz_overlap_via_tensor(const DensityMatrix &rho, GhzSign sign) {
    const auto t = correlation_tensor(rho);
    const auto t_ghz = correlation_tensor(ghz_state(rho.n_parties(), sign).projector());
    double acc = 0;
    for (std::size_t k = 0; k < t.entries().size(); ++k) {
        acc += t_ghz.entries()[k] * t.entries()[k];
    }
    return std::ldexp(acc, -rho.n_parties());
}

std::vector<QubitIndexSet> full_split(int n_parties) {
    std::vector<QubitIndexSet> blocks;
    for (int p = 0; p < n_parties; ++p) {
        blocks.emplace_back(std::vector<int>{p});
    }
    return blocks;
}

std::vector<PartialTransposeCheck> partial_transpose_checks(const DensityMatrix &rho,
                                                            std::span<const QubitIndexSet> partition) {
    const int n = rho.n_parties();
    if (partition.empty() || partition.size() > 30) {
        throw std::invalid_argument("partition must contain between 1 and 30 blocks");
    }
    std::vector<std::size_t> masks;
    std::size_t covered = 0;
    for (const auto &block : partition) {
        const std::size_t mask = block.mask(n);
        if (covered & mask) {
            throw std::invalid_argument("partition blocks overlap");
        }
        covered |= mask;
        masks.push_back(mask);
    }
    if (covered != basis_dim(n) - 1) {
        throw std::invalid_argument("partition does not cover every party");
    }

    std::vector<PartialTransposeCheck> checks;
    const std::size_t p = partition.size();
    // Unions that contain block 0, excluding the full set.
    for (std::size_t choice = 0; choice + 1 < (std::size_t{1} << (p - 1)); ++choice) {
        std::vector<int> parties(partition[0].parties().begin(), partition[0].parties().end());
        for (std::size_t b = 1; b < p; ++b) {
            if ((choice >> (b - 1)) & 1) {
                parties.insert(parties.end(), partition[b].parties().begin(), partition[b].parties().end());
            }
        }
        QubitIndexSet subset(std::move(parties));
        const auto transposed = partial_transpose(rho.matrix(), subset, n);
        const double lowest = min_eigenvalue(transposed);
        checks.push_back({std::move(subset), lowest, lowest >= -psd_tolerance(transposed)});
    }
    return checks;
}

bool is_p_ppt(const DensityMatrix &rho, std::span<const QubitIndexSet> partition) {
    for (const auto &check : partial_transpose_checks(rho, partition)) {
        if (!check.positive) {
            return false;
        }
    }
    return true;
}

}  // namespace bellwb
