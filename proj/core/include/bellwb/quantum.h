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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bellwb/linalg.h"
#include "bellwb/scenario.h"

namespace bellwb {

enum class GhzSign { kPlus, kMinus };

class DensityMatrix;

/// Unit-norm N-qubit state vector; party 0 is the most significant bit.
class PureState {
   public:
    /// Throws InvalidState unless the length is 2^n_parties and the norm is 1 within 1e-12.
    PureState(int n_parties, std::vector<Complex> amplitudes);

    int n_parties() const { return n_parties_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    DensityMatrix projector() const;

   private:
    int n_parties_;
    std::vector<Complex> amplitudes_;
};

/// Validated N-qubit density matrix.
///
/// Invariants: Hermitian within 1e-12 (relative to max(1, ||rho||)), unit
/// trace within 1e-10, smallest eigenvalue >= -1e-10.
class DensityMatrix {
   public:
    /// Validates and throws InvalidState on any violated invariant.
    static DensityMatrix from_matrix(ComplexMatrix m);
    /// Skips the eigenvalue check; for matrices built by construction.
    static DensityMatrix from_trusted(ComplexMatrix m);

    static DensityMatrix maximally_mixed(int n_parties);

    int n_parties() const { return n_parties_; }
    const ComplexMatrix &matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

   private:
    DensityMatrix(int n_parties, ComplexMatrix m) : n_parties_(n_parties), matrix_(std::move(m)) {}

    int n_parties_;
    ComplexMatrix matrix_;
};

/// 2x2 observable cos(phi) sigma_x + sin(phi) sigma_y.
ComplexMatrix equatorial_observable(double phi);

/// (|0...0> +- |1...1>) / sqrt(2).
PureState ghz_state(int n_parties, GhzSign sign);
/// cos(alpha) |0...0> + sin(alpha) |1...1>.
PureState generalized_ghz(int n_parties, double alpha);
/// Tensor product of single-qubit states given as (amp0, amp1) pairs.
PureState product_state(std::span<const std::array<Complex, 2>> qubits);

/// Dur's bound entangled family
///   rho_N = 1/(N+1) (|phi><phi| + 1/2 sum_k (P_k + P~_k)),
///   |phi> = (|0...0> + e^{i alpha_N} |1...1>) / sqrt(2),
/// with P_k projecting on the basis state with a single 1 at party k and P~_k
/// on its bitwise complement. Throws std::invalid_argument for N < 3.
DensityMatrix dur_state(int n_parties, double alpha_n = 0.0);

/// Largest M^N * 4^N accepted by bell_operator_sum.
inline constexpr std::size_t kOperatorSumBudget = std::size_t{1} << 28;

/// sum_m c_m  (m_1 . sigma) (x) ... (x) (m_N . sigma), summed in fixed-size
/// chunks combined pairwise. Throws BudgetExceeded beyond kOperatorSumBudget.
ComplexMatrix bell_operator_sum(const BellScenario &s);

/// (M^N / 2) (|psi+><psi+| - |psi-><psi-|).
ComplexMatrix bell_operator_closed(const BellScenario &s);

enum class QuantumValuePath { kClosedForm, kOperatorSum };

/// Tr(B rho). The closed form only reads the |0...0>/|1...1> coherence;
/// kOperatorSum contracts rho with bell_operator_sum instead.
double quantum_value(const BellScenario &s, const DensityMatrix &rho,
                     QuantumValuePath path = QuantumValuePath::kClosedForm);

/// (U (x) ... (x) U)^dagger rho (U (x) ... (x) U) for U = diag(1, e^{i alpha_N / N}).
DensityMatrix untwist_phase(const DensityMatrix &rho, double alpha_n);

/// Tr(B~ rho) with B~ = U^{(x)N} B U^{dagger (x)N}, U = diag(1, e^{i alpha_N / N}).
double twirled_quantum_value(const BellScenario &s, const DensityMatrix &rho, double alpha_n,
                             QuantumValuePath path = QuantumValuePath::kClosedForm);

/// W (x) ... (x) W applied as W rho W^dagger with one 2x2 unitary per party.
DensityMatrix apply_local_unitaries(const DensityMatrix &rho, std::span<const ComplexMatrix> unitaries);

/// Largest N accepted by correlation_tensor.
inline constexpr int kCorrelationTensorMaxParties = 8;

/// T_{mu_1...mu_N} = Tr[rho (sigma_mu1 (x) ... (x) sigma_muN)], mu in {0: I, 1: x, 2: y, 3: z}.
class CorrelationTensor {
   public:
    CorrelationTensor(int n_parties, std::vector<double> entries);

    int n_parties() const { return n_parties_; }
    std::span<const double> entries() const { return entries_; }
    /// Flattened index; party 0 is the most significant base-4 digit.
    std::size_t index(std::span<const int> mu) const;
    double at(std::span<const int> mu) const { return entries_[index(mu)]; }
    double at(std::initializer_list<int> mu) const {
        return at(std::span<const int>(mu.begin(), mu.size()));
    }

   private:
    int n_parties_;
    std::vector<double> entries_;
};

CorrelationTensor correlation_tensor(const DensityMatrix &rho);

/// <psi+-| rho |psi+->.
double ghz_overlap(const DensityMatrix &rho, GhzSign sign);
/// The same overlap evaluated as 2^{-N} sum_mu T^{+-}_mu T_mu.
double ghz_overlap_via_tensor(const DensityMatrix &rho, GhzSign sign);

/// One partial transposition checked by is_p_ppt.
struct PartialTransposeCheck {
    QubitIndexSet transposed;
    double min_eigenvalue;
    bool positive;
};

/// N singleton blocks.
std::vector<QubitIndexSet> full_split(int n_parties);

/// Partial transposes over every union of partition blocks, one representative
/// per complementary pair (the union containing block 0). Throws
/// std::invalid_argument unless `partition` is a disjoint cover of the parties.
std::vector<PartialTransposeCheck> partial_transpose_checks(const DensityMatrix &rho,
                                                            std::span<const QubitIndexSet> partition);

bool is_p_ppt(const DensityMatrix &rho, std::span<const QubitIndexSet> partition);

}  // namespace bellwb
