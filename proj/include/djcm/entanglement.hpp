#pragma once

#include <array>
#include <random>

#include <Eigen/Dense>

#include "djcm/analytic.hpp"
#include "djcm/hilbert.hpp"
#include "djcm/pairs.hpp"

namespace djcm {

/// Two-qubit density matrix in the product basis |00>,|01>,|10>,|11> of (first, second).
class DensityMatrix {
public:
    /// Validates Hermiticity (1e-12), unit trace (1e-12) and eigenvalues >= -1e-10.
    /// Throws InvalidDensityMatrix otherwise.
    DensityMatrix(const Eigen::Matrix4cd& entries, QubitPair labels);

    const Eigen::Matrix4cd& matrix() const { return rho_; }
    const QubitPair& labels() const { return labels_; }

    double trace() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }
    /// Ascending eigenvalues.
    Eigen::Vector4d eigenvalues() const;

private:
    Eigen::Matrix4cd rho_;
    QubitPair labels_;
};

/// Partial trace of a pure global state onto an ordered qubit pair.
///
/// Kept cavities are truncated to Fock levels {0, 1}; population above level 1 on a
/// kept cavity beyond 1e-10 raises CavitySupportError. The ket must be normalized to
/// within 1e-6; the result is divided by its trace.
DensityMatrix reduce(const Ket& state, QubitPair pair, const SpaceConfig& cfg);

/// Wootters concurrence max[0, s1 - s2 - s3 - s4], s_i = sqrt(lambda_i), lambda_i the
/// descending eigenvalues of rho (sy (x) sy) rho* (sy (x) sy), conjugation in the
/// computational basis.
///
/// Evaluated through the Hermitian route: s_i are the singular values of
/// tau = W^T (sy (x) sy) W with rho = W W^dag from the eigen-decomposition of rho,
/// i.e. s_i^2 are the eigenvalues of sqrt(rho) rho~ sqrt(rho). Eigenvalues of rho in
/// [-1e-10, 1e-14] are treated as zero.
double wootters_concurrence(const DensityMatrix& rho);

/// lambda_1 >= ... >= lambda_4, the spectrum of rho rho~.
Eigen::Vector4d spin_flip_spectrum(const DensityMatrix& rho);

/// Concurrences of all six pairs of a global pure state, in sextet order.
ConcurrenceSextet sextet_from_state(const Ket& state, const SpaceConfig& cfg);

/// Haar-random 2x2 unitary (QR of a complex Ginibre matrix with phase fix).
Eigen::Matrix2cd random_unitary(std::mt19937_64& rng);

/// (u1 (x) u2) rho (u1 (x) u2)^dag, same labels.
DensityMatrix apply_local(const DensityMatrix& rho, const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2);

}  // namespace djcm
