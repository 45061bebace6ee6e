#include "djcm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "djcm/error.hpp"

namespace djcm {
namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kRankTol = 1e-14;

int slot_of(Qubit q) {
    switch (q) {
        case Qubit::A: return 0;
        case Qubit::B: return 1;
        case Qubit::a: return 2;
        case Qubit::b: return 3;
    }
    return 0;
}

Eigen::Matrix4cd spin_flip() {
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

}  // namespace

DensityMatrix::DensityMatrix(const Eigen::Matrix4cd& entries, QubitPair labels)
    : rho_(entries), labels_(labels) {
    if (!rho_.allFinite()) throw InvalidDensityMatrix("density matrix has non-finite entries");
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol) {
        throw InvalidDensityMatrix("density matrix not Hermitian: max |rho - rho^dag| = " +
                                   std::to_string(herm));
    }
    if (std::abs(trace() - 1.0) > kTraceTol) {
        throw InvalidDensityMatrix("density matrix trace " + std::to_string(trace()) + " != 1");
    }
    if (eigenvalues()(0) < -kPsdTol) {
        throw InvalidDensityMatrix("density matrix not positive semidefinite: min eigenvalue " +
                                   std::to_string(eigenvalues()(0)));
    }
}

Eigen::Vector4d DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

DensityMatrix reduce(const Ket& state, QubitPair pair, const SpaceConfig& cfg) {
    cfg.validate();
    if (state.dim() != cfg.dim()) throw DimensionMismatch("reduce: ket does not match the space");
    const double norm = state.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw Error("reduce: state not normalized (norm " + std::to_string(norm) + ")");
    }

    const int keep1 = slot_of(pair.first);
    const int keep2 = slot_of(pair.second);
    int rest[2];
    int nr = 0;
    for (int s = 0; s < 4; ++s) {
        if (s != keep1 && s != keep2) rest[nr++] = s;
    }
    const auto L = static_cast<int>(cfg.levels());
    const int dims[4] = {2, 2, L, L};

    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(4, dims[rest[0]] * dims[rest[1]]);
    double leak = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const Complex amp = state[i];
        if (amp == Complex(0.0)) continue;
        const BasisLabel l = basis_label(i, cfg);
        const int lvl[4] = {l.atom_A, l.atom_B, l.photons_a, l.photons_b};
        if (lvl[keep1] > 1 || lvl[keep2] > 1) {
            leak += std::norm(amp);
            continue;
        }
        psi(lvl[keep1] * 2 + lvl[keep2], lvl[rest[0]] * dims[rest[1]] + lvl[rest[1]]) = amp;
    }
    if (leak > 1e-10) {
        throw CavitySupportError("reduce: kept cavity population above Fock level 1 is " +
                                 std::to_string(leak));
    }

    Eigen::Matrix4cd rho = psi * psi.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return DensityMatrix(rho, pair);
}

namespace {

// Singular values of tau = W^T Y W, descending, padded to length 4.
Eigen::Vector4d flip_singular_values(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix());
    if (es.info() != Eigen::Success) throw Error("wootters_concurrence: eigen-solver failed");
    const Eigen::Vector4d mu = es.eigenvalues();
    if (mu(0) < -kPsdTol) throw InvalidDensityMatrix("wootters_concurrence: rho not PSD");

    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < 4; ++k) {
        if (mu(k) > kRankTol) kept.push_back(k);
    }
    Eigen::Vector4d s = Eigen::Vector4d::Zero();
    if (kept.empty()) return s;

    Eigen::MatrixXcd w(4, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t j = 0; j < kept.size(); ++j) {
        w.col(static_cast<Eigen::Index>(j)) = std::sqrt(mu(kept[j])) * es.eigenvectors().col(kept[j]);
    }
    const Eigen::MatrixXcd tau = w.transpose() * spin_flip() * w;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
    const Eigen::VectorXd sv = svd.singularValues();  // descending
    for (Eigen::Index k = 0; k < sv.size(); ++k) s(k) = sv(k);
    return s;
}

}  // namespace

Eigen::Vector4d spin_flip_spectrum(const DensityMatrix& rho) {
    return flip_singular_values(rho).cwiseAbs2();
}

double wootters_concurrence(const DensityMatrix& rho) {
    const Eigen::Vector4d s = flip_singular_values(rho);
    return std::clamp(s(0) - s(1) - s(2) - s(3), 0.0, 1.0);
}

ConcurrenceSextet sextet_from_state(const Ket& state, const SpaceConfig& cfg) {
    ConcurrenceSextet out;
    for (Pair p : kAllPairs) out[p] = wootters_concurrence(reduce(state, QubitPair(p), cfg));
    return out;
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd z;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) z(i, j) = Complex(n(rng), n(rng));
    }
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
        const double m = std::abs(r(j, j));
        if (m > 0.0) q.col(j) *= r(j, j) / m;
    }
    return q;
}

DensityMatrix apply_local(const DensityMatrix& rho, const Eigen::Matrix2cd& u1, const Eigen::Matrix2cd& u2) {
    Eigen::Matrix4cd u;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) u.block<2, 2>(2 * i, 2 * j) = u1(i, j) * u2;
    }
    Eigen::Matrix4cd out = u * rho.matrix() * u.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(out, rho.labels());
}

}  // namespace djcm
