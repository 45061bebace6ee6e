#pragma once

// Test-only reference implementations, deliberately written the slow obvious way.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "djcm/hilbert.hpp"
#include "djcm/pairs.hpp"

namespace oracle {

inline int level(const djcm::BasisLabel& l, djcm::Qubit q) {
    switch (q) {
        case djcm::Qubit::A: return l.atom_A;
        case djcm::Qubit::B: return l.atom_B;
        case djcm::Qubit::a: return l.photons_a;
        case djcm::Qubit::b: return l.photons_b;
    }
    return 0;
}

/// Full |psi><psi|, then sum over every basis pair that agrees on the traced-out factors.
inline Eigen::Matrix4cd partial_trace(const djcm::Ket& psi, djcm::Qubit q1, djcm::Qubit q2,
                                      const djcm::SpaceConfig& cfg) {
    const Eigen::VectorXcd& v = psi.amplitudes();
    const Eigen::MatrixXcd full = v * v.adjoint();
    std::vector<djcm::Qubit> rest;
    for (djcm::Qubit q : djcm::kAllQubits) {
        if (q != q1 && q != q2) rest.push_back(q);
    }
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    const auto n = static_cast<std::size_t>(v.size());
    for (std::size_t i = 0; i < n; ++i) {
        const djcm::BasisLabel li = djcm::basis_label(i, cfg);
        for (std::size_t j = 0; j < n; ++j) {
            const djcm::BasisLabel lj = djcm::basis_label(j, cfg);
            bool same = true;
            for (djcm::Qubit r : rest) same = same && level(li, r) == level(lj, r);
            if (!same) continue;
            const int r1 = level(li, q1), r2 = level(li, q2), c1 = level(lj, q1), c2 = level(lj, q2);
            if (r1 > 1 || r2 > 1 || c1 > 1 || c2 > 1) continue;
            rho(r1 * 2 + r2, c1 * 2 + c2) += full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return rho;
}

/// Textbook Wootters: general complex eigen-solver on rho * rho~.
inline double concurrence(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd tilde = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho * tilde);
    std::vector<double> s;
    for (int i = 0; i < 4; ++i) s.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
    std::sort(s.rbegin(), s.rend());
    return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

}  // namespace oracle
