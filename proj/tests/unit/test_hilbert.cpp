#include <doctest.h>

#include <cmath>

#include "djcm/analytic.hpp"
#include "djcm/error.hpp"
#include "djcm/hilbert.hpp"

using namespace djcm;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("basis index is the documented bijection") {
    for (int n = 1; n <= 3; ++n) {
        SpaceConfig cfg;
        cfg.photon_cutoff = n;
        for (std::size_t i = 0; i < cfg.dim(); ++i) CHECK(basis_index(basis_label(i, cfg), cfg) == i);
    }
    SpaceConfig cfg;
    CHECK(basis_index({1, 0, 0, 1}, cfg) == 9);
    CHECK(basis_index({0, 1, 1, 0}, cfg) == 6);
}

TEST_CASE("config validation") {
    SpaceConfig cfg;
    cfg.photon_cutoff = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.g = 0.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.omega = -1.0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
    cfg = {};
    cfg.omega = NAN;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
}

TEST_CASE("kets reject non-finite entries") {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    v(0) = Complex(NAN, 0);
    CHECK_THROWS(Ket(v));
}

TEST_CASE("operator algebra") {
    const Operator i2 = Operator::identity(2);
    CHECK(max_abs(kron(i2, i2).matrix() - Eigen::MatrixXcd::Identity(4, 4)) == 0.0);

    SpaceConfig cfg;
    cfg.photon_cutoff = 2;
    const Operator a = ops::annihilate(0, cfg);
    CHECK(max_abs(dagger(dagger(a)).matrix() - a.matrix()) == 0.0);

    const Ket k = Ket::basis({1, 0, 0, 1}, cfg);
    const Ket up = apply(ops::create(0, cfg), k);
    CHECK(std::abs(up.at({1, 0, 1, 1}, cfg) - Complex(1.0)) < 1e-15);
    CHECK(up.norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(apply(Operator::identity(4), k), DimensionMismatch);
    CHECK_THROWS_AS(Operator(Eigen::MatrixXcd::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("hamiltonian matrix elements") {
    SpaceConfig cfg;
    cfg.omega = 0.0;
    const Operator h0 = build_hamiltonian(cfg);
    CHECK(h0.hermitian());
    const auto i = static_cast<Eigen::Index>(basis_index({1, 0, 0, 0}, cfg));
    const auto j = static_cast<Eigen::Index>(basis_index({0, 0, 1, 0}, cfg));
    CHECK(h0.matrix()(i, j) == Complex(1.0));
    CHECK(h0.matrix()(j, i) == Complex(1.0));

    cfg.omega = 1.0;
    const Operator h = build_hamiltonian(cfg);
    const Ket ground = Ket::basis({0, 0, 0, 0}, cfg);
    const Ket hg = apply(h, ground);
    CHECK(max_abs(hg.amplitudes() + ground.amplitudes()) < 1e-15);
}

TEST_CASE("hamiltonian commutes with the excitation number") {
    SpaceConfig cfg;
    cfg.photon_cutoff = 2;
    cfg.g = 0.5;
    const Eigen::MatrixXcd h = build_hamiltonian(cfg).matrix();
    const Eigen::MatrixXcd n = ops::excitation_number(cfg).matrix();
    CHECK(max_abs(h * n - n * h) <= 1e-12);
}

TEST_CASE("numeric evolution") {
    SpaceConfig cfg;
    SUBCASE("g = 0 only adds phases") {
        cfg.g = 1e-300;
        const Operator h = build_hamiltonian(cfg);
        const Ket k0 = psi_state(Angle(0.4), 0.0, cfg);
        const Ket k = evolve_numeric(h, k0, 2.3);
        for (std::size_t i = 0; i < k.dim(); ++i) CHECK(std::abs(std::abs(k[i]) - std::abs(k0[i])) <= 1e-12);
    }
    SUBCASE("excitation moves to the cavities at gt = pi/2") {
        const Operator h = build_hamiltonian(cfg);
        const Ket k = evolve_numeric(h, psi_state(Angle::quarter_pi(), 0.0, cfg), kPi / 2);
        CHECK(std::abs(k.at({1, 0, 0, 0}, cfg)) <= 1e-8);
        CHECK(std::abs(k.at({0, 1, 0, 0}, cfg)) <= 1e-8);
        CHECK(std::abs(k.at({0, 0, 1, 0}, cfg)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
    }
    SUBCASE("period returns the populations") {
        const Operator h = build_hamiltonian(cfg);
        const Ket k0 = psi_state(Angle(0.3), 0.0, cfg);
        const Ket k = evolve_numeric(h, k0, kPi);
        for (std::size_t i = 0; i < k.dim(); ++i) CHECK(std::abs(std::abs(k[i]) - std::abs(k0[i])) <= 1e-8);
    }
    SUBCASE("norm, energy and excitation number are conserved") {
        for (double g : {0.5, 1.0, 2.0}) {
            cfg.g = g;
            const Operator h = build_hamiltonian(cfg);
            const Operator n = ops::excitation_number(cfg);
            const Ket k0 = phi_state(Angle(0.5), 0.0, 0.0, cfg);
            const double e0 = expectation(h, k0).real();
            const double n0 = expectation(n, k0).real();
            Ket k = k0;
            for (int s = 0; s < 5; ++s) {
                k = evolve_numeric(h, k, 0.7);
                CHECK(std::abs(k.norm() - 1.0) <= 1e-9);
                CHECK(std::abs(expectation(h, k).real() - e0) <= 1e-8 * std::max(1.0, std::abs(e0)));
                CHECK(std::abs(expectation(n, k).real() - n0) <= 1e-10);
            }
        }
    }
    SUBCASE("too few steps trips the norm guard") {
        const Operator h = build_hamiltonian(cfg);
        CHECK_THROWS_AS(evolve_numeric(h, psi_state(Angle(0.3), 0.0, cfg), 50.0, 10), IntegrationFailure);
    }
    SUBCASE("zero time is the identity") {
        const Operator h = build_hamiltonian(cfg);
        const Ket k0 = psi_state(Angle(0.3), 0.0, cfg);
        CHECK(max_deviation_up_to_phase(evolve_numeric(h, k0, 0.0), k0) == 0.0);
    }
}

TEST_CASE("step count rule") {
    SpaceConfig cfg;
    const Operator h = build_hamiltonian(cfg);
    const double norm = h.matrix().cwiseAbs().rowwise().sum().maxCoeff();
    CHECK(default_step_count(h, 1.0) == static_cast<std::size_t>(std::ceil(200.0 * norm)));
    CHECK(default_step_count(h, 0.0) == 1);
}

TEST_CASE("deviation up to a global phase") {
    SpaceConfig cfg;
    const Ket a = psi_state(Angle(0.3), 0.4, cfg);
    const Ket b(a.amplitudes() * std::polar(1.0, 1.1));
    CHECK(max_deviation_up_to_phase(a, b) <= 1e-15);
    CHECK(max_deviation_up_to_phase(a, Ket::basis({0, 0, 0, 0}, cfg)) > 0.1);
}

TEST_CASE("spectral propagator agrees with RK4") {
    SpaceConfig cfg;
    cfg.photon_cutoff = 2;
    cfg.omega = 1.7;
    const Operator h = build_hamiltonian(cfg);
    const Ket k0 = phi_state(Angle(0.8), 0.0, 0.0, cfg);
    for (double t : {0.3, 2.0, 6.1}) {
        const Ket a = evolve_spectral(h, k0, t);
        CHECK(std::abs(a.norm() - 1.0) <= 1e-13);
        CHECK(max_deviation_up_to_phase(a, evolve_numeric(h, k0, t)) <= 1e-9);
        CHECK(max_deviation_up_to_phase(a, phi_state(Angle(0.8), cfg.g * t, cfg.omega * t, cfg)) <= 1e-12);
    }
    CHECK_THROWS_AS(evolve_spectral(Operator(Eigen::MatrixXcd::Ones(36, 36) * Complex(0, 1)), k0, 1.0), InvalidConfig);
}
