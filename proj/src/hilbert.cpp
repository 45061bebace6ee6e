#include "djcm/hilbert.hpp"

#include <cmath>
#include <string>

#include "djcm/error.hpp"

namespace djcm {

void SpaceConfig::validate() const {
    if (photon_cutoff < 1) {
        throw InvalidConfig("photon cutoff must be >= 1, got " + std::to_string(photon_cutoff));
    }
    if (!std::isfinite(g) || g <= 0.0) throw InvalidConfig("coupling g must be finite and > 0");
    if (!std::isfinite(omega) || omega < 0.0) {
        throw InvalidConfig("omega must be finite and >= 0");
    }
}

std::size_t basis_index(const BasisLabel& l, const SpaceConfig& cfg) {
    const int n = cfg.photon_cutoff;
    if (l.atom_A < 0 || l.atom_A > 1 || l.atom_B < 0 || l.atom_B > 1 || l.photons_a < 0 ||
        l.photons_a > n || l.photons_b < 0 || l.photons_b > n) {
        throw DimensionMismatch("basis label outside the truncated space");
    }
    const std::size_t L = cfg.levels();
    return ((static_cast<std::size_t>(l.atom_A) * 2 + static_cast<std::size_t>(l.atom_B)) * L +
            static_cast<std::size_t>(l.photons_a)) *
               L +
           static_cast<std::size_t>(l.photons_b);
}

BasisLabel basis_label(std::size_t index, const SpaceConfig& cfg) {
    if (index >= cfg.dim()) throw DimensionMismatch("basis index out of range");
    const std::size_t L = cfg.levels();
    BasisLabel l;
    l.photons_b = static_cast<int>(index % L);
    index /= L;
    l.photons_a = static_cast<int>(index % L);
    index /= L;
    l.atom_B = static_cast<int>(index % 2);
    l.atom_A = static_cast<int>(index / 2);
    return l;
}

// ---------------------------------------------------------------------------

Ket::Ket(Eigen::VectorXcd amplitudes) : amps_(std::move(amplitudes)) {
    if (!amps_.allFinite()) throw Error("Ket: non-finite amplitude");
}

Ket::Ket(const SpaceConfig& cfg) : amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(cfg.dim()))) {}

Ket Ket::basis(const BasisLabel& label, const SpaceConfig& cfg) {
    Ket k(cfg);
    k.set(label, cfg, 1.0);
    return k;
}

Complex Ket::at(const BasisLabel& label, const SpaceConfig& cfg) const {
    if (dim() != cfg.dim()) throw DimensionMismatch("Ket::at: ket does not match the space");
    return amps_[static_cast<Eigen::Index>(basis_index(label, cfg))];
}

Ket& Ket::set(const BasisLabel& label, const SpaceConfig& cfg, Complex value) {
    if (dim() != cfg.dim()) throw DimensionMismatch("Ket::set: ket does not match the space");
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Error("Ket::set: non-finite amplitude");
    }
    amps_[static_cast<Eigen::Index>(basis_index(label, cfg))] = value;
    return *this;
}

// ---------------------------------------------------------------------------

Operator::Operator(Eigen::MatrixXcd entries, bool hermitian)
    : m_(std::move(entries)), hermitian_(hermitian) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("Operator: matrix must be square");
    if (!m_.allFinite()) throw Error("Operator: non-finite entry");
    if (hermitian_ && (m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw Error("Operator: flagged Hermitian but |M - M^dag| > 1e-12");
    }
}

Operator Operator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(Eigen::MatrixXcd::Identity(n, n), true);
}

Operator Operator::operator+(const Operator& other) const {
    if (dim() != other.dim()) throw DimensionMismatch("Operator sum: dimension mismatch");
    return Operator(m_ + other.m_, hermitian_ && other.hermitian_);
}

Operator Operator::operator*(const Operator& other) const {
    if (dim() != other.dim()) throw DimensionMismatch("Operator product: dimension mismatch");
    return Operator(m_ * other.m_);
}

Operator Operator::operator*(Complex s) const {
    return Operator(m_ * s, hermitian_ && s.imag() == 0.0);
}

Ket apply(const Operator& op, const Ket& k) {
    if (op.dim() != k.dim()) throw DimensionMismatch("apply: operator and ket dimensions differ");
    return Ket(op.matrix() * k.amplitudes());
}

Operator dagger(const Operator& op) { return Operator(op.matrix().adjoint(), op.hermitian()); }

Operator kron(const Operator& a, const Operator& b) {
    const Eigen::MatrixXcd& x = a.matrix();
    const Eigen::MatrixXcd& y = b.matrix();
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return Operator(std::move(out), a.hermitian() && b.hermitian());
}

Complex expectation(const Operator& op, const Ket& k) {
    if (op.dim() != k.dim()) throw DimensionMismatch("expectation: dimension mismatch");
    return k.amplitudes().dot(op.matrix() * k.amplitudes());
}

Complex inner(const Ket& bra, const Ket& ket) {
    if (bra.dim() != ket.dim()) throw DimensionMismatch("inner: dimension mismatch");
    return bra.amplitudes().dot(ket.amplitudes());
}

// ---------------------------------------------------------------------------

namespace ops {
namespace {

// Embed a local operator on subsystem `slot` (0=A, 1=B, 2=a, 3=b).
Operator embed(const Eigen::MatrixXcd& local, int slot, const SpaceConfig& cfg) {
    cfg.validate();
    const auto L = static_cast<std::size_t>(cfg.levels());
    const std::size_t dims[4] = {2, 2, L, L};
    Operator out = slot == 0 ? Operator(local) : Operator::identity(dims[0]);
    for (int s = 1; s < 4; ++s) {
        out = kron(out, s == slot ? Operator(local) : Operator::identity(dims[s]));
    }
    return out;
}

Eigen::MatrixXcd lowering_atom() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;  // |g><e|
    return m;
}

Eigen::MatrixXcd lowering_field(const SpaceConfig& cfg) {
    const auto L = static_cast<Eigen::Index>(cfg.levels());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(L, L);
    for (Eigen::Index n = 1; n < L; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return m;
}

void check_index(int i, const char* what) {
    if (i != 0 && i != 1) throw DimensionMismatch(std::string(what) + " index must be 0 or 1");
}

}  // namespace

Operator sigma_minus(int atom, const SpaceConfig& cfg) {
    check_index(atom, "atom");
    return embed(lowering_atom(), atom, cfg);
}

Operator sigma_plus(int atom, const SpaceConfig& cfg) { return dagger(sigma_minus(atom, cfg)); }

Operator sigma_z(int atom, const SpaceConfig& cfg) {
    check_index(atom, "atom");
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(2, 2);
    z(0, 0) = -1.0;
    z(1, 1) = 1.0;
    return Operator(embed(z, atom, cfg).matrix(), true);
}

Operator annihilate(int cavity, const SpaceConfig& cfg) {
    check_index(cavity, "cavity");
    return embed(lowering_field(cfg), 2 + cavity, cfg);
}

Operator create(int cavity, const SpaceConfig& cfg) { return dagger(annihilate(cavity, cfg)); }

Operator number(int cavity, const SpaceConfig& cfg) {
    return Operator((create(cavity, cfg) * annihilate(cavity, cfg)).matrix(), true);
}

Operator excitation_number(const SpaceConfig& cfg) {
    const auto d = static_cast<Eigen::Index>(cfg.dim());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd n = number(0, cfg).matrix() + number(1, cfg).matrix() +
                         0.5 * (sigma_z(0, cfg).matrix() + id) + 0.5 * (sigma_z(1, cfg).matrix() + id);
    return Operator(std::move(n), true);
}

}  // namespace ops

Operator build_hamiltonian(const SpaceConfig& cfg) {
    cfg.validate();
    using namespace ops;
    const double w = cfg.omega;
    const double g = cfg.g;
    Eigen::MatrixXcd h = w * (number(0, cfg).matrix() + number(1, cfg).matrix()) +
                         0.5 * w * (sigma_z(0, cfg).matrix() + sigma_z(1, cfg).matrix());
    for (int k = 0; k < 2; ++k) {
        h += g * (create(k, cfg) * sigma_minus(k, cfg)).matrix();
        h += g * (annihilate(k, cfg) * sigma_plus(k, cfg)).matrix();
    }
    return Operator(std::move(h), true);
}

std::size_t default_step_count(const Operator& h, double t) {
    const double bound = h.matrix().cwiseAbs().rowwise().sum().maxCoeff();
    const double steps = std::ceil(200.0 * bound * std::abs(t));
    return steps < 1.0 ? 1 : static_cast<std::size_t>(steps);
}

Ket evolve_numeric(const Operator& h, const Ket& psi0, double t, std::size_t steps) {
    if (h.dim() != psi0.dim()) throw DimensionMismatch("evolve_numeric: H and psi0 dimensions differ");
    if (!h.hermitian()) throw Error("evolve_numeric: Hamiltonian must be Hermitian");
    if (steps == 0) throw Error("evolve_numeric: steps must be positive");
    if (t == 0.0) return psi0;

    const auto d = static_cast<Eigen::Index>(h.dim());
    const double dt = t / static_cast<double>(steps);
    const Eigen::MatrixXcd k = Complex(0.0, -dt) * h.matrix();
    // RK4 on psi' = -iH psi: psi_{n+1} = (1 + K + K^2/2 + K^3/6 + K^4/24) psi_n, K = -iH dt.
    Eigen::MatrixXcd step = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
    for (int order = 1; order <= 4; ++order) {
        term = (term * k) / static_cast<double>(order);
        step += term;
    }

    Eigen::VectorXcd psi = psi0.amplitudes();
    Eigen::VectorXcd next(d);
    for (std::size_t n = 0; n < steps; ++n) {
        next.noalias() = step * psi;
        psi.swap(next);
    }
    const double drift = std::abs(psi.norm() - psi0.norm());
    if (!(drift <= 1e-6)) {
        throw IntegrationFailure("evolve_numeric: norm drift " + std::to_string(drift) +
                                 " exceeds 1e-6; increase the step count");
    }
    return Ket(std::move(psi));
}

Ket evolve_numeric(const Operator& h, const Ket& psi0, double t) {
    return evolve_numeric(h, psi0, t, default_step_count(h, t));
}

Ket evolve_spectral(const Operator& h, const Ket& psi0, double t) {
    if (h.dim() != psi0.dim()) throw DimensionMismatch("evolve_spectral: dimension mismatch");
    const Eigen::MatrixXcd& m = h.matrix();
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw InvalidConfig("evolve_spectral: H is not Hermitian");
    if (t == 0.0) return psi0;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    const Eigen::VectorXcd phases =
        es.eigenvalues().unaryExpr([t](double e) { return std::polar(1.0, -e * t); });
    const Eigen::VectorXcd c = es.eigenvectors().adjoint() * psi0.amplitudes();
    return Ket(es.eigenvectors() * phases.cwiseProduct(c));
}

double max_deviation_up_to_phase(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_deviation_up_to_phase: dimension mismatch");
    const Complex overlap = b.amplitudes().dot(a.amplitudes());
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    return (a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff();
}

}  // namespace djcm
