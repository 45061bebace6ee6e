#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace djcm {

using Complex = std::complex<double>;

/// Truncated composite space atom_A (x) atom_B (x) cavity_a (x) cavity_b, hbar = 1.
struct SpaceConfig {
    int photon_cutoff = 1;  ///< n_max, highest Fock level kept per cavity
    double omega = 1.0;     ///< atomic transition = cavity frequency
    double g = 1.0;         ///< atom-cavity coupling

    /// Throws InvalidConfig on photon_cutoff < 1, g <= 0, omega < 0 or non-finite values.
    void validate() const;
    std::size_t levels() const { return static_cast<std::size_t>(photon_cutoff) + 1; }
    std::size_t dim() const { return 4 * levels() * levels(); }
};

/// Product-basis label. Atoms: 0 = ground, 1 = excited.
struct BasisLabel {
    int atom_A = 0;
    int atom_B = 0;
    int photons_a = 0;
    int photons_b = 0;

    bool operator==(const BasisLabel&) const = default;
};

/// ((A*2 + B)*(n+1) + n_a)*(n+1) + n_b : atoms first, then cavities, as in |AB>|ab>.
std::size_t basis_index(const BasisLabel& label, const SpaceConfig& cfg);
BasisLabel basis_label(std::size_t index, const SpaceConfig& cfg);

class Ket {
public:
    explicit Ket(Eigen::VectorXcd amplitudes);
    /// Zero ket of dimension cfg.dim().
    explicit Ket(const SpaceConfig& cfg);

    static Ket basis(const BasisLabel& label, const SpaceConfig& cfg);

    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
    Complex at(const BasisLabel& label, const SpaceConfig& cfg) const;
    double norm() const { return amps_.norm(); }

    Ket& set(const BasisLabel& label, const SpaceConfig& cfg, Complex value);

private:
    Eigen::VectorXcd amps_;
};

class Operator {
public:
    explicit Operator(Eigen::MatrixXcd entries, bool hermitian = false);

    static Operator identity(std::size_t dim);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    bool hermitian() const { return hermitian_; }

    Operator operator+(const Operator& other) const;
    Operator operator*(const Operator& other) const;
    Operator operator*(Complex s) const;

private:
    Eigen::MatrixXcd m_;
    bool hermitian_ = false;
};

Ket apply(const Operator& op, const Ket& k);
Operator dagger(const Operator& op);
/// a (x) b with a as the most significant index.
Operator kron(const Operator& a, const Operator& b);
Complex expectation(const Operator& op, const Ket& k);
Complex inner(const Ket& bra, const Ket& ket);

/// Local operators embedded in the composite space.
namespace ops {
Operator sigma_minus(int atom, const SpaceConfig& cfg);  ///< atom: 0 = A, 1 = B
Operator sigma_plus(int atom, const SpaceConfig& cfg);
Operator sigma_z(int atom, const SpaceConfig& cfg);
Operator annihilate(int cavity, const SpaceConfig& cfg);  ///< cavity: 0 = a, 1 = b
Operator create(int cavity, const SpaceConfig& cfg);
Operator number(int cavity, const SpaceConfig& cfg);
/// N = a^dag a + b^dag b + (sigma_z^A + 1)/2 + (sigma_z^B + 1)/2
Operator excitation_number(const SpaceConfig& cfg);
}  // namespace ops

/// H = w a^dag a + w b^dag b + (w/2)(sz_A + sz_B) + g(a^dag s-_A + a s+_A) + g(b^dag s-_B + b s+_B).
Operator build_hamiltonian(const SpaceConfig& cfg);

/// Step count for evolve_numeric: ceil(200 * ||H||_inf * |t|), at least 1.
/// ||H||_inf (max absolute row sum) bounds the spectral radius.
std::size_t default_step_count(const Operator& h, double t);

/// psi(t) = exp(-iHt) psi0 by fixed-step classical RK4.
///
/// For a constant generator one RK4 step equals the degree-4 Taylor polynomial
/// of exp(-iHh), so the step matrix is formed once and applied `steps` times.
/// Throws IntegrationFailure if | ||psi(t)|| - ||psi0|| | > 1e-6.
Ket evolve_numeric(const Operator& h, const Ket& psi0, double t, std::size_t steps);
Ket evolve_numeric(const Operator& h, const Ket& psi0, double t);

/// psi(t) = V exp(-iDt) V^dag psi0 from the eigen-decomposition H = V D V^dag.
/// Throws DimensionMismatch, or InvalidConfig when H is not Hermitian (1e-12).
Ket evolve_spectral(const Operator& h, const Ket& psi0, double t);

/// max_i |a_i - e^{i phi} b_i| with phi chosen from the largest component of b.
double max_deviation_up_to_phase(const Ket& a, const Ket& b);

}  // namespace djcm
