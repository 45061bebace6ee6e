#include "djcm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace djcm {

std::string_view name(Family f) { return f == Family::psi ? "psi" : "phi"; }

Family family_from_name(std::string_view s) {
    if (s == "psi") return Family::psi;
    if (s == "phi") return Family::phi;
    throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected psi or phi)");
}

void check_alpha(const Angle& alpha) {
    const double a = alpha.radians();
    if (!(a >= -1e-15 && a <= kPi / 2.0 + 1e-15)) {
        throw std::domain_error("alpha must lie in [0, pi/2], got " + alpha.to_string());
    }
}

double initial_concurrence(const Angle& alpha) { return std::abs(alpha.sin2()); }

double ConcurrenceSextet::sum_of_squares() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return s;
}

PsiCoefficients psi_coefficients(const Angle& alpha, double gt) {
    check_alpha(alpha);
    const double ca = alpha.cos();
    const double sa = alpha.sin();
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    const Complex mi(0.0, -1.0);
    return {ca * c, sa * c, mi * (ca * s), mi * (sa * s)};
}

PhiCoefficients phi_coefficients(const Angle& alpha, double gt, double omega_t) {
    check_alpha(alpha);
    const double ca = alpha.cos();
    const double sa = alpha.sin();
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    const Complex em = std::polar(1.0, -omega_t);
    const Complex ep = std::polar(1.0, omega_t);
    const Complex mi(0.0, -1.0);
    PhiCoefficients y;
    y.y1 = em * (ca * c * c);
    y.y2 = ep * sa;
    y.y3 = mi * em * (ca * s * c);
    y.y4 = y.y3;
    y.y5 = -em * (ca * s * s);
    return y;
}

Ket psi_state(const Angle& alpha, double gt, const SpaceConfig& cfg) {
    const PsiCoefficients x = psi_coefficients(alpha, gt);
    Ket k(cfg);
    k.set({1, 0, 0, 0}, cfg, x.x1);
    k.set({0, 1, 0, 0}, cfg, x.x2);
    k.set({0, 0, 1, 0}, cfg, x.x3);
    k.set({0, 0, 0, 1}, cfg, x.x4);
    return k;
}

Ket phi_state(const Angle& alpha, double gt, double omega_t, const SpaceConfig& cfg) {
    const PhiCoefficients y = phi_coefficients(alpha, gt, omega_t);
    Ket k(cfg);
    k.set({1, 1, 0, 0}, cfg, y.y1);
    k.set({0, 0, 0, 0}, cfg, y.y2);
    k.set({1, 0, 0, 1}, cfg, y.y3);
    k.set({0, 1, 1, 0}, cfg, y.y4);
    k.set({0, 0, 1, 1}, cfg, y.y5);
    return k;
}

Ket initial_state(Family family, const Angle& alpha, const SpaceConfig& cfg) {
    return family == Family::psi ? psi_state(alpha, 0.0, cfg) : phi_state(alpha, 0.0, 0.0, cfg);
}

ConcurrenceSextet psi_concurrences(const Angle& alpha, double gt) {
    check_alpha(alpha);
    const double c0 = initial_concurrence(alpha);
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    const double s2 = std::abs(std::sin(2.0 * gt));
    ConcurrenceSextet out;
    out.alpha = alpha.radians();
    out.gt = gt;
    out.family = Family::psi;
    out[Pair::AB] = c0 * c * c;
    out[Pair::ab] = c0 * s * s;
    out[Pair::Aa] = alpha.cos_sq() * s2;
    out[Pair::Ab] = std::abs(alpha.sin2() * s * c);
    out[Pair::aB] = std::abs(alpha.sin2() * s * c);
    out[Pair::Bb] = alpha.sin_sq() * s2;
    return out;
}

double phi_gamma(const Angle& alpha, double gt) {
    const double s2 = std::sin(2.0 * gt);
    return 0.5 * alpha.cos_sq() * s2 * s2;
}

PhiConcurrences phi_evaluate(const Angle& alpha, double gt) {
    check_alpha(alpha);
    const double c0 = initial_concurrence(alpha);
    const double c = std::cos(gt);
    const double s = std::sin(gt);
    const double s2 = std::abs(std::sin(2.0 * gt));
    const double gamma = phi_gamma(alpha, gt);

    PhiConcurrences out;
    auto& u = out.unclamped;
    u[index_of(Pair::AB)] = c0 * c * c - gamma;
    u[index_of(Pair::ab)] = c0 * s * s - gamma;
    u[index_of(Pair::Aa)] = alpha.cos_sq() * s2;
    u[index_of(Pair::Ab)] = 0.5 * c0 * s2 - gamma;
    u[index_of(Pair::aB)] = 0.5 * c0 * s2 - gamma;
    u[index_of(Pair::Bb)] = alpha.cos_sq() * s2;

    out.clamped.alpha = alpha.radians();
    out.clamped.gt = gt;
    out.clamped.family = Family::phi;
    for (std::size_t i = 0; i < 6; ++i) out.clamped.c[i] = std::max(0.0, u[i]);
    return out;
}

ConcurrenceSextet phi_concurrences(const Angle& alpha, double gt) {
    return phi_evaluate(alpha, gt).clamped;
}

double phi_unclamped(const Angle& alpha, double gt, Pair pair) {
    return phi_evaluate(alpha, gt).unclamped[index_of(pair)];
}

PhiConcurrences evaluate(Family family, const Angle& alpha, double gt) {
    if (family == Family::phi) return phi_evaluate(alpha, gt);
    PhiConcurrences out;
    out.clamped = psi_concurrences(alpha, gt);
    out.unclamped = out.clamped.c;
    return out;
}

Predictability predictability(Family family, const Angle& alpha) {
    check_alpha(alpha);
    // <sigma_z^A> at t = 0 is cos 2 alpha for both families.
    (void)family;
    Predictability p;
    p.p0 = std::abs(alpha.cos2());
    p.sign = alpha.cos2() > 0.0 ? 1 : -1;
    return p;
}

}  // namespace djcm
