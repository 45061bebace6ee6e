#pragma once

#include <array>
#include <string_view>

#include "djcm/angle.hpp"
#include "djcm/hilbert.hpp"
#include "djcm/pairs.hpp"

namespace djcm {

/// psi: (cos a |10> + sin a |01>)|00>;  phi: (cos a |11> + sin a |00>)|00>.
enum class Family { psi, phi };

std::string_view name(Family f);
Family family_from_name(std::string_view s);

struct PsiCoefficients {
    Complex x1, x2, x3, x4;
};

struct PhiCoefficients {
    Complex y1, y2, y3, y4, y5;
};

PsiCoefficients psi_coefficients(const Angle& alpha, double gt);
PhiCoefficients phi_coefficients(const Angle& alpha, double gt, double omega_t);

/// Closed-form evolved states embedded in the space of `cfg` (default n_max = 1).
Ket psi_state(const Angle& alpha, double gt, const SpaceConfig& cfg = {});
Ket phi_state(const Angle& alpha, double gt, double omega_t, const SpaceConfig& cfg = {});

/// Initial state of a family (gt = 0).
Ket initial_state(Family family, const Angle& alpha, const SpaceConfig& cfg = {});

/// The six pairwise concurrences at one (alpha, gt) point, indexed by Pair.
struct ConcurrenceSextet {
    std::array<double, 6> c{};
    double alpha = 0.0;  ///< radians
    double gt = 0.0;
    Family family = Family::psi;

    double operator[](Pair p) const { return c[index_of(p)]; }
    double& operator[](Pair p) { return c[index_of(p)]; }
    double sum_of_squares() const;
};

/// C0 = |sin 2 alpha|, the initial atom-atom concurrence.
double initial_concurrence(const Angle& alpha);

ConcurrenceSextet psi_concurrences(const Angle& alpha, double gt);

/// phi-family concurrences before and after the max[0, .] clamp.
struct PhiConcurrences {
    ConcurrenceSextet clamped;
    std::array<double, 6> unclamped{};  ///< Aa, Bb never clamp and equal their clamped values
};

/// gamma_t = (1/2) cos^2(alpha) sin^2(2gt)
double phi_gamma(const Angle& alpha, double gt);
PhiConcurrences phi_evaluate(const Angle& alpha, double gt);
ConcurrenceSextet phi_concurrences(const Angle& alpha, double gt);
/// Pre-clamp closed form for one pair (negative inside a death window).
double phi_unclamped(const Angle& alpha, double gt, Pair pair);

/// Closed-form sextet of either family; for psi the unclamped values equal the sextet.
PhiConcurrences evaluate(Family family, const Angle& alpha, double gt);

struct Predictability {
    double p0 = 0.0;  ///< |cos 2 alpha|
    /// Sign convention of the hypersphere radius: +1 for alpha < pi/4, -1 otherwise,
    /// so that sign * p0 == cos 2 alpha.
    int sign = 1;
};

Predictability predictability(Family family, const Angle& alpha);

/// Throws std::domain_error unless 0 <= alpha <= pi/2 (1e-15 slack).
void check_alpha(const Angle& alpha);

}  // namespace djcm
