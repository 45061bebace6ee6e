#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace djcm {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Non-negative rational tangent p/q of an angle in [0, pi/2]; q == 0 encodes pi/2.
struct RationalTan {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// Mixing angle alpha in radians.
///
/// When the angle is one of the special points of the model (0, pi/4, pi/2,
/// atan(p/q)) it also carries its tangent as an exact rational, and every
/// trigonometric quantity is then evaluated from that rational instead of from
/// the rounded radian value. This keeps branch-point identities such as
/// 5 cos(2 atan(1/2)) - 3 = 0 exact in binary64.
class Angle {
public:
    Angle() = default;
    Angle(double radians) : radians_(radians) {}  // NOLINT(google-explicit-constructor)

    static Angle from_tan(std::int64_t num, std::int64_t den);
    static Angle zero() { return from_tan(0, 1); }
    static Angle quarter_pi() { return from_tan(1, 1); }
    static Angle half_pi() { return from_tan(1, 0); }

    double radians() const { return radians_; }
    const std::optional<RationalTan>& exact_tan() const { return tan_; }
    bool is_exact() const { return tan_.has_value(); }

    double sin() const;
    double cos() const;
    double sin_sq() const;
    double cos_sq() const;
    /// sin(2 alpha)
    double sin2() const;
    /// cos(2 alpha)
    double cos2() const;
    /// tan(alpha); +inf at pi/2.
    double tan() const;

    /// Same angle, same exactness: compares radians and rational tangent.
    bool operator==(const Angle& other) const;
    bool operator<(const Angle& other) const { return radians_ < other.radians_; }

    /// Reflection alpha -> pi/2 - alpha (swaps the roles of the two atoms).
    Angle complement() const;

    std::string to_string() const;

private:
    double radians_ = 0.0;
    std::optional<RationalTan> tan_;
};

/// Uniform closed grid of n points on [0, pi/2]. Nodes at 0, pi/4 and pi/2 are exact.
std::vector<Angle> uniform_alpha_grid(std::size_t n);

/// The branch points of the case analysis: 0, atan(1/3), atan(1/2), pi/4, pi/2.
std::vector<Angle> special_alphas();

/// Sorted union of `grid` and `extra`, dropping duplicates (within 1e-15 rad).
std::vector<Angle> merge_alphas(std::vector<Angle> grid, const std::vector<Angle>& extra);

/// Closed grid of n points on [0, max]; n == 1 yields {0}.
std::vector<double> uniform_grid(double max, std::size_t n);

}  // namespace djcm
