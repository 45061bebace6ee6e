#include "djcm/angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace djcm {

Angle Angle::from_tan(std::int64_t num, std::int64_t den) {
    if (num < 0 || den < 0 || (num == 0 && den == 0)) {
        throw std::invalid_argument("Angle::from_tan: tangent must be a non-negative rational");
    }
    const std::int64_t g = std::gcd(num, den);
    Angle a;
    a.tan_ = RationalTan{num / g, den / g};
    a.radians_ = std::atan2(static_cast<double>(a.tan_->num), static_cast<double>(a.tan_->den));
    return a;
}

namespace {

double hyp_sq(const RationalTan& t) {
    const double p = static_cast<double>(t.num);
    const double q = static_cast<double>(t.den);
    return p * p + q * q;
}

}  // namespace

double Angle::sin() const {
    if (tan_) return static_cast<double>(tan_->num) / std::sqrt(hyp_sq(*tan_));
    return std::sin(radians_);
}

double Angle::cos() const {
    if (tan_) return static_cast<double>(tan_->den) / std::sqrt(hyp_sq(*tan_));
    return std::cos(radians_);
}

double Angle::sin_sq() const {
    if (tan_) {
        const double p = static_cast<double>(tan_->num);
        return p * p / hyp_sq(*tan_);
    }
    const double s = std::sin(radians_);
    return s * s;
}

double Angle::cos_sq() const {
    if (tan_) {
        const double q = static_cast<double>(tan_->den);
        return q * q / hyp_sq(*tan_);
    }
    const double c = std::cos(radians_);
    return c * c;
}

double Angle::sin2() const {
    if (tan_) {
        return 2.0 * static_cast<double>(tan_->num) * static_cast<double>(tan_->den) / hyp_sq(*tan_);
    }
    return std::sin(2.0 * radians_);
}

double Angle::cos2() const {
    if (tan_) {
        const double p = static_cast<double>(tan_->num);
        const double q = static_cast<double>(tan_->den);
        return (q * q - p * p) / hyp_sq(*tan_);
    }
    return std::cos(2.0 * radians_);
}

double Angle::tan() const {
    if (tan_) {
        if (tan_->den == 0) return std::numeric_limits<double>::infinity();
        return static_cast<double>(tan_->num) / static_cast<double>(tan_->den);
    }
    return std::tan(radians_);
}

bool Angle::operator==(const Angle& other) const {
    if (tan_.has_value() != other.tan_.has_value()) return false;
    if (tan_) return tan_->num == other.tan_->num && tan_->den == other.tan_->den;
    return radians_ == other.radians_;
}

Angle Angle::complement() const {
    if (tan_) return from_tan(tan_->den, tan_->num);
    return Angle(kPi / 2.0 - radians_);
}

std::string Angle::to_string() const {
    std::ostringstream os;
    if (tan_) {
        if (tan_->num == 0) return "0";
        if (tan_->den == 0) return "pi/2";
        if (tan_->num == tan_->den) return "pi/4";
        os << "atan(" << tan_->num;
        if (tan_->den != 1) os << '/' << tan_->den;
        os << ')';
        return os.str();
    }
    os.precision(17);
    os << radians_;
    return os.str();
}

std::vector<Angle> uniform_alpha_grid(std::size_t n) {
    std::vector<Angle> grid;
    if (n == 0) return grid;
    if (n == 1) return {Angle::zero()};
    grid.reserve(n);
    const std::size_t last = n - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        if (k == 0) {
            grid.push_back(Angle::zero());
        } else if (k == last) {
            grid.push_back(Angle::half_pi());
        } else if (2 * k == last) {
            grid.push_back(Angle::quarter_pi());
        } else {
            grid.emplace_back(static_cast<double>(k) * (kPi / 2.0) / static_cast<double>(last));
        }
    }
    return grid;
}

std::vector<Angle> special_alphas() {
    return {Angle::zero(), Angle::from_tan(1, 3), Angle::from_tan(1, 2), Angle::quarter_pi(),
            Angle::half_pi()};
}

std::vector<Angle> merge_alphas(std::vector<Angle> grid, const std::vector<Angle>& extra) {
    for (const Angle& a : extra) {
        auto it = std::find_if(grid.begin(), grid.end(), [&](const Angle& b) {
            return std::abs(a.radians() - b.radians()) <= 1e-15;
        });
        if (it == grid.end()) {
            grid.push_back(a);
        } else if (a.is_exact() && !it->is_exact()) {
            *it = a;
        }
    }
    std::stable_sort(grid.begin(), grid.end());
    return grid;
}

std::vector<double> uniform_grid(double max, std::size_t n) {
    std::vector<double> grid;
    if (n == 0) return grid;
    if (n == 1) return {0.0};
    grid.reserve(n);
    const double step = max / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) grid.push_back(static_cast<double>(k) * step);
    grid.back() = max;
    return grid;
}

}  // namespace djcm
