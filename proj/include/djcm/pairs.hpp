#pragma once

#include <array>
#include <string_view>

namespace djcm {

/// The four qubits: atoms A, B and the cavity modes a, b (truncated to {0,1}).
enum class Qubit { A, B, a, b };

/// The six unordered qubit pairs, in sextet order.
enum class Pair { AB, ab, Aa, Bb, Ab, aB };

inline constexpr std::array<Pair, 6> kAllPairs{Pair::AB, Pair::ab, Pair::Aa,
                                               Pair::Bb, Pair::Ab, Pair::aB};
inline constexpr std::array<Qubit, 4> kAllQubits{Qubit::A, Qubit::B, Qubit::a, Qubit::b};

struct QubitPair {
    Qubit first;
    Qubit second;

    /// Throws std::invalid_argument when first == second.
    QubitPair(Qubit first, Qubit second);
    /// Canonical ordered pair for a sextet slot (e.g. Ab -> (A, b)).
    QubitPair(Pair p);  // NOLINT(google-explicit-constructor)

    Pair pair() const;
};

constexpr std::size_t index_of(Pair p) { return static_cast<std::size_t>(p); }

std::string_view name(Pair p);
std::string_view name(Qubit q);
Qubit qubit_from_name(std::string_view s);

/// The three pairs containing `q`, ordered (same-kind partner, own partner, cross partner);
/// for A this is (AB, Aa, Ab).
std::array<Pair, 3> pairs_of(Qubit q);

}  // namespace djcm
