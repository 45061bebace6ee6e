#include "djcm/pairs.hpp"

#include <stdexcept>
#include <string>

namespace djcm {

QubitPair::QubitPair(Qubit f, Qubit s) : first(f), second(s) {
    if (f == s) throw std::invalid_argument("QubitPair: the two qubits must differ");
}

QubitPair::QubitPair(Pair p) : first(Qubit::A), second(Qubit::B) {
    switch (p) {
        case Pair::AB: first = Qubit::A; second = Qubit::B; break;
        case Pair::ab: first = Qubit::a; second = Qubit::b; break;
        case Pair::Aa: first = Qubit::A; second = Qubit::a; break;
        case Pair::Bb: first = Qubit::B; second = Qubit::b; break;
        case Pair::Ab: first = Qubit::A; second = Qubit::b; break;
        case Pair::aB: first = Qubit::a; second = Qubit::B; break;
    }
}

Pair QubitPair::pair() const {
    auto has = [&](Qubit q) { return first == q || second == q; };
    if (has(Qubit::A) && has(Qubit::B)) return Pair::AB;
    if (has(Qubit::a) && has(Qubit::b)) return Pair::ab;
    if (has(Qubit::A) && has(Qubit::a)) return Pair::Aa;
    if (has(Qubit::B) && has(Qubit::b)) return Pair::Bb;
    if (has(Qubit::A) && has(Qubit::b)) return Pair::Ab;
    return Pair::aB;
}

std::string_view name(Pair p) {
    switch (p) {
        case Pair::AB: return "AB";
        case Pair::ab: return "ab";
        case Pair::Aa: return "Aa";
        case Pair::Bb: return "Bb";
        case Pair::Ab: return "Ab";
        case Pair::aB: return "aB";
    }
    return "?";
}

std::string_view name(Qubit q) {
    switch (q) {
        case Qubit::A: return "A";
        case Qubit::B: return "B";
        case Qubit::a: return "a";
        case Qubit::b: return "b";
    }
    return "?";
}

Qubit qubit_from_name(std::string_view s) {
    if (s == "A") return Qubit::A;
    if (s == "B") return Qubit::B;
    if (s == "a") return Qubit::a;
    if (s == "b") return Qubit::b;
    throw std::invalid_argument("unknown qubit '" + std::string(s) + "' (expected A, B, a or b)");
}

std::array<Pair, 3> pairs_of(Qubit q) {
    switch (q) {
        case Qubit::A: return {Pair::AB, Pair::Aa, Pair::Ab};
        case Qubit::B: return {Pair::AB, Pair::Bb, Pair::aB};
        case Qubit::a: return {Pair::ab, Pair::Aa, Pair::aB};
        case Qubit::b: return {Pair::ab, Pair::Bb, Pair::Ab};
    }
    return {Pair::AB, Pair::Aa, Pair::Ab};
}

}  // namespace djcm
