#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "djcm/analytic.hpp"
#include "djcm/angle.hpp"
#include "djcm/geometry.hpp"
#include "djcm/hilbert.hpp"
#include "djcm/pairs.hpp"

namespace djcm {

struct RunConfig {
    Family family = Family::psi;
    /// trace: exactly one angle. verify/conics: extra angles merged into the grid
    /// (conics uses only these when given). surface: replaces the uniform grid.
    std::vector<Angle> alphas;
    std::size_t alpha_grid = 65;
    double gt_max = 2.0 * kPi;
    std::size_t gt_steps = 257;
    SpaceConfig space;
    double tol = kDefaultRelationTol;
    std::uint64_t seed = 0;
    std::string format;  ///< csv | json; empty picks the command's default
    std::string out;     ///< empty or "-" is stdout
    Qubit qubit = Qubit::A;

    /// Throws InvalidConfig.
    void validate() const;
    std::vector<double> gt_grid() const;
};

struct CommandResult {
    std::string content;
    int exit_code = 0;
    std::vector<std::string> failures;  ///< names of failing hard checks
};

CommandResult cmd_trace(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_surface(const RunConfig& cfg);
CommandResult cmd_conics(const RunConfig& cfg);

}  // namespace djcm
