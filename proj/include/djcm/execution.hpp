#pragma once

namespace djcm {

/// Grid kernels run either as the serial reference loop or OpenMP-parallel over alpha rows.
/// Both produce bitwise-identical results; rows are independent.
enum class Execution { serial, parallel };

}  // namespace djcm
