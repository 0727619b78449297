#pragma once

#include <cstddef>

namespace liepf {

/// Size guards shared by every enumeration-based routine.
struct Limits {
  std::size_t orbit_cap = 10'000'000;
  std::size_t weight_system_cap = 1'000'000;
  /// |W(F4)|, the largest Weyl group among rank <= 4 types.
  std::size_t weyl_cap = 1152;
};

/// Selects the serial reference kernel or its OpenMP counterpart.  Both
/// produce identical results; the serial path is kept as the test oracle.
enum class Execution { serial, parallel };

}  // namespace liepf
