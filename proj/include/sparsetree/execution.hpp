#pragma once

namespace sparsetree {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// produce identical results; the serial one is kept for testing and as the
/// benchmark baseline.
enum class Execution { serial, parallel };

}  // namespace sparsetree
