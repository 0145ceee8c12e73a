#pragma once

namespace critcol {

/// Selects the OpenMP kernel or the serial reference implementation. Both
/// produce identical results; the serial path exists for testing and for
/// benchmarking the parallel one.
enum class Execution { serial, parallel };

}  // namespace critcol
