#pragma once

namespace lukas {

// Kernel variant selector. `parallel` uses OpenMP when compiled in and falls
// back to the serial loop otherwise; both produce identical results (all
// reductions are exact integer sums).
enum class Exec { serial, parallel };

}  // namespace lukas
