#pragma once

namespace csync {

// Selects the serial reference kernel or the OpenMP one. Both return
// identical results; the parallel path only changes how work is scheduled.
enum class Exec { serial, parallel };

inline constexpr Exec kDefaultExec = Exec::parallel;

}  // namespace csync
