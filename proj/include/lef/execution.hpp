#pragma once

namespace lef {

  // Kernels that have an OpenMP implementation also keep a plain loop
  // version; tests compare the two.
  enum class Execution { serial, parallel };

}  // namespace lef
