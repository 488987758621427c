#pragma once

namespace fockmetric {

// Execution policy for the data-parallel kernels (frequency sweeps, phase
// space integration, evolution traces). The serial path is a plain loop kept
// as the reference implementation; tests compare both and the benchmark tool
// times them against each other.
enum class Exec { serial, parallel };

}  // namespace fockmetric
