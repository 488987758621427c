#pragma once

#include <optional>
#include <vector>

#include "fockmetric/hilbert.hpp"

namespace fockmetric {

// Photon-number measurement channel with strength p:
//   M1 = sqrt(1-p) * I,   M2 = sqrt(p) * (shift up, |n> -> |n+1>).
// On an infinite ladder M1^dag M1 + M2^dag M2 = I; the finite restriction
// annihilates the top level in M2, so completeness is certified on levels
// 0..dim-2 only and apply_channel guards against population there.
struct KrausChannel {
    std::vector<OperatorMatrix> operators;
    double p;
    double completeness_residual;  // max deviation on the certified subspace
};

KrausChannel build_channel(double p, int dim);

// rho -> sum_i M_i rho M_i^dag. Requires top-level population < 1e-10.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch);

// Probe prepared by feeding the vacuum through the channel. Only the
// endpoints p = 0 and p = 1 yield pure Fock probes with a well-defined
// pure-state QFI (1/(2 omega^2) and 3/(2 omega^2)); in between the state is
// mixed, mixed-state QFI is out of scope, and the report instead carries the
// state and its non-Gaussianity.
struct PreparedProbe {
    double p;
    double omega;
    bool pure;
    std::optional<double> qfi;  // set only when pure
    double ng;
    DensityMatrix state;
};

PreparedProbe prepared_probe_qfi(double p, double omega, int dim = 16);

}  // namespace fockmetric
