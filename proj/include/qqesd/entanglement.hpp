#pragma once

#include <vector>

#include "qqesd/states.hpp"

namespace qqesd {

/// Partial-transpose eigenvalues in (-kNegativityThreshold, 0) are rounding
/// noise and do not count as entanglement.
inline constexpr double kNegativityThreshold = 1e-10;

struct PTSpectrum {
  std::vector<double> eigenvalues;  // ascending
  Subsystem transposed = Subsystem::A;
};

/// Negativity as the plain sum |lambda| over negative partial-transpose
/// eigenvalues, with no dimensional prefactor. On the one-parameter family it
/// ranges over [0, 1/8].
struct NegativityResult {
  double value = 0.0;
  bool is_entangled = false;
  double min_pt_eigenvalue = 0.0;
};

PTSpectrum pt_spectrum(const DensityMatrix& rho, Subsystem subsystem = Subsystem::A);

NegativityResult negativity(const DensityMatrix& rho, Subsystem subsystem = Subsystem::A);

/// Positive partial transpose test; for 2x3 systems this decides separability.
bool is_ppt(const DensityMatrix& rho);

}  // namespace qqesd
