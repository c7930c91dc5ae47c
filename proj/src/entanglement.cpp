#include "qqesd/entanglement.hpp"

#include <cmath>

namespace qqesd {

PTSpectrum pt_spectrum(const DensityMatrix& rho, Subsystem subsystem) {
  return {hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims(), subsystem)), subsystem};
}

NegativityResult negativity(const DensityMatrix& rho, Subsystem subsystem) {
  const PTSpectrum spectrum = pt_spectrum(rho, subsystem);
  NegativityResult result;
  result.min_pt_eigenvalue = spectrum.eigenvalues.front();
  for (double lambda : spectrum.eigenvalues) {
    if (lambda < -kNegativityThreshold) result.value += std::abs(lambda);
  }
  result.is_entangled = result.value > 0.0;
  return result;
}

bool is_ppt(const DensityMatrix& rho) {
  return pt_spectrum(rho, Subsystem::A).eigenvalues.front() >= -kNegativityThreshold;
}

}  // namespace qqesd
