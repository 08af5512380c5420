#pragma once

#include <complex>
#include <vector>

namespace sgl {

using cplx = std::complex<double>;
using cvector = std::vector<cplx>;
using rvector = std::vector<double>;

/// e^{i angle}
inline cplx cis(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace sgl
