#pragma once

// Characters of U(n) at eigenvalue tuples: the Weyl denominator and the
// bialternant ratio det{e^{i m_j psi_k}} / det{e^{i (j-1) psi_k}}.

#include <complex>
#include <vector>

#include "ssk/signatures.hpp"

namespace ssk::schur {

using cplx = std::complex<double>;

struct EigenAngles {
    std::vector<double> psi;   // reduced into [0, 2pi)

    explicit EigenAngles(std::vector<double> angles);
    int n() const { return static_cast<int>(psi.size()); }
};

// prod_{l<k} (e^{i psi_l} - e^{i psi_k}); 0 at coincident angles.
cplx weyl_denominator(const EigenAngles& angles);

// chi_m at the given eigenvalues. Exact-identity input routes to the
// integer dimension; near-coincident angles (pairwise gap < 1e-6) are
// evaluated by perturb-and-extrapolate, keeping one generic code path.
cplx character(const sig::Signature& m, const EigenAngles& angles);

} // namespace ssk::schur
