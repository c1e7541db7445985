#pragma once

#include "usdembed/types.hpp"

namespace usdembed::linalg {

/// SVD A = left * diag(singulars) * right^dagger, singular values descending.
struct SvdResult {
    CMatrix left;
    RVector singulars;
    CMatrix right;
};

/// Polar factorization A = unitary_factor * positive_factor.
struct PolarResult {
    CMatrix unitary_factor;
    CMatrix positive_factor;
};

SvdResult svd(const CMatrix& a);

/// Requires a square input. positive_factor = right s right^dagger,
/// unitary_factor = left right^dagger from the SVD of the input.
PolarResult polar(const CMatrix& a);

/// exp(-i h t) for Hermitian h, via eigendecomposition.
CMatrix exp_unitary(const CMatrix& h, double t);

/// Skew-Hermitian logarithm of a unitary; every eigenangle lies in (-pi, pi]
/// (an eigenvalue at exactly -1 maps to +pi).
CMatrix log_unitary(const CMatrix& u);

/// Largest singular value.
double spectral_norm(const CMatrix& a);

/// sqrt(sum |a_ij|^2); equals the root-sum-square of the singular values.
double hs_norm(const CMatrix& a);

// --- validation helpers used throughout the library ---

bool is_finite(const CMatrix& a);
double max_abs(const CMatrix& a);
/// max_ij |a_ij - conj(a_ji)|
double hermiticity_defect(const CMatrix& a);
/// max entry of |u^dagger u - I|
double unitarity_defect(const CMatrix& u);

void require_finite(const CMatrix& a, const std::string& what);
void require_hermitian(const CMatrix& a, const std::string& what);
void require_unitary(const CMatrix& u, const std::string& what);
void require_unit_norm(const CVector& v, const std::string& what);

/// Singular values slightly above 1 by roundoff are snapped to 1; anything
/// beyond the clamp window is rejected.
double clamp_singular_to_unit(double s);

}  // namespace usdembed::linalg
