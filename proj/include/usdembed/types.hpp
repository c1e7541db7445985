#pragma once

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace usdembed {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Bad or inconsistent input (dimension mismatch, non-unitary where a
/// unitary is required, malformed state sets, ...). CLI maps this to exit 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The request is well-formed but cannot be satisfied, e.g. conclusive
/// probabilities that would require amplification. CLI maps this to exit 2.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical property that should hold failed its check. CLI exit 3.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical tolerance bundle. All thresholds used across the library live
/// here so a run can be tightened or loosened consistently.
struct Tolerances {
    double recon = 1e-12;      // factorization reconstruction, scaled by max(1, |A|)
    double hermitian = 1e-12;  // Hermiticity defect of generators
    double unitary = 1e-10;    // unitarity defect accepted by log/actions
    double lin_indep = 1e-10;  // smallest Gram eigenvalue for discriminable states
    double passivity = 1e-10;  // slack on the |K| <= 1 contraction bound
    double clamp = 1e-10;      // window for clamping singular values to [0, 1]
    double ancilla_reduce = 1e-9;  // angles below this count as zero rotation
};

/// Process-wide tolerances. Defaults above, except that the environment
/// variable USD_EMBED_TOL, when set to a positive real, replaces the
/// 1e-10-class validation tolerances; the tight 1e-12-class ones scale
/// along as value/100 and the reduction threshold as 10*value.
inline const Tolerances& tols()
{
    static const Tolerances t = [] {
        Tolerances out;
        if (const char* env = std::getenv("USD_EMBED_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && v > 0.0) {
                out.unitary = v;
                out.lin_indep = v;
                out.passivity = v;
                out.clamp = v;
                out.recon = v / 100.0;
                out.hermitian = v / 100.0;
                out.ancilla_reduce = 10.0 * v;
            }
        }
        return out;
    }();
    return t;
}

}  // namespace usdembed
