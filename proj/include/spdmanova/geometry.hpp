#pragma once

// AIRM geometry kernel for SPD matrices: matrix-analytic exp/log/geodesic
// maps, the Vec isometry, parallel transport, and Jacobi-field formulas.
// All functions are pure; inputs are value-semantic and never mutated.

#include "spdmanova/types.hpp"

namespace spdmanova {

// --- spectral building blocks -----------------------------------------------

/// Symmetric square root: S with S S = C, via eigendecomposition.
SpdMatrix spd_sqrt(const SpdMatrix& c);

/// Fractional power C^s (s any real).
Matrix spd_pow(const SpdMatrix& c, double s);

// --- exp / log / geodesics ---------------------------------------------------

/// Riemannian logarithm: log_C(A) = C^{1/2} log(C^{-1/2} A C^{-1/2}) C^{1/2}.
TangentVector log_map(const SpdMatrix& c, const SpdMatrix& a);

/// Riemannian exponential, inverse of log_map. Requires v.base == c.
SpdMatrix exp_map(const SpdMatrix& c, const TangentVector& v);

/// Geodesic gamma(s) = C^{1/2} (C^{-1/2} A C^{-1/2})^s C^{1/2};
/// gamma(0) = C, gamma(1) = A, defined for all real s.
SpdMatrix geodesic(const SpdMatrix& c, const SpdMatrix& a, double s);

/// Geodesic distance d(C, A) = || log(C^{-1/2} A C^{-1/2}) ||_F.
double distance(const SpdMatrix& c, const SpdMatrix& a);

/// AIRM inner product <V, W>_C = tr(C^{-1} V C^{-1} W).
double inner(const SpdMatrix& c, const TangentVector& v, const TangentVector& w);

/// Metric norm ||V||_C = sqrt(<V, V>_C).
double norm(const SpdMatrix& c, const TangentVector& v);

// --- vectorization -----------------------------------------------------------

// Vec at the identity maps a symmetric matrix to R^d, d = p(p+1)/2,
// column-major over the upper triangle with sqrt(2) weights off-diagonal:
// (w11, sqrt2 w12, w22, sqrt2 w13, sqrt2 w23, w33, ...). Linear isometry:
// the 2-norm of the output equals the Frobenius norm of the input.
Vector vec_at_identity(const Matrix& w);

/// Inverse of vec_at_identity.
Matrix unvec_at_identity(const Vector& x, int p);

/// Vec_C(V) = Vec_I(C^{-1/2} V C^{-1/2}); isometry onto (R^d, 2-norm).
TangentCoords vec_at(const SpdMatrix& c, const TangentVector& v);

/// Two-sided inverse of vec_at. Requires x.base == c.
TangentVector unvec_at(const SpdMatrix& c, const TangentCoords& x);

/// Fused Vec_C(log_C(A)) without materializing the tangent vector:
/// equals vec_at(c, log_map(c, a)) exactly (the C^{1/2} sandwiches cancel).
Vector vec_log_at(const SpdMatrix& c, const SpdMatrix& a);

// --- parallel transport ------------------------------------------------------

/// Transport along the C -> A geodesic: Pi(V) = E V E^T with
/// E = (A C^{-1})^{1/2}; preserves the AIRM inner product.
TangentVector parallel_transport(const SpdMatrix& c, const SpdMatrix& a,
                                 const TangentVector& v);

// --- Jacobi fields -----------------------------------------------------------

/// J(s) = log_{gamma(s)}(B) - log_{gamma(s)}(A) along the C -> A geodesic;
/// J(1) = 0 by construction.
TangentVector jacobi_field(const SpdMatrix& c, const SpdMatrix& a,
                           const SpdMatrix& b, double s);

/// The closed-form candidate for dJ/ds at s = 0:
///   -1/2 [X, Y] - 1/2 {X, Y}_C + X,  X = log_C(A), Y = log_C(B),
/// with {X,Y}_C = C^{-1} X Y + Y X^T C^{-1}. The raw expression is not
/// symmetric in general; the returned matrix is (M + M^T)/2 and the
/// Frobenius norm of the discarded skew part is written to
/// *asymmetry_norm when non-null. See jacobi_velocity_fd for the
/// finite-difference oracle this is audited against.
Matrix jacobi_velocity_closed_form(const SpdMatrix& c, const SpdMatrix& a,
                                   const SpdMatrix& b,
                                   double* asymmetry_norm = nullptr);

/// Central-difference oracle for dJ/ds at s = 0 in ambient coordinates:
/// (J(h) - J(-h)) / (2h), truncation error O(h^2). Requires h in (0, 0.1].
Matrix jacobi_velocity_fd(const SpdMatrix& c, const SpdMatrix& a,
                          const SpdMatrix& b, double h);

/// Covariant derivative at s = 0 from a candidate velocity:
///   nabla_s J|_0 = Jdot(0) - 1/2 (C^{-1} gdot J0 + J0 gdot^T C^{-1}),
/// J0 = log_C(B) - log_C(A), gdot = log_C(A).
Matrix jacobi_covariant_derivative(const SpdMatrix& c, const SpdMatrix& a,
                                   const SpdMatrix& b, const Matrix& velocity);

/// Frobenius norm of
///   log_{gamma(eps)}(B) - Pi_{C->gamma(eps)}[log_C(B) - log_C(A)] - log_{gamma(eps)}(A)
/// divided by eps; stays bounded as eps -> 0. Requires eps in (0, 0.5].
double log_difference_residual(const SpdMatrix& c, const SpdMatrix& a,
                               const SpdMatrix& b, double eps);

namespace detail {

struct Eigh {
    Matrix vectors;  // columns are eigenvectors
    Vector values;   // ascending
};

// Eigendecomposition of a symmetric matrix; NumericError on solver failure.
Eigh eigh(const Matrix& sym);

// Q f(lambda) Q^T for a symmetric matrix.
template <typename Fn>
Matrix spectral_map(const Matrix& sym, Fn&& fn) {
    Eigh e = eigh(sym);
    Vector mapped = e.values.unaryExpr(std::forward<Fn>(fn));
    return e.vectors * mapped.asDiagonal() * e.vectors.transpose();
}

// log of an SPD matrix given as a plain symmetric matrix; eigenvalues must
// be strictly positive.
Matrix sym_log(const Matrix& spd);

// exp of a symmetric matrix (always SPD).
Matrix sym_exp(const Matrix& sym);

// C^{1/2} and C^{-1/2} from one decomposition.
struct SqrtPair {
    Matrix sqrt;
    Matrix inv_sqrt;
};
SqrtPair sqrt_pair(const SpdMatrix& c);

void require_same_dim(const SpdMatrix& c, const SpdMatrix& a, const char* op);
void require_base(const SpdMatrix& c, const TangentVector& v, const char* op);

}  // namespace detail

}  // namespace spdmanova
