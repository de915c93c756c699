#pragma once

#include <Eigen/Dense>
#include <utility>

#include "spdmanova/config.hpp"
#include "spdmanova/errors.hpp"

namespace spdmanova {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Tangent-space dimension of p x p SPD matrices.
inline int tangent_dim(int p) { return p * (p + 1) / 2; }

// Inverse of tangent_dim; returns -1 if d is not of the form p(p+1)/2.
int matrix_dim_from_tangent(int d);

/// A symmetric positive definite matrix, validated at construction.
/// Symmetry is checked to tolerances().symmetry_rel and then enforced
/// exactly; an eigenvalue below min_eig_rel * lambda_max is a hard error.
class SpdMatrix {
  public:
    explicit SpdMatrix(Matrix entries);

    static SpdMatrix identity(int p);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }

    bool same_point(const SpdMatrix& other) const;

  private:
    Matrix m_;
};

/// An element of the tangent space at `base`: a symmetric p x p matrix.
class TangentVector {
  public:
    TangentVector(SpdMatrix base, Matrix mat);

    const SpdMatrix& base() const { return base_; }
    const Matrix& mat() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

  private:
    SpdMatrix base_;
    Matrix mat_;
};

/// Image of a tangent vector under the Vec isometry: a length p(p+1)/2
/// coordinate vector tagged with its base point.
class TangentCoords {
  public:
    TangentCoords(SpdMatrix base, Vector coords);

    const SpdMatrix& base() const { return base_; }
    const Vector& coords() const { return coords_; }
    int dim_d() const { return static_cast<int>(coords_.size()); }

  private:
    SpdMatrix base_;
    Vector coords_;
};

namespace detail {

// Throws UsageError unless the matrix is symmetric to the configured
// relative tolerance; `what` names the offending object in the message.
void require_symmetric(const Matrix& m, const char* what);

inline Matrix sym_part(const Matrix& m) { return 0.5 * (m + m.transpose()); }

}  // namespace detail

}  // namespace spdmanova
