#pragma once

namespace spdmanova {

inline constexpr const char* kVersion = "0.1.0";

// Central numeric tolerances. Defaults are tuned for double precision and
// matrix dimensions p <= 20; override before launching concurrent work.
struct Tolerances {
    double symmetry_rel = 1e-12;       // relative symmetry check at construction
    double min_eig_rel = 1e-12;        // eigenvalues below min_eig_rel * lambda_max are a hard error
    double roundtrip = 1e-9;           // exp/log roundtrip accuracy
    double isometry = 1e-10;           // vec_at isometry accuracy
    double base_match = 1e-12;         // slack when comparing tangent base points
    double decomposition = 1e-9;       // entrywise T = B + W check
    double rcond_min = 1e-12;          // reciprocal condition number for scatter matrices
    double degenerate_variance = 1e-14;  // sigma_hat^2 below this is degenerate
    double chol_residual = 1e-10;      // L L^T = Gamma residual
    double mean_tol = 1e-12;           // Frechet mean gradient norm
    int mean_max_iter = 200;
    double regression_tol = 1e-10;     // regression gradient norm
    int regression_max_iter = 2000;
};

Tolerances& tolerances();

}  // namespace spdmanova
