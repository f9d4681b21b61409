#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "graphschro/errors.hpp"

namespace graphschro {

inline constexpr double kDefaultGroupTol = 1e-8;
inline constexpr double kDefaultKernelTol = 1e-8;

/// Eigendecomposition of a symmetric real matrix together with a partition
/// of the spectrum into distinct-eigenvalue groups. The grouping tolerance
/// is part of the data: counts of distinct eigenvalues are discontinuous in
/// it, so every consumer sees which discretization produced them.
struct SpectralData {
    Eigen::VectorXd eigenvalues;       // ascending
    Eigen::MatrixXd eigenvectors;      // orthonormal columns, real
    std::vector<std::vector<int>> groups;  // indices into eigenvalues, ascending
    std::vector<double> representatives;   // one value per group, increasing
    double tol = kDefaultGroupTol;

    int n() const { return static_cast<int>(eigenvalues.size()); }
    int num_groups() const { return static_cast<int>(groups.size()); }
};

/// Orthonormal basis of an (approximate) null space plus the rank decision
/// that produced it.
struct KernelResult {
    int dimension = 0;
    int rank = 0;
    Eigen::MatrixXd basis;  // cols x dimension, orthonormal
    double sigma_max = 0.0;
};

/// Eigendecomposition with single-linkage grouping of the sorted spectrum at
/// threshold tol*(1+max|lambda|). Requires exact symmetry as stored and
/// tol in (0, 1e-2].
SpectralData symmetric_eig(const Eigen::MatrixXd& L, double tol = kDefaultGroupTol);

/// Entry (alpha,beta) of (L - lambda I)^{-1} via the eigenexpansion
/// sum_l p_l(alpha) p_l(beta) / (lambda_l - lambda). Throws AtPoleError when
/// lambda is within 1e-12 of an eigenvalue.
std::complex<double> resolvent_entry(const SpectralData& spec, int alpha, int beta,
                                     std::complex<double> lambda);

/// Orthogonal projector onto the eigenspace of one distinct-eigenvalue group.
Eigen::MatrixXd spectral_projector(const SpectralData& spec, int group);

/// Numerical null space of a p x q matrix by SVD: rank counts singular
/// values above tol*sigma_max, the kernel gets the rest (all q when the
/// matrix is zero or has no rows).
KernelResult kernel(const Eigen::MatrixXd& M, double tol = kDefaultKernelTol);

}  // namespace graphschro
