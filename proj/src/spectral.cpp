#include "graphschro/spectral.hpp"

#include <cmath>

namespace graphschro {

namespace {

void check_tol(double tol) {
    if (!(tol > 0.0) || tol > 1e-2)
        throw ToleranceOutOfRangeError("tolerance must lie in (0, 1e-2], got " +
                                       std::to_string(tol));
}

}  // namespace

SpectralData symmetric_eig(const Eigen::MatrixXd& L, double tol) {
    check_tol(tol);
    if (L.rows() != L.cols()) throw NonSquareError("matrix not square");
    for (int i = 0; i < L.rows(); ++i)
        for (int j = i + 1; j < L.cols(); ++j)
            if (L(i, j) != L(j, i)) throw NonSymmetricError("matrix not symmetric as stored");

    SpectralData spec;
    spec.tol = tol;
    if (L.rows() == 0) return spec;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
    if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
    spec.eigenvalues = solver.eigenvalues();
    spec.eigenvectors = solver.eigenvectors();

    // Single-linkage on the sorted spectrum: a gap above the absolute
    // threshold closes the current group.
    const double scale = 1.0 + spec.eigenvalues.cwiseAbs().maxCoeff();
    const double threshold = tol * scale;
    std::vector<int> current{0};
    for (int l = 1; l < spec.n(); ++l) {
        if (spec.eigenvalues(l) - spec.eigenvalues(l - 1) > threshold) {
            spec.groups.push_back(current);
            current.clear();
        }
        current.push_back(l);
    }
    spec.groups.push_back(current);

    for (const auto& group : spec.groups) {
        double sum = 0.0;
        for (int l : group) sum += spec.eigenvalues(l);
        spec.representatives.push_back(sum / static_cast<double>(group.size()));
    }
    return spec;
}

std::complex<double> resolvent_entry(const SpectralData& spec, int alpha, int beta,
                                     std::complex<double> lambda) {
    for (int l = 0; l < spec.n(); ++l)
        if (std::abs(spec.eigenvalues(l) - lambda) <= 1e-12)
            throw AtPoleError("lambda within 1e-12 of eigenvalue " +
                              std::to_string(spec.eigenvalues(l)));
    std::complex<double> sum = 0.0;
    for (int l = 0; l < spec.n(); ++l)
        sum += spec.eigenvectors(alpha, l) * spec.eigenvectors(beta, l) /
               (spec.eigenvalues(l) - lambda);
    return sum;
}

Eigen::MatrixXd spectral_projector(const SpectralData& spec, int group) {
    if (group < 0 || group >= spec.num_groups()) throw Error("group index out of range");
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(spec.n(), spec.n());
    for (int l : spec.groups[static_cast<size_t>(group)]) {
        Eigen::VectorXd p = spec.eigenvectors.col(l);
        P += p * p.transpose();
    }
    return P;
}

KernelResult kernel(const Eigen::MatrixXd& M, double tol) {
    check_tol(tol);
    const int q = static_cast<int>(M.cols());
    KernelResult result;
    if (q == 0) return result;
    if (M.rows() == 0) {
        result.dimension = q;
        result.basis = Eigen::MatrixXd::Identity(q, q);
        return result;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    result.sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    if (result.sigma_max > 0.0) {
        for (int i = 0; i < sv.size(); ++i)
            if (sv(i) > tol * result.sigma_max) ++rank;
    }
    result.rank = rank;
    result.dimension = q - rank;
    result.basis = svd.matrixV().rightCols(result.dimension);
    return result;
}

}  // namespace graphschro
