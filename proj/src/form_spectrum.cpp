#include "symref/form_spectrum.hpp"

#include "symref/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symref {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::complex<double> pfaffian_expand(const Eigen::MatrixXcd& a, std::vector<int>& idx) {
    if (idx.empty()) return 1.0;
    const int first = idx.front();
    std::complex<double> sum = 0.0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const std::complex<double> entry = a(first, idx[j]);
        if (entry == 0.0) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += sign * entry * pfaffian_expand(a, rest);
    }
    return sum;
}

std::complex<double> pfaffian_parlett_reid(Eigen::MatrixXcd a) {
    const Eigen::Index n = a.rows();
    std::complex<double> pf = 1.0;
    for (Eigen::Index k = 0; k + 1 < n; k += 2) {
        Eigen::Index offset = 0;
        a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&offset);
        const Eigen::Index kp = k + 1 + offset;
        if (kp != k + 1) {
            a.row(k + 1).swap(a.row(kp));
            a.col(k + 1).swap(a.col(kp));
            pf = -pf;
        }
        if (a(k + 1, k) == 0.0) return 0.0;
        pf *= a(k, k + 1);
        if (k + 2 < n) {
            const Eigen::Index rest = n - k - 2;
            Eigen::VectorXcd tau = a.row(k).tail(rest).transpose() / a(k, k + 1);
            Eigen::VectorXcd col = a.col(k + 1).tail(rest);
            a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
        }
    }
    return pf;
}

}  // namespace

std::complex<double> pfaffian(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw BadInput("pfaffian of a non-square matrix");
    if (a.rows() % 2 != 0) return 0.0;
    if (a.rows() <= 8) {
        std::vector<int> idx(static_cast<std::size_t>(a.rows()));
        for (int i = 0; i < static_cast<int>(idx.size()); ++i) idx[static_cast<std::size_t>(i)] = i;
        return pfaffian_expand(a, idx);
    }
    return pfaffian_parlett_reid(a);
}

std::vector<double> symplectic_eigenvalues(const FormSpectrumInput& input, const SpectrumTolerances& tol) {
    const Eigen::MatrixXcd& theta = input.theta;
    const Eigen::MatrixXcd& h = input.metric;
    if (theta.rows() != theta.cols()) throw BadInput("2-form matrix is not square");
    if (theta.rows() % 2 != 0) throw BadInput("odd dimension " + std::to_string(theta.rows()));
    if (h.rows() != theta.rows() || h.cols() != theta.cols()) throw BadInput("metric and 2-form differ in size");
    if (theta.rows() == 0) return {};

    const double theta_scale = max_abs(theta);
    if (max_abs(theta + theta.transpose()) > tol.input * std::max(theta_scale, 1e-300))
        throw BadInput("2-form is not antisymmetric");
    const double h_scale = max_abs(h);
    if (max_abs(h - h.adjoint()) > tol.input * std::max(h_scale, 1e-300)) throw BadInput("metric is not Hermitian");

    Eigen::LLT<Eigen::MatrixXcd> llt(h);
    if (llt.info() != Eigen::Success) throw BadInput("metric is not positive definite");

    // Columns of P form an h-orthonormal basis: P^* h P = I with P = (L^*)^{-1}.
    const Eigen::Index n = theta.rows();
    const Eigen::MatrixXcd p = llt.matrixU().solve(Eigen::MatrixXcd::Identity(n, n));
    const Eigen::MatrixXcd normal = p.transpose() * theta * p;

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(normal);
    const Eigen::VectorXd s = svd.singularValues();  // descending
    const double scale = s(0);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n / 2));
    for (Eigen::Index i = 0; i < n; i += 2) {
        if (std::abs(s(i) - s(i + 1)) > tol.pairing * scale)
            throw ToleranceViolation("singular values " + std::to_string(s(i)) + " and " + std::to_string(s(i + 1)) +
                                     " do not pair");
        out.push_back(0.5 * (s(i) + s(i + 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symref
