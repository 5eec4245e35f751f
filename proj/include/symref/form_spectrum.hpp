#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace symref {

/// A complex 2-form on C^2n together with a Hermitian metric, both as matrices.
struct FormSpectrumInput {
    Eigen::MatrixXcd theta;   // antisymmetric: theta^T = -theta
    Eigen::MatrixXcd metric;  // Hermitian positive definite
};

struct SpectrumTolerances {
    double input = 1e-12;    // antisymmetry / Hermitian symmetry, relative to the largest entry
    double pairing = 1e-8;   // singular values must agree in pairs, relative to the largest one
};

/**
 * Symplectic eigenvalues of theta with respect to the metric.
 *
 * In an h-orthonormal basis theta takes the normal form
 * sum_i lambda_i z_{2i-1} ^ z_{2i} with lambda_i >= 0; the lambda_i are the
 * singular values of the transformed matrix, each of which appears twice.
 * Returns one value per pair, ascending.
 *
 * Throws BadInput (odd or mismatched dimension, asymmetric input, metric not
 * positive definite) and ToleranceViolation (singular values fail to pair).
 */
std::vector<double> symplectic_eigenvalues(const FormSpectrumInput& input, const SpectrumTolerances& tol = {});

/// Pfaffian of an antisymmetric matrix: cofactor expansion up to 8x8, Parlett-Reid elimination beyond.
std::complex<double> pfaffian(const Eigen::MatrixXcd& a);

}  // namespace symref
