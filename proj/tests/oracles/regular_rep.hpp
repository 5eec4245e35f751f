#pragma once
// Exact rank and form checks over Q for matrices over Q(zeta_m).
//
// Q(zeta_m) is a Q-vector space of dimension phi(m) with basis 1, t, ..., t^(phi-1),
// t a root of the m-th cyclotomic polynomial (built here by Mobius inversion). An n x n
// matrix over the field becomes an (n phi) x (n phi) rational matrix by replacing every
// entry with its multiplication matrix, so K-ranks are Q-ranks divided by phi. The trace
// pairing Tr(xy) is nondegenerate, so a K-bilinear form is nondegenerate on a subspace
// iff its trace is nondegenerate on the underlying Q-subspace.

#include "oracles/polynomial.hpp"
#include "oracles/rational_linalg.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace oracle {

class CyclotomicModel {
public:
    explicit CyclotomicModel(int m) : modulus_(cyclotomic(m)), phi_(modulus_.size() - 1) {
        trace_.assign(phi_, QVector(phi_, 0));
        for (std::size_t i = 0; i < phi_; ++i)
            for (std::size_t j = 0; j < phi_; ++j) {
                Poly power(i + j + 1, 0);
                power[i + j] = 1;
                const QMatrix mult = multiplication(power);
                for (std::size_t k = 0; k < phi_; ++k) trace_[i][j] += mult[k][k];
            }
    }

    std::size_t phi() const { return phi_; }

    /// Matrix of y -> x y in the power basis.
    QMatrix multiplication(const Poly& x) const {
        QMatrix out(phi_, QVector(phi_, 0));
        for (std::size_t j = 0; j < phi_; ++j) {
            Poly shifted(j + 1, 0);
            shifted[j] = 1;
            Poly col = reduce(mul(x, shifted), modulus_);
            for (std::size_t i = 0; i < col.size() && i < phi_; ++i) out[i][j] = col[i];
        }
        return out;
    }

    /// The n phi square rational matrix of an n x n matrix given entrywise.
    QMatrix regular(std::size_t n, const std::function<Poly(std::size_t, std::size_t)>& entry) const {
        QMatrix out(n * phi_, QVector(n * phi_, 0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const Poly x = entry(r, c);
                bool zero = true;
                for (const auto& q : x) zero = zero && q == 0;
                if (zero) continue;
                const QMatrix block = multiplication(x);
                for (std::size_t i = 0; i < phi_; ++i)
                    for (std::size_t j = 0; j < phi_; ++j) out[r * phi_ + i][c * phi_ + j] = block[i][j];
            }
        return out;
    }

    /// K-dimension of {v : (g - 1) v = 0}, with its Q-basis.
    std::vector<QVector> fixed_q_basis(const QMatrix& g_regular) const {
        QMatrix shifted = g_regular;
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i][i] -= 1;
        return nullspace(shifted, shifted.size());
    }

    std::size_t k_dim(std::size_t q_dim) const {
        if (q_dim % phi_ != 0) throw std::logic_error("Q-dimension not a multiple of phi");
        return q_dim / phi_;
    }

    /// Rank of the Gram matrix Tr(u_a^T Omega u_b) over a Q-basis {u_a}.
    std::size_t trace_form_rank(const QMatrix& omega_regular, const std::vector<QVector>& basis) const {
        const std::size_t d = basis.size();
        const std::size_t big = omega_regular.size();
        std::vector<QVector> images;
        for (const auto& u : basis) {
            QVector w(big, 0);
            for (std::size_t i = 0; i < big; ++i)
                for (std::size_t j = 0; j < big; ++j)
                    if (omega_regular[i][j] != 0 && u[j] != 0) w[i] += omega_regular[i][j] * u[j];
            images.push_back(std::move(w));
        }
        QMatrix gram(d, QVector(d, 0));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                mpq_class s = 0;
                for (std::size_t blk = 0; blk < big / phi_; ++blk)
                    for (std::size_t i = 0; i < phi_; ++i) {
                        const mpq_class& ui = basis[a][blk * phi_ + i];
                        if (ui == 0) continue;
                        for (std::size_t j = 0; j < phi_; ++j) s += ui * trace_[i][j] * images[b][blk * phi_ + j];
                    }
                gram[a][b] = s;
            }
        return rank(gram);
    }

private:
    Poly modulus_;
    std::size_t phi_;
    QMatrix trace_;  // Tr(t^(i+j))
};

}  // namespace oracle
