#pragma once
// Shared helpers for the unit tests: seeded random values and conversions to oracle types.

#include "oracles/polynomial.hpp"
#include "symref/linalg.hpp"

#include <random>

namespace test_support {

inline symref::BigRational random_rational(std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return symref::BigRational(num(rng), den(rng));
}

inline symref::CyclotomicNumber random_cyclotomic(std::mt19937& rng, symref::Conductor m, int span = 9) {
    std::vector<symref::BigRational> coeffs;
    for (std::size_t i = 0; i < symref::euler_phi(m); ++i) coeffs.push_back(random_rational(rng, span));
    return symref::CyclotomicNumber(m, std::move(coeffs));
}

inline symref::ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, symref::Conductor m,
                                         int span = 3) {
    symref::ExactMatrix out(rows, cols, m);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, random_cyclotomic(rng, m, span));
    return out;
}

inline oracle::Poly to_poly(const symref::CyclotomicNumber& x) {
    oracle::Poly p;
    for (const auto& c : x.coeffs()) p.push_back(c.to_mpq());
    oracle::trim(p);
    return p;
}

inline symref::CyclotomicNumber from_poly(const oracle::Poly& p, symref::Conductor m) {
    std::vector<symref::BigRational> coeffs(symref::euler_phi(m), symref::BigRational(0));
    for (std::size_t i = 0; i < p.size(); ++i) coeffs.at(i) = symref::BigRational(p[i]);
    return symref::CyclotomicNumber(m, std::move(coeffs));
}

}  // namespace test_support
