#pragma once

#include "symref/rational.hpp"

#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace symref {

using Conductor = std::uint32_t;

/// Euler's totient.
std::size_t euler_phi(Conductor m);

/**
 * Arithmetic context for Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1).
 *
 * Instances are created once per conductor and cached for the life of the
 * process; `get` is safe to call concurrently.
 */
class CyclotomicField {
public:
    static const CyclotomicField& get(Conductor m);

    Conductor conductor() const { return conductor_; }
    std::size_t degree() const { return modulus_.size() - 1; }

    /// Coefficients of the m-th cyclotomic polynomial, constant term first (monic).
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    /// Reduces a polynomial of any length modulo Phi_m; result has exactly degree() entries.
    void reduce(std::vector<BigRational>& poly) const;

private:
    explicit CyclotomicField(Conductor m);

    Conductor conductor_;
    std::vector<std::int64_t> modulus_;
};

/// Integer coefficients of Phi_m, computed by exact division of z^m - 1.
std::vector<std::int64_t> cyclotomic_polynomial(Conductor m);

/// Element of Q(zeta_m) as a coefficient vector of length phi(m).
class CyclotomicNumber {
public:
    CyclotomicNumber() : coeffs_{BigRational{}} {}
    CyclotomicNumber(const BigRational& value, Conductor m = 1);  // NOLINT(google-explicit-constructor)
    CyclotomicNumber(std::int64_t value, Conductor m = 1) : CyclotomicNumber(BigRational(value), m) {}  // NOLINT
    /// Takes the coefficient vector as given; throws std::invalid_argument on a wrong length.
    CyclotomicNumber(Conductor m, std::vector<BigRational> coeffs);

    /// zeta_m^k for any integer k.
    static CyclotomicNumber zeta(Conductor m, std::int64_t k = 1);

    Conductor conductor() const { return conductor_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) = default;
    /// Lexicographic on (conductor, coefficients); an arbitrary but fixed total order.
    friend std::strong_ordering operator<=>(const CyclotomicNumber& a, const CyclotomicNumber& b);

    std::size_t hash() const;

private:
    Conductor conductor_ = 1;
    std::vector<BigRational> coeffs_;
};

/// Multiplicative inverse; throws DivisionByZero.
CyclotomicNumber inverse(const CyclotomicNumber& a);

/// Complex conjugation zeta -> zeta^-1.
CyclotomicNumber conj(const CyclotomicNumber& a);

/// Re-expresses `a` in Q(zeta_target); throws NotASubfield unless conductor(a) | target.
CyclotomicNumber promote(const CyclotomicNumber& a, Conductor target);

/// Numerical value using zeta_m = exp(2 pi i / m).
std::complex<double> to_complex(const CyclotomicNumber& a);

/// Adds the unreduced product of two length-phi(m) coefficient vectors into
/// `scratch` (length >= 2 phi(m) - 1). Reduce with CyclotomicField::reduce.
void multiply_accumulate(const CyclotomicField& field, std::span<const BigRational> a, std::span<const BigRational> b,
                         std::vector<BigRational>& scratch);

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& value);

}  // namespace symref
