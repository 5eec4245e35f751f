#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace symref {

/**
 * Arbitrary precision rational number, always stored in lowest terms with a
 * positive denominator.
 *
 * Values whose numerator and denominator fit in 64 bits live inline and are
 * combined with 128-bit intermediates; anything larger is promoted to a shared
 * immutable GMP rational. The split is canonical (a value fits inline iff it is
 * stored inline), so equality and hashing can look at the representation.
 */
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    BigRational(std::int64_t num, std::int64_t den);
    explicit BigRational(const mpq_class& value) { assign(value); }

    /// Accepts "p", "-p", "p/q" with decimal digits; throws std::invalid_argument.
    static BigRational parse(std::string_view text);

    std::string to_string() const;
    mpq_class to_mpq() const;
    double to_double() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    BigRational operator-() const;
    BigRational reciprocal() const;

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    BigRational& operator+=(const BigRational& other) { return *this = *this + other; }
    BigRational& operator-=(const BigRational& other) { return *this = *this - other; }
    BigRational& operator*=(const BigRational& other) { return *this = *this * other; }
    BigRational& operator/=(const BigRational& other) { return *this = *this / other; }

    friend bool operator==(const BigRational& a, const BigRational& b);
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

    std::size_t hash() const;

private:
    using i128 = __int128;

    static BigRational from_i128(i128 num, i128 den);
    void assign(const mpq_class& value);

    // Inline value num_/den_ is meaningful only when big_ is null.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

struct BigRationalHash {
    std::size_t operator()(const BigRational& value) const { return value.hash(); }
};

}  // namespace symref
