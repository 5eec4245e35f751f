#include "symref/rational.hpp"

#include "symref/errors.hpp"

#include <cctype>
#include <climits>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace symref {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kSmallMin = static_cast<i128>(INT64_MIN) + 1;
constexpr i128 kSmallMax = static_cast<i128>(INT64_MAX);

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t abs64(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v); }

mpz_class mpz_from_i128(i128 v) {
    u128 mag = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return v < 0 ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != LONG_MIN; }

}  // namespace

BigRational::BigRational(std::int64_t value) {
    if (value == INT64_MIN) {
        assign(mpq_class(mpz_from_i128(value)));
    } else {
        num_ = value;
    }
}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    *this = from_i128(num, den);
}

void BigRational::assign(const mpq_class& value) {
    // Callers pass canonicalized values; GMP arithmetic results are always canonical.
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (fits_small(n) && fits_small(d)) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(value);
    }
}

BigRational BigRational::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return {};
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g != 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    BigRational out;
    if (num >= kSmallMin && num <= kSmallMax && den <= kSmallMax) {
        out.num_ = static_cast<std::int64_t>(num);
        out.den_ = static_cast<std::int64_t>(den);
    } else {
        mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
        out.assign(q);
    }
    return out;
}

BigRational BigRational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto is_integer_literal = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = trim(text);
    std::string_view num_text = body;
    std::string_view den_text = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = trim(body.substr(0, slash));
        den_text = trim(body.substr(slash + 1));
    }
    if (!is_integer_literal(num_text, true) || !is_integer_literal(den_text, false))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    if (num_text.front() == '+') num_text.remove_prefix(1);
    mpz_class n(std::string(num_text), 10);
    mpz_class d(std::string(den_text), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return BigRational(q);
}

std::string BigRational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class BigRational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    return q;
}

double BigRational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

bool BigRational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int BigRational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

BigRational BigRational::operator-() const {
    if (big_) return BigRational(mpq_class(-*big_));
    BigRational out = *this;
    out.num_ = -num_;
    return out;
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    if (big_) return BigRational(mpq_class(1 / *big_));
    BigRational out;
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
    return out;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    if (a.big_ || b.big_) return BigRational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
        return BigRational::from_i128(static_cast<__int128>(a.num_) + b.num_, 1);
    }
    if (a.den_ == b.den_) return BigRational::from_i128(static_cast<__int128>(a.num_) + b.num_, a.den_);
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return BigRational::from_i128(num, den);
}

BigRational operator-(const BigRational& a, const BigRational& b) { return a + (-b); }

BigRational operator*(const BigRational& a, const BigRational& b) {
    if (a.big_ || b.big_) return BigRational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0) return {};
    if (a.den_ == 1 && b.den_ == 1) return BigRational::from_i128(static_cast<__int128>(a.num_) * b.num_, 1);
    // Cross-cancel so the 128-bit product is already reduced.
    std::uint64_t g1 = gcd64(abs64(a.num_), static_cast<std::uint64_t>(b.den_));
    std::uint64_t g2 = gcd64(abs64(b.num_), static_cast<std::uint64_t>(a.den_));
    auto sg1 = static_cast<std::int64_t>(g1);
    auto sg2 = static_cast<std::int64_t>(g2);
    __int128 num = static_cast<__int128>(a.num_ / sg1) * (b.num_ / sg2);
    __int128 den = static_cast<__int128>(a.den_ / sg2) * (b.den_ / sg1);
    return BigRational::from_i128(num, den);
}

BigRational operator/(const BigRational& a, const BigRational& b) { return a * b.reciprocal(); }

bool operator==(const BigRational& a, const BigRational& b) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    if (a.big_ || b.big_) return false;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    if (a.big_ || b.big_) {
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::size_t BigRational::hash() const {
    auto mix = [](std::size_t seed, std::size_t v) {
        return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    };
    if (big_) {
        const mpz_srcptr n = big_->get_num_mpz_t();
        const mpz_srcptr d = big_->get_den_mpz_t();
        std::size_t h = std::hash<long>{}(static_cast<long>(mpz_size(n)));
        h = mix(h, static_cast<std::size_t>(mpz_getlimbn(n, 0)));
        h = mix(h, static_cast<std::size_t>(mpz_sgn(n)));
        h = mix(h, static_cast<std::size_t>(mpz_getlimbn(d, 0)));
        return h;
    }
    return mix(std::hash<std::int64_t>{}(num_), std::hash<std::int64_t>{}(den_));
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.to_string(); }

}  // namespace symref
