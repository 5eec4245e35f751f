#include "symref/cyclotomic.hpp"

#include "symref/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace symref {

std::size_t euler_phi(Conductor m) {
    if (m == 0) throw std::invalid_argument("conductor must be positive");
    std::size_t result = m;
    Conductor n = m;
    for (Conductor p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(Conductor m) {
    if (m == 0) throw std::invalid_argument("conductor must be positive");
    // z^m - 1 = prod_{d | m} Phi_d
    std::vector<std::int64_t> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (Conductor d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const std::vector<std::int64_t>& divisor = CyclotomicField::get(d).modulus();
        const std::size_t dd = divisor.size() - 1;
        std::vector<std::int64_t> quotient(poly.size() - dd, 0);
        for (std::size_t k = poly.size(); k-- > dd;) {
            std::int64_t c = poly[k];
            quotient[k - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * divisor[j];
        }
        for (std::size_t j = 0; j < dd; ++j)
            if (poly[j] != 0) throw std::logic_error("inexact cyclotomic division");
        poly = std::move(quotient);
    }
    return poly;
}

const CyclotomicField& CyclotomicField::get(Conductor m) {
    static std::recursive_mutex mutex;
    static std::map<Conductor, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        // Construction recurses into get() for the divisors of m.
        std::unique_ptr<CyclotomicField> field(new CyclotomicField(m));
        it = cache.emplace(m, std::move(field)).first;
    }
    return *it->second;
}

CyclotomicField::CyclotomicField(Conductor m) : conductor_(m), modulus_(cyclotomic_polynomial(m)) {}

void CyclotomicField::reduce(std::vector<BigRational>& poly) const {
    const std::size_t deg = degree();
    for (std::size_t k = poly.size(); k-- > deg;) {
        if (poly[k].is_zero()) continue;
        const BigRational c = poly[k];
        for (std::size_t j = 0; j < deg; ++j) {
            if (modulus_[j] != 0) poly[k - deg + j] -= c * BigRational(modulus_[j]);
        }
    }
    poly.resize(deg);
}

void multiply_accumulate(const CyclotomicField& field, std::span<const BigRational> a, std::span<const BigRational> b,
                         std::vector<BigRational>& scratch) {
    const std::size_t deg = field.degree();
    for (std::size_t i = 0; i < deg; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (b[j].is_zero()) continue;
            scratch[i + j] += a[i] * b[j];
        }
    }
}

CyclotomicNumber::CyclotomicNumber(const BigRational& value, Conductor m)
    : conductor_(m), coeffs_(euler_phi(m)) {
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(Conductor m, std::vector<BigRational> coeffs)
    : conductor_(m), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != euler_phi(m))
        throw std::invalid_argument("expected " + std::to_string(euler_phi(m)) + " coefficients for conductor " +
                                    std::to_string(m) + ", got " + std::to_string(coeffs_.size()));
}

CyclotomicNumber CyclotomicNumber::zeta(Conductor m, std::int64_t k) {
    const auto& field = CyclotomicField::get(m);
    std::int64_t e = k % static_cast<std::int64_t>(m);
    if (e < 0) e += m;
    std::vector<BigRational> poly(std::max<std::size_t>(static_cast<std::size_t>(e) + 1, field.degree()));
    poly[static_cast<std::size_t>(e)] = 1;
    field.reduce(poly);
    return CyclotomicNumber(m, std::move(poly));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_one() const { return coeffs_[0].is_one() && is_rational(); }

bool CyclotomicNumber::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor_ != b.conductor_) throw ConductorMismatch(a.conductor_, b.conductor_);
    CyclotomicNumber out = a;
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
    return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor_ != b.conductor_) throw ConductorMismatch(a.conductor_, b.conductor_);
    const auto& field = CyclotomicField::get(a.conductor_);
    if (field.degree() == 1) return CyclotomicNumber(a.coeffs_[0] * b.coeffs_[0], a.conductor_);
    std::vector<BigRational> poly(2 * field.degree() - 1);
    multiply_accumulate(field, a.coeffs_, b.coeffs_, poly);
    field.reduce(poly);
    return CyclotomicNumber(a.conductor_, std::move(poly));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * inverse(b); }

std::strong_ordering operator<=>(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
    return a.coeffs_ <=> b.coeffs_;
}

std::size_t CyclotomicNumber::hash() const {
    std::size_t h = conductor_;
    for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
    return h;
}

CyclotomicNumber inverse(const CyclotomicNumber& a) {
    if (a.is_zero()) throw DivisionByZero();
    const Conductor m = a.conductor();
    const auto& field = CyclotomicField::get(m);
    const std::size_t n = field.degree();
    if (n == 1) return CyclotomicNumber(a.coeffs()[0].reciprocal(), m);

    // Column j of the multiplication-by-a map is a * z^j; solve M x = e_0.
    std::vector<std::vector<BigRational>> aug(n, std::vector<BigRational>(n + 1));
    CyclotomicNumber column = a;
    const CyclotomicNumber z = CyclotomicNumber::zeta(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) aug[i][j] = column.coeffs()[i];
        column = column * z;
    }
    aug[0][n] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw DivisionByZero();
        std::swap(aug[pivot], aug[col]);
        const BigRational scale = aug[col][col].reciprocal();
        for (std::size_t k = col; k <= n; ++k) aug[col][k] *= scale;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            const BigRational f = aug[r][col];
            for (std::size_t k = col; k <= n; ++k) aug[r][k] -= f * aug[col][k];
        }
    }
    std::vector<BigRational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = aug[i][n];
    return CyclotomicNumber(m, std::move(out));
}

CyclotomicNumber conj(const CyclotomicNumber& a) {
    const Conductor m = a.conductor();
    if (m <= 2) return a;
    const auto& field = CyclotomicField::get(m);
    std::vector<BigRational> poly(m);
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) poly[(m - k) % m] += a.coeffs()[k];
    field.reduce(poly);
    return CyclotomicNumber(m, std::move(poly));
}

CyclotomicNumber promote(const CyclotomicNumber& a, Conductor target) {
    const Conductor m = a.conductor();
    if (target == 0 || target % m != 0) throw NotASubfield(m, target);
    if (target == m) return a;
    const auto& field = CyclotomicField::get(target);
    const std::size_t step = target / m;
    std::vector<BigRational> poly(std::max<std::size_t>((a.coeffs().size() - 1) * step + 1, field.degree()));
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) poly[k * step] = a.coeffs()[k];
    field.reduce(poly);
    return CyclotomicNumber(target, std::move(poly));
}

std::complex<double> to_complex(const CyclotomicNumber& a) {
    std::complex<double> sum = 0.0;
    const double turn = 2.0 * std::numbers::pi / a.conductor();
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        if (a.coeffs()[k].is_zero()) continue;
        sum += a.coeffs()[k].to_double() * std::polar(1.0, turn * static_cast<double>(k));
    }
    return sum;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& value) {
    if (value.is_rational()) return os << value.coeffs()[0];
    bool first = true;
    for (std::size_t k = 0; k < value.coeffs().size(); ++k) {
        const BigRational& c = value.coeffs()[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
        } else {
            if (!c.is_one()) os << "(" << c << ")*";
            os << "z" << value.conductor() << "^" << k;
        }
    }
    return os;
}

}  // namespace symref
