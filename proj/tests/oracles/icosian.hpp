#pragma once
// The 120 icosians as unit quaternions with coordinates in Q(sqrt 5).
// Built from the classical coordinate description, independent of any matrix generators.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

/// a + b sqrt(5)
struct Q5 {
    mpq_class a = 0, b = 0;

    friend Q5 operator+(const Q5& x, const Q5& y) { return {x.a + y.a, x.b + y.b}; }
    friend Q5 operator-(const Q5& x, const Q5& y) { return {x.a - y.a, x.b - y.b}; }
    friend Q5 operator*(const Q5& x, const Q5& y) { return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a}; }
    Q5 operator-() const { return {-a, -b}; }
    friend bool operator==(const Q5& x, const Q5& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const Q5& x, const Q5& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); }
    double value() const { return a.get_d() + b.get_d() * std::sqrt(5.0); }
};

struct Quaternion {
    std::array<Q5, 4> c;  // 1, i, j, k

    friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
        const auto& [a1, b1, c1, d1] = p.c;
        const auto& [a2, b2, c2, d2] = q.c;
        return {{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                 a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
    }
    friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.c == q.c; }
    friend bool operator<(const Quaternion& p, const Quaternion& q) { return p.c < q.c; }
    bool is_one() const { return c[0] == Q5{1, 0} && c[1] == Q5{} && c[2] == Q5{} && c[3] == Q5{}; }
};

inline std::vector<Quaternion> icosians() {
    const Q5 zero{}, one{1, 0}, half{mpq_class(1, 2), 0};
    const Q5 phi_half{mpq_class(1, 4), mpq_class(1, 4)};       // phi / 2
    const Q5 phi_inv_half{mpq_class(-1, 4), mpq_class(1, 4)};  // phi^{-1} / 2
    std::set<Quaternion> out;

    for (int axis = 0; axis < 4; ++axis) {
        for (int s : {1, -1}) {
            Quaternion q{{zero, zero, zero, zero}};
            q.c[static_cast<std::size_t>(axis)] = s == 1 ? one : -one;
            out.insert(q);
        }
    }
    for (int signs = 0; signs < 16; ++signs) {
        Quaternion q;
        for (int i = 0; i < 4; ++i) q.c[static_cast<std::size_t>(i)] = (signs >> i) & 1 ? -half : half;
        out.insert(q);
    }
    // Even permutations of (0, +-1, +-phi^{-1}, +-phi) / 2.
    const std::array<int, 4> base{0, 1, 2, 3};
    std::array<int, 4> perm = base;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        if (inversions % 2 != 0) continue;
        for (int signs = 0; signs < 8; ++signs) {
            const std::array<Q5, 4> values{zero, (signs & 1) ? -half : half, (signs & 2) ? -phi_inv_half : phi_inv_half,
                                           (signs & 4) ? -phi_half : phi_half};
            Quaternion q;
            for (int i = 0; i < 4; ++i) q.c[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            out.insert(q);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {out.begin(), out.end()};
}

inline bool closed_under_product(const std::vector<Quaternion>& group) {
    const std::set<Quaternion> members(group.begin(), group.end());
    for (const auto& p : group)
        for (const auto& q : group)
            if (!members.count(p * q)) return false;
    return true;
}

inline int quaternion_order(const Quaternion& q) {
    Quaternion power = q;
    int k = 1;
    while (!power.is_one()) {
        power = power * q;
        ++k;
    }
    return k;
}

}  // namespace oracle
