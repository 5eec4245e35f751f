#include "symref/catalog.hpp"

#include "symref/errors.hpp"

#include <algorithm>

namespace symref {

namespace {

std::size_t factorial(int n) {
    std::size_t out = 1;
    for (int k = 2; k <= n; ++k) out *= static_cast<std::size_t>(k);
    return out;
}

void check_bound(std::size_t order, std::size_t max_order) {
    if (order > max_order) throw OrderBoundExceeded(max_order);
}

ExactMatrix permutation_block_swap(int blocks, int block_size, int a, int b) {
    const auto n = static_cast<std::size_t>(blocks * block_size);
    ExactMatrix out(n, n);
    for (int blk = 0; blk < blocks; ++blk) {
        const int target = blk == a ? b : blk == b ? a : blk;
        for (int k = 0; k < block_size; ++k)
            out.set(static_cast<std::size_t>(target * block_size + k), static_cast<std::size_t>(blk * block_size + k), 1);
    }
    return out;
}

char type_letter(WeylType type) { return "ABCDEFG"[static_cast<int>(type)]; }

// Unit quaternion a + b i + c j + d k as [[a + b i, c + d i], [-c + d i, a - b i]].
ExactMatrix quaternion(Conductor m, const CyclotomicNumber& a, const CyclotomicNumber& b, const CyclotomicNumber& c,
                       const CyclotomicNumber& d) {
    const CyclotomicNumber i = CyclotomicNumber::zeta(m, m / 4);
    const auto pa = promote(a, m), pb = promote(b, m), pc = promote(c, m), pd = promote(d, m);
    return ExactMatrix::from_rows({{pa + pb * i, pc + pd * i}, {-pc + pd * i, pa - pb * i}}, m);
}

CyclotomicNumber rational(std::int64_t num, std::int64_t den, Conductor m) { return {BigRational(num, den), m}; }

}  // namespace

// ---------------------------------------------------------------- symmetric groups

GroupSpec symmetric_on_c2n_spec(int n) {
    if (n < 2 || n > 5) throw ParameterOutOfRange("symmetric group needs 2 <= n <= 5, got " + std::to_string(n));
    GroupSpec spec;
    spec.name = "symmetric-c2n-" + std::to_string(n);
    spec.dimension = static_cast<std::size_t>(2 * n);
    for (int i = 0; i + 1 < n; ++i) spec.generators.push_back(permutation_block_swap(n, 2, i, i + 1));
    return spec;
}

FiniteMatrixGroup build_symmetric_on_c2n(int n, std::size_t max_order) {
    GroupSpec spec = symmetric_on_c2n_spec(n);
    check_bound(factorial(n), max_order);
    return closure(spec, max_order);
}

// ---------------------------------------------------------------- Weyl groups

std::size_t weyl_group_order(WeylType type, int rank) {
    auto bad = [&] {
        return ParameterOutOfRange(std::string("no root system of type ") + type_letter(type) + std::to_string(rank));
    };
    switch (type) {
        case WeylType::A:
            if (rank < 1 || rank > 8) throw bad();
            return factorial(rank + 1);
        case WeylType::B:
        case WeylType::C:
            if (rank < 2 || rank > 8) throw bad();
            return (std::size_t{1} << rank) * factorial(rank);
        case WeylType::D:
            if (rank < 4 || rank > 8) throw bad();
            return (std::size_t{1} << (rank - 1)) * factorial(rank);
        case WeylType::E:
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            if (rank == 8) return 696729600;
            throw bad();
        case WeylType::F:
            if (rank != 4) throw bad();
            return 1152;
        case WeylType::G:
            if (rank != 2) throw bad();
            return 12;
    }
    throw bad();
}

std::vector<std::vector<int>> cartan_matrix(WeylType type, int rank) {
    weyl_group_order(type, rank);
    const auto n = static_cast<std::size_t>(rank);
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto edge = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
    switch (type) {
        case WeylType::A:
        case WeylType::B:
        case WeylType::C:
            for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
            if (type == WeylType::B) a[n - 1][n - 2] = -2;
            if (type == WeylType::C) a[n - 2][n - 1] = -2;
            break;
        case WeylType::D:
            for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case WeylType::E: {
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            const std::pair<std::size_t, std::size_t> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
            for (auto [i, j] : edges)
                if (i < n && j < n) edge(i, j);
            break;
        }
        case WeylType::F:
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            a[1][2] = -2;
            break;
        case WeylType::G:
            a[0][1] = -1;
            a[1][0] = -3;
            break;
    }
    return a;
}

GroupSpec weyl_action_spec(WeylType type, int rank) {
    const auto a = cartan_matrix(type, rank);
    const auto n = static_cast<std::size_t>(rank);
    GroupSpec spec;
    spec.name = std::string("weyl-") + type_letter(type) + std::to_string(rank);
    spec.dimension = n;
    spec.form_kind = FormKind::None;
    // s_i(alpha_j) = alpha_j - a_ij alpha_i: column j is e_j - a_ij e_i.
    for (std::size_t i = 0; i < n; ++i) {
        ExactMatrix s = ExactMatrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) s.set(i, j, CyclotomicNumber((i == j ? 1 : 0) - a[i][j]));
        spec.generators.push_back(std::move(s));
    }
    return spec;
}

GroupSpec weyl_doubled_spec(WeylType type, int rank) {
    GroupSpec spec = double_spec(weyl_action_spec(type, rank));
    spec.name = std::string("weyl-") + type_letter(type) + std::to_string(rank);
    return spec;
}

FiniteMatrixGroup build_weyl_doubled(WeylType type, int rank, std::size_t max_order) {
    check_bound(weyl_group_order(type, rank), max_order);
    return closure(weyl_doubled_spec(type, rank), max_order);
}

// ---------------------------------------------------------------- SL(2)

GroupSpec sl2_subgroup_spec(Sl2Kind kind, int k) {
    GroupSpec spec;
    spec.dimension = 2;
    switch (kind) {
        case Sl2Kind::Cyclic: {
            if (k < 2 || k > 120) throw ParameterOutOfRange("cyclic subgroup needs 2 <= k <= 120");
            const auto m = static_cast<Conductor>(k);
            spec.name = "sl2-cyclic-" + std::to_string(k);
            spec.conductor = m;
            spec.generators.push_back(ExactMatrix::diagonal({CyclotomicNumber::zeta(m, 1), CyclotomicNumber::zeta(m, -1)}, m));
            break;
        }
        case Sl2Kind::BinaryDihedral: {
            if (k < 2 || k > 60) throw ParameterOutOfRange("binary dihedral subgroup needs 2 <= k <= 60");
            const auto m = static_cast<Conductor>(2 * k);
            spec.name = "sl2-binary-dihedral-" + std::to_string(k);
            spec.conductor = m;
            spec.generators.push_back(ExactMatrix::diagonal({CyclotomicNumber::zeta(m, 1), CyclotomicNumber::zeta(m, -1)}, m));
            spec.generators.push_back(ExactMatrix::from_rows({{0, 1}, {-1, 0}}, m));
            break;
        }
        case Sl2Kind::BinaryTetrahedral: {
            const Conductor m = 4;
            spec.name = "sl2-binary-tetrahedral";
            spec.conductor = m;
            const auto half = rational(1, 2, m);
            spec.generators.push_back(quaternion(m, 0, 1, 0, 0));
            spec.generators.push_back(quaternion(m, half, half, half, half));
            break;
        }
        case Sl2Kind::BinaryOctahedral: {
            const Conductor m = 8;
            spec.name = "sl2-binary-octahedral";
            spec.conductor = m;
            const auto half = rational(1, 2, m);
            // 1/sqrt 2 = (zeta_8 + zeta_8^-1) / 2
            const auto root_half = (CyclotomicNumber::zeta(m, 1) + CyclotomicNumber::zeta(m, -1)) * half;
            spec.generators.push_back(quaternion(m, root_half, root_half, 0, 0));
            spec.generators.push_back(quaternion(m, half, half, half, half));
            break;
        }
        case Sl2Kind::BinaryIcosahedral: {
            const Conductor m = 20;
            spec.name = "sl2-binary-icosahedral";
            spec.conductor = m;
            const auto half = rational(1, 2, m);
            // 1/phi = zeta_5 + zeta_5^-1 and phi = 1 + 1/phi, with zeta_5 = zeta_20^4.
            const auto inv_phi = CyclotomicNumber::zeta(m, 4) + CyclotomicNumber::zeta(m, -4);
            const auto phi = CyclotomicNumber(1, m) + inv_phi;
            spec.generators.push_back(quaternion(m, 0, 1, 0, 0));
            spec.generators.push_back(quaternion(m, half, half, half, half));
            spec.generators.push_back(quaternion(m, phi * half, inv_phi * half, half, 0));
            break;
        }
    }
    return spec;
}

FiniteMatrixGroup build_sl2_subgroup(Sl2Kind kind, int k, std::size_t max_order) {
    return closure(sl2_subgroup_spec(kind, k), max_order);
}

// ---------------------------------------------------------------- G(m, p, n)

GroupSpec imprimitive_action_spec(int m, int p, int n) {
    if (m < 1 || p < 1 || n < 1 || m % p != 0 || m > 60 || n > 8)
        throw ParameterOutOfRange("G(m,p,n) needs m, n >= 1 and p | m; got G(" + std::to_string(m) + "," +
                                  std::to_string(p) + "," + std::to_string(n) + ")");
    const auto cm = static_cast<Conductor>(m);
    const auto dim = static_cast<std::size_t>(n);
    GroupSpec spec;
    spec.name = "imprimitive-" + std::to_string(m) + "-" + std::to_string(p) + "-" + std::to_string(n);
    spec.dimension = dim;
    spec.conductor = cm;
    spec.form_kind = FormKind::None;
    for (int i = 0; i + 1 < n; ++i) spec.generators.push_back(promote(permutation_block_swap(n, 1, i, i + 1), cm));
    if (n >= 2 && m > 1) {
        // [[0, z^-1], [z, 0]]: the transposition twisted by zeta_m; a reflection of G(m, m, n).
        ExactMatrix t = ExactMatrix::identity(dim, cm);
        t.set(0, 0, CyclotomicNumber(0, cm));
        t.set(1, 1, CyclotomicNumber(0, cm));
        t.set(0, 1, CyclotomicNumber::zeta(cm, -1));
        t.set(1, 0, CyclotomicNumber::zeta(cm, 1));
        spec.generators.push_back(std::move(t));
    }
    if (p < m) {
        ExactMatrix d = ExactMatrix::identity(dim, cm);
        d.set(0, 0, CyclotomicNumber::zeta(cm, p));
        spec.generators.push_back(std::move(d));
    }
    return spec;
}

GroupSpec imprimitive_doubled_spec(int m, int p, int n) { return double_spec(imprimitive_action_spec(m, p, n)); }

FiniteMatrixGroup build_imprimitive_doubled(int m, int p, int n, std::size_t max_order) {
    GroupSpec spec = imprimitive_doubled_spec(m, p, n);
    std::size_t order = factorial(n);
    for (int i = 0; i < n; ++i) order *= static_cast<std::size_t>(m);
    order /= static_cast<std::size_t>(p);
    check_bound(order, max_order);
    return closure(spec, max_order);
}

// ---------------------------------------------------------------- negation fixtures

GroupSpec negation_spec(int dim) {
    if (dim < 4 || dim % 2 != 0 || dim > 64)
        throw ParameterOutOfRange("negation fixture needs an even dimension >= 4, got " + std::to_string(dim));
    GroupSpec spec;
    spec.name = "negation-" + std::to_string(dim);
    spec.dimension = static_cast<std::size_t>(dim);
    spec.generators.push_back(-ExactMatrix::identity(spec.dimension));
    return spec;
}

FiniteMatrixGroup build_negation(int dim, std::size_t max_order) { return closure(negation_spec(dim), max_order); }

GroupSpec product_with_negation_spec(const GroupSpec& base, int extra_dim) {
    if (base.form_kind != FormKind::Standard) throw ParameterOutOfRange("base group must carry the standard form");
    if (extra_dim < 4 || extra_dim % 2 != 0)
        throw ParameterOutOfRange("negation block needs an even dimension >= 4, got " + std::to_string(extra_dim));
    const std::size_t n = base.dimension;
    const std::size_t total = n + static_cast<std::size_t>(extra_dim);
    const Conductor m = base.conductor;
    GroupSpec spec;
    spec.name = base.name + "+negation-" + std::to_string(extra_dim);
    spec.dimension = total;
    spec.conductor = m;
    for (const auto& g : base.generators) {
        ExactMatrix h = ExactMatrix::identity(total, m);
        const ExactMatrix gp = promote(g, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h.set(i, j, gp.at(i, j));
        spec.generators.push_back(std::move(h));
    }
    ExactMatrix neg = ExactMatrix::identity(total, m);
    for (std::size_t i = n; i < total; ++i) neg.set(i, i, CyclotomicNumber(-1, m));
    spec.generators.push_back(std::move(neg));
    return spec;
}

// ---------------------------------------------------------------- the table

namespace {

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> out;
    const auto holds = VerdictKind::NecessaryConditionHolds;
    const auto obstructed = VerdictKind::NoSymplecticResolution;

    for (int n = 2; n <= 5; ++n) {
        out.push_back({"symmetric-c2n-" + std::to_string(n), "symmetric", "n=" + std::to_string(n), factorial(n),
                       static_cast<std::size_t>(n * (n - 1) / 2), holds, [n] { return symmetric_on_c2n_spec(n); }});
    }

    struct WeylCase {
        WeylType type;
        int rank;
        std::size_t positive_roots;
    };
    const WeylCase weyl[] = {{WeylType::A, 1, 1},  {WeylType::A, 2, 3},  {WeylType::A, 3, 6},  {WeylType::A, 4, 10},
                             {WeylType::B, 2, 4},  {WeylType::B, 3, 9},  {WeylType::C, 2, 4},  {WeylType::C, 3, 9},
                             {WeylType::D, 4, 12}, {WeylType::G, 2, 6},  {WeylType::F, 4, 24}, {WeylType::E, 6, 36},
                             {WeylType::E, 7, 63}, {WeylType::E, 8, 120}};
    for (const auto& w : weyl) {
        const std::string label = std::string(1, type_letter(w.type)) + std::to_string(w.rank);
        out.push_back({"weyl-" + label, "weyl-doubled", "type=" + label, weyl_group_order(w.type, w.rank),
                       w.positive_roots, holds, [w] { return weyl_doubled_spec(w.type, w.rank); }});
    }

    for (int k = 2; k <= 6; ++k) {
        out.push_back({"sl2-cyclic-" + std::to_string(k), "sl2", "kind=cyclic k=" + std::to_string(k),
                       static_cast<std::size_t>(k), static_cast<std::size_t>(k - 1), holds,
                       [k] { return sl2_subgroup_spec(Sl2Kind::Cyclic, k); }});
    }
    for (int k = 2; k <= 4; ++k) {
        out.push_back({"sl2-binary-dihedral-" + std::to_string(k), "sl2", "kind=binary_dihedral k=" + std::to_string(k),
                       static_cast<std::size_t>(4 * k), static_cast<std::size_t>(4 * k - 1), holds,
                       [k] { return sl2_subgroup_spec(Sl2Kind::BinaryDihedral, k); }});
    }
    out.push_back({"sl2-binary-tetrahedral", "sl2", "kind=binary_tetrahedral", 24, 23, holds,
                   [] { return sl2_subgroup_spec(Sl2Kind::BinaryTetrahedral); }});
    out.push_back({"sl2-binary-octahedral", "sl2", "kind=binary_octahedral", 48, 47, holds,
                   [] { return sl2_subgroup_spec(Sl2Kind::BinaryOctahedral); }});
    out.push_back({"sl2-binary-icosahedral", "sl2", "kind=binary_icosahedral", 120, 119, holds,
                   [] { return sl2_subgroup_spec(Sl2Kind::BinaryIcosahedral); }});

    for (int m = 1; m <= 4; ++m) {
        for (int p = 1; p <= m; ++p) {
            if (m % p != 0) continue;
            for (int n = 1; n <= 3; ++n) {
                std::size_t order = factorial(n);
                for (int i = 0; i < n; ++i) order *= static_cast<std::size_t>(m);
                order /= static_cast<std::size_t>(p);
                const auto reflections = static_cast<std::size_t>(m * n * (n - 1) / 2 + n * (m / p - 1));
                out.push_back({"imprimitive-" + std::to_string(m) + "-" + std::to_string(p) + "-" + std::to_string(n),
                               "imprimitive-doubled",
                               "m=" + std::to_string(m) + " p=" + std::to_string(p) + " n=" + std::to_string(n), order,
                               reflections, holds, [m, p, n] { return imprimitive_doubled_spec(m, p, n); }});
            }
        }
    }

    for (int dim : {4, 6, 8}) {
        out.push_back({"negation-" + std::to_string(dim), "negation", "dim=" + std::to_string(dim), 2, 0, obstructed,
                       [dim] { return negation_spec(dim); }});
    }
    out.push_back({"symmetric-c2n-2+negation-4", "product-with-negation", "base=symmetric-c2n-2 extra=4", 4, 1,
                   obstructed, [] { return product_with_negation_spec(symmetric_on_c2n_spec(2), 4); }});
    out.push_back({"symmetric-c2n-3+negation-4", "product-with-negation", "base=symmetric-c2n-3 extra=4", 12, 3,
                   obstructed, [] { return product_with_negation_spec(symmetric_on_c2n_spec(3), 4); }});
    out.push_back({"weyl-B2+negation-4", "product-with-negation", "base=weyl-B2 extra=4", 16, 4, obstructed,
                   [] { return product_with_negation_spec(weyl_doubled_spec(WeylType::B, 2), 4); }});
    out.push_back({"sl2-cyclic-3+negation-4", "product-with-negation", "base=sl2-cyclic-3 extra=4", 6, 2, obstructed,
                   [] { return product_with_negation_spec(sl2_subgroup_spec(Sl2Kind::Cyclic, 3), 4); }});
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry& find_catalog_entry(std::string_view name) {
    const auto& entries = catalog_entries();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
    if (it == entries.end()) throw ParameterOutOfRange("unknown catalog entry '" + std::string(name) + "'");
    return *it;
}

}  // namespace symref
