#pragma once

#include "symref/group.hpp"
#include "symref/reflection.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symref {

// Sn permuting n copies of C^2, 2 <= n <= 5.
GroupSpec symmetric_on_c2n_spec(int n);
FiniteMatrixGroup build_symmetric_on_c2n(int n, std::size_t max_order = kDefaultMaxOrder);

enum class WeylType { A, B, C, D, E, F, G };

/// Order of the Weyl group; throws ParameterOutOfRange for an invalid (type, rank).
std::size_t weyl_group_order(WeylType type, int rank);

/// Cartan matrix with a_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(WeylType type, int rank);

/// Simple reflections acting on h in the basis of simple roots (integer matrices, no form).
GroupSpec weyl_action_spec(WeylType type, int rank);
/// The same reflections doubled onto h (+) h*.
GroupSpec weyl_doubled_spec(WeylType type, int rank);
/// Throws OrderBoundExceeded up front when the known order is above max_order.
FiniteMatrixGroup build_weyl_doubled(WeylType type, int rank, std::size_t max_order = kDefaultMaxOrder);

enum class Sl2Kind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/**
 * Finite subgroups of SL(2, C) with exact generators.
 *
 * Cyclic of order k uses Q(zeta_k); binary dihedral of order 4k uses
 * Q(zeta_2k). The exceptional groups are unit quaternions written as 2x2
 * complex matrices: the Hurwitz units over Q(i), the octahedral units over
 * Q(zeta_8) (which holds sqrt 2), and the icosians over Q(zeta_20) (which
 * holds i and the golden ratio). `k` is ignored for the exceptional kinds.
 */
GroupSpec sl2_subgroup_spec(Sl2Kind kind, int k = 0);
FiniteMatrixGroup build_sl2_subgroup(Sl2Kind kind, int k = 0, std::size_t max_order = kDefaultMaxOrder);

/// G(m, p, n) as monomial matrices on C^n (no form); p | m.
GroupSpec imprimitive_action_spec(int m, int p, int n);
GroupSpec imprimitive_doubled_spec(int m, int p, int n);
FiniteMatrixGroup build_imprimitive_doubled(int m, int p, int n, std::size_t max_order = kDefaultMaxOrder);

/// <-I> on C^dim; dim even and >= 4 (on C^2, -I is itself a symplectic reflection).
GroupSpec negation_spec(int dim);
FiniteMatrixGroup build_negation(int dim, std::size_t max_order = kDefaultMaxOrder);

/// G x <-I> acting on V (+) C^extra_dim; base must carry the standard form, extra_dim even and >= 4.
GroupSpec product_with_negation_spec(const GroupSpec& base, int extra_dim);

struct CatalogEntry {
    std::string name;
    std::string family;
    std::string parameters;
    std::size_t expected_order;
    std::optional<std::size_t> expected_reflections;
    std::optional<VerdictKind> expected_verdict;
    std::function<GroupSpec()> spec;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Throws ParameterOutOfRange for an unknown name.
const CatalogEntry& find_catalog_entry(std::string_view name);

}  // namespace symref
