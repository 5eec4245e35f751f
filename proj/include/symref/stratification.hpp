#pragma once

#include "symref/group.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace symref {

struct Stratum {
    Subspace subspace;
    std::size_t codim = 0;
    /// Number of group elements fixing the subspace pointwise.
    std::size_t stabilizer_order = 1;
    /// Immediate sub-strata: strata properly contained in this one with nothing in between.
    std::vector<std::size_t> covers;
    /// Index of the G-orbit of this subspace (orbits numbered 0, 1, ... in order of their first stratum).
    std::size_t orbit = 0;
    std::size_t orbit_size = 1;
};

/**
 * The G-stratification of V: the intersection lattice of element fixed spaces.
 *
 * Every pointwise-fixed locus of a subgroup is an intersection of element
 * fixed spaces, so the intersection closure yields the same family of closed
 * strata without walking the subgroup lattice. Distinct subgroups with equal
 * fixed spaces give a single stratum.
 *
 * Strata are sorted by (codim ascending, canonical subspace order); stratum 0
 * is V itself.
 */
struct StratificationLattice {
    std::vector<Stratum> strata;
    std::size_t orbit_count = 0;
};

StratificationLattice build_lattice(const FiniteMatrixGroup& group);

/// Stratum index -> dimension of the resolution fiber over its open part.
using ResolutionFiberData = std::map<std::size_t, std::size_t>;

struct SemismallRow {
    std::size_t stratum;
    std::size_t codim;
    std::size_t fiber_dim;
    bool passes;  // 2 * fiber_dim <= codim
};

struct SemismallResult {
    std::vector<SemismallRow> rows;
    bool passes = true;
};

/// Throws MissingFiberData for the first stratum without an entry.
SemismallResult semismall_check(const StratificationLattice& lattice, const ResolutionFiberData& fibers);

}  // namespace symref
