#include "symref/stratification.hpp"

#include "symref/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace symref {

namespace {

bool fixes_pointwise(const ExactMatrix& g, const Subspace& s) {
    for (const auto& v : s.basis())
        if (g * v != v) return false;
    return true;
}

}  // namespace

StratificationLattice build_lattice(const FiniteMatrixGroup& group) {
    std::set<Subspace> family;
    for (const auto& g : group.elements()) family.insert(fixed_space(g));

    // Fixpoint: intersect every new subspace with everything seen so far.
    std::vector<Subspace> order(family.begin(), family.end());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Subspace meet = intersect(order[i], order[j]);
            if (family.insert(meet).second) order.push_back(std::move(meet));
        }
    }

    // std::set order is already (dimension descending, canonical basis).
    StratificationLattice lattice;
    std::map<Subspace, std::size_t> position;
    for (const auto& s : family) {
        Stratum st;
        st.subspace = s;
        st.codim = s.codim();
        position.emplace(s, lattice.strata.size());
        lattice.strata.push_back(std::move(st));
    }

    for (auto& st : lattice.strata) {
        st.stabilizer_order = static_cast<std::size_t>(std::count_if(
            group.elements().begin(), group.elements().end(),
            [&](const ExactMatrix& g) { return fixes_pointwise(g, st.subspace); }));
    }

    const std::size_t n = lattice.strata.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& upper = lattice.strata[i];
        std::vector<std::size_t> below;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && lattice.strata[j].codim > upper.codim && upper.subspace.contains(lattice.strata[j].subspace))
                below.push_back(j);
        }
        for (std::size_t j : below) {
            bool immediate = std::none_of(below.begin(), below.end(), [&](std::size_t k) {
                return k != j && lattice.strata[k].subspace.contains(lattice.strata[j].subspace) &&
                       lattice.strata[k].codim < lattice.strata[j].codim;
            });
            if (immediate) upper.covers.push_back(j);
        }
    }

    // G-orbits; generators suffice since the orbit is closed under them.
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit_of(n, unassigned);
    for (std::size_t i = 0; i < n; ++i) {
        if (orbit_of[i] != unassigned) continue;
        const std::size_t id = lattice.orbit_count++;
        std::vector<std::size_t> members{i};
        orbit_of[i] = id;
        for (std::size_t pos = 0; pos < members.size(); ++pos) {
            for (const auto& g : group.generators()) {
                auto it = position.find(image(g, lattice.strata[members[pos]].subspace));
                if (it == position.end()) throw std::logic_error("stratification is not G-stable");
                if (orbit_of[it->second] != unassigned) continue;
                orbit_of[it->second] = id;
                members.push_back(it->second);
            }
        }
        for (std::size_t k : members) {
            lattice.strata[k].orbit = id;
            lattice.strata[k].orbit_size = members.size();
        }
    }
    return lattice;
}

SemismallResult semismall_check(const StratificationLattice& lattice, const ResolutionFiberData& fibers) {
    SemismallResult out;
    for (std::size_t i = 0; i < lattice.strata.size(); ++i) {
        auto it = fibers.find(i);
        if (it == fibers.end()) throw MissingFiberData(i);
        const std::size_t codim = lattice.strata[i].codim;
        SemismallRow row{i, codim, it->second, 2 * it->second <= codim};
        out.passes = out.passes && row.passes;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace symref
