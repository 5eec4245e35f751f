#pragma once

#include "symref/group.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace symref {

/// Fixed-space codimension of every element, with the reflections picked out.
struct ReflectionCensus {
    std::vector<std::size_t> codimensions;            // per element index
    std::vector<std::size_t> symplectic_reflections;  // codim 2, non-identity
    std::vector<std::size_t> complex_reflections;     // codim 1, non-identity
};

ReflectionCensus census(const FiniteMatrixGroup& group);

/// G_0: the subgroup generated by all symplectic reflections. Always normal.
Subgroup reflection_subgroup(const FiniteMatrixGroup& group, const ReflectionCensus& census);

enum class VerdictKind {
    NoSymplecticResolution,   // G_0 is a proper subgroup: V/G has no symplectic resolution
    NecessaryConditionHolds,  // G is generated by symplectic reflections; existence stays undecided
};

std::string_view to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind;
    std::size_t g0_order;
    std::size_t g0_index;
    /// dim V = 2 and the condition holds: every finite subgroup of SL(2) has a resolution (Du Val).
    bool dim2_existence_note;
};

/// Throws BadInput for a group without a symplectic form.
Verdict verdict(const FiniteMatrixGroup& group);
Verdict verdict(const FiniteMatrixGroup& group, const Subgroup& g0);

struct ComplexReflectionReport {
    ReflectionCensus census;
    std::size_t reflection_subgroup_order;
    /// Complex reflections generate the group, i.e. W/G is smooth (Chevalley-Shephard-Todd).
    bool generated_by_reflections;
};

ComplexReflectionReport complex_reflection_census(const FiniteMatrixGroup& action);

/// g on W  ->  g (+) g^{-T} on W (+) W*, coordinates interleaved (w_1, f_1, w_2, f_2, ...)
/// so the canonical pairing becomes the standard block form. Throws SingularMatrix.
ExactMatrix double_matrix(const ExactMatrix& g);

struct DoubledGroup {
    FiniteMatrixGroup group;
    std::vector<std::size_t> image;  // element index on W -> element index on W (+) W*
};

DoubledGroup double_action(const FiniteMatrixGroup& action, std::size_t max_order = kDefaultMaxOrder);

/// Generators of the doubled action, ready for closure() with the standard form. Throws SingularGenerator.
GroupSpec double_spec(const GroupSpec& action);

/// Minimum fixed-space codimension over G \ H; dimension + 1 when H = G.
std::size_t z_locus_min_codim(const FiniteMatrixGroup& group, const Subgroup& h, const ReflectionCensus& census);

inline std::size_t z_locus_sentinel(const FiniteMatrixGroup& group) { return group.dimension() + 1; }

}  // namespace symref
