#include "symref/reflection.hpp"

#include "symref/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace symref {

ReflectionCensus census(const FiniteMatrixGroup& group) {
    ReflectionCensus out;
    out.codimensions.resize(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
        const std::size_t codim = fixed_space(group.element(i)).codim();
        out.codimensions[i] = codim;
        if (i == 0) continue;
        if (codim == 2) out.symplectic_reflections.push_back(i);
        if (codim == 1) out.complex_reflections.push_back(i);
    }
    return out;
}

Subgroup reflection_subgroup(const FiniteMatrixGroup& group, const ReflectionCensus& census) {
    Subgroup g0 = generated_subgroup(group, census.symplectic_reflections);
    // Reflections are closed under conjugation, so this cannot fail for a correct census.
    if (!is_normal(group, g0)) throw std::logic_error("reflection subgroup is not normal");
    return g0;
}

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::NoSymplecticResolution: return "NoSymplecticResolution";
        case VerdictKind::NecessaryConditionHolds: return "NecessaryConditionHolds";
    }
    return "?";
}

Verdict verdict(const FiniteMatrixGroup& group, const Subgroup& g0) {
    if (!group.is_symplectic()) throw BadInput("verdict requires a group with a symplectic form");
    Verdict v{};
    v.g0_order = g0.order();
    v.g0_index = g0.index();
    v.kind = v.g0_index > 1 ? VerdictKind::NoSymplecticResolution : VerdictKind::NecessaryConditionHolds;
    v.dim2_existence_note = group.dimension() == 2 && v.kind == VerdictKind::NecessaryConditionHolds;
    return v;
}

Verdict verdict(const FiniteMatrixGroup& group) {
    if (!group.is_symplectic()) throw BadInput("verdict requires a group with a symplectic form");
    const ReflectionCensus c = census(group);
    return verdict(group, reflection_subgroup(group, c));
}

ComplexReflectionReport complex_reflection_census(const FiniteMatrixGroup& action) {
    ComplexReflectionReport out{census(action), 0, false};
    const Subgroup h = generated_subgroup(action, out.census.complex_reflections);
    out.reflection_subgroup_order = h.order();
    out.generated_by_reflections = h.order() == action.order();
    return out;
}

ExactMatrix double_matrix(const ExactMatrix& g) {
    if (!g.is_square()) throw DimensionMismatch("cannot double a non-square matrix");
    const std::size_t k = g.rows();
    const ExactMatrix dual = inverse(g).transpose();
    ExactMatrix out(2 * k, 2 * k, g.conductor());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            out.set(2 * i, 2 * j, g.at(i, j));
            out.set(2 * i + 1, 2 * j + 1, dual.at(i, j));
        }
    }
    return out;
}

namespace {
std::vector<ExactMatrix> double_all(const std::vector<ExactMatrix>& gens) {
    std::vector<ExactMatrix> out;
    out.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        try {
            out.push_back(double_matrix(gens[i]));
        } catch (const SingularMatrix&) {
            throw SingularGenerator(i);
        }
    }
    return out;
}
}  // namespace

DoubledGroup double_action(const FiniteMatrixGroup& action, std::size_t max_order) {
    const std::size_t n = 2 * action.dimension();
    FiniteMatrixGroup doubled = closure(n, action.conductor(), standard_symplectic_form(n, action.conductor()),
                                        double_all(action.generators()), max_order);
    std::vector<std::size_t> image(action.order());
    for (std::size_t i = 0; i < action.order(); ++i) image[i] = doubled.index_of(double_matrix(action.element(i)));
    return {std::move(doubled), std::move(image)};
}

GroupSpec double_spec(const GroupSpec& action) {
    GroupSpec out;
    out.name = action.name + "-doubled";
    out.dimension = 2 * action.dimension;
    out.conductor = action.conductor;
    out.form_kind = FormKind::Standard;
    for (const auto& g : action.generators) {
        if (g.rows() != action.dimension || g.cols() != action.dimension)
            throw DimensionMismatch("generator shape does not match dimension " + std::to_string(action.dimension));
    }
    std::vector<ExactMatrix> gens;
    for (const auto& g : action.generators) gens.push_back(promote(g, action.conductor));
    out.generators = double_all(gens);
    return out;
}

std::size_t z_locus_min_codim(const FiniteMatrixGroup& group, const Subgroup& h, const ReflectionCensus& census) {
    std::size_t best = z_locus_sentinel(group);
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (!h.contains(i)) best = std::min(best, census.codimensions[i]);
    }
    return best;
}

}  // namespace symref
