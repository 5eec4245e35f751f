#pragma once

#include "symref/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace symref {

inline constexpr std::size_t kDefaultMaxOrder = 100000;

enum class FormKind { None, Standard, Explicit };

/// Generators plus the space they act on; the input of closure().
struct GroupSpec {
    std::string name;
    std::size_t dimension = 0;
    Conductor conductor = 1;
    FormKind form_kind = FormKind::Standard;
    ExactMatrix explicit_form;  // meaningful only for FormKind::Explicit
    std::vector<ExactMatrix> generators;

    /// The symplectic form as a matrix, or nullopt for a plain linear action.
    std::optional<ExactMatrix> form() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/**
 * A finite matrix group, fully enumerated.
 *
 * Elements are sorted canonically (identity first, then ExactMatrix order), so
 * the element list depends only on the group and not on the generating set.
 * Immutable once built.
 */
class FiniteMatrixGroup {
public:
    std::size_t dimension() const { return dimension_; }
    Conductor conductor() const { return conductor_; }
    const std::optional<ExactMatrix>& form() const { return form_; }
    bool is_symplectic() const { return form_.has_value(); }

    const std::vector<ExactMatrix>& generators() const { return generators_; }
    /// Element indices of the non-identity generators.
    const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

    const std::vector<ExactMatrix>& elements() const { return elements_; }
    const ExactMatrix& element(std::size_t i) const { return elements_.at(i); }
    std::size_t order() const { return elements_.size(); }

    std::optional<std::size_t> find(const ExactMatrix& g) const;
    /// Throws NotAMember.
    std::size_t index_of(const ExactMatrix& g) const;
    std::size_t product(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;

private:
    friend FiniteMatrixGroup enumerate_group(std::size_t, Conductor, std::optional<ExactMatrix>,
                                             std::vector<ExactMatrix>, std::size_t);

    std::size_t dimension_ = 0;
    Conductor conductor_ = 1;
    std::optional<ExactMatrix> form_;
    std::vector<ExactMatrix> generators_;
    std::vector<std::size_t> generator_indices_;
    std::vector<ExactMatrix> elements_;
    std::unordered_map<ExactMatrix, std::size_t, ExactMatrixHash> index_;
};

/// Enumerates <generators> preserving `omega`. Throws NotSymplectic, SingularGenerator,
/// OrderBoundExceeded, BadForm, DimensionMismatch.
FiniteMatrixGroup closure(std::size_t dimension, Conductor m, const ExactMatrix& omega,
                          std::vector<ExactMatrix> generators, std::size_t max_order = kDefaultMaxOrder);

/// Same, for a group with no invariant form (an action on W).
FiniteMatrixGroup linear_closure(std::size_t dimension, Conductor m, std::vector<ExactMatrix> generators,
                                 std::size_t max_order = kDefaultMaxOrder);

FiniteMatrixGroup closure(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

/// Subgroup as membership flags over the parent's element list. The parent must outlive it.
class Subgroup {
public:
    Subgroup(const FiniteMatrixGroup& parent, std::vector<bool> members);

    const FiniteMatrixGroup& parent() const { return *parent_; }
    bool contains(std::size_t i) const { return members_.at(i); }
    std::size_t order() const { return order_; }
    std::size_t index() const { return parent_->order() / order_; }
    const std::vector<bool>& flags() const { return members_; }
    std::vector<std::size_t> members() const;

private:
    const FiniteMatrixGroup* parent_;
    std::vector<bool> members_;
    std::size_t order_;
};

/// Smallest subgroup containing `seeds`; the empty seed set gives the trivial subgroup.
Subgroup generated_subgroup(const FiniteMatrixGroup& group, std::span<const std::size_t> seeds);

bool is_normal(const FiniteMatrixGroup& group, const Subgroup& h);

/// Least k >= 1 with g^k = I. Throws NotAMember.
std::size_t element_order(const FiniteMatrixGroup& group, const ExactMatrix& g);
std::size_t element_order(const FiniteMatrixGroup& group, std::size_t index);

/// Classes ordered by smallest member, members ascending; {identity} first.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteMatrixGroup& group);

}  // namespace symref
