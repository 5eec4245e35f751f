#include "symref/group.hpp"

#include "symref/errors.hpp"

#include <algorithm>
#include <deque>

namespace symref {

std::optional<ExactMatrix> GroupSpec::form() const {
    switch (form_kind) {
        case FormKind::None: return std::nullopt;
        case FormKind::Standard: return standard_symplectic_form(dimension, conductor);
        case FormKind::Explicit: return promote(explicit_form, conductor);
    }
    return std::nullopt;
}

std::optional<std::size_t> FiniteMatrixGroup::find(const ExactMatrix& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FiniteMatrixGroup::index_of(const ExactMatrix& g) const {
    auto i = find(g);
    if (!i) throw NotAMember();
    return *i;
}

std::size_t FiniteMatrixGroup::product(std::size_t i, std::size_t j) const {
    return index_of(elements_.at(i) * elements_.at(j));
}

std::size_t FiniteMatrixGroup::inverse(std::size_t i) const { return index_of(symref::inverse(elements_.at(i))); }

namespace {

class Enumeration {
public:
    Enumeration(std::size_t n, Conductor m, std::size_t max_order) : max_order_(max_order) {
        add(ExactMatrix::identity(n, m));
    }

    bool contains(const ExactMatrix& g) const { return index_.contains(g); }
    std::size_t size() const { return elements_.size(); }
    const ExactMatrix& at(std::size_t i) const { return elements_[i]; }

    void add(ExactMatrix g) {
        if (elements_.size() >= max_order_) throw OrderBoundExceeded(max_order_);
        index_.emplace(g, elements_.size());
        elements_.push_back(std::move(g));
    }

    void require_room(std::size_t extra) const {
        if (elements_.size() + extra > max_order_) throw OrderBoundExceeded(max_order_);
    }

    std::vector<ExactMatrix> take() { return std::move(elements_); }

private:
    std::size_t max_order_;
    std::vector<ExactMatrix> elements_;
    std::unordered_map<ExactMatrix, std::size_t, ExactMatrixHash> index_;
};

// Dimino's algorithm: grow <s_1, ..., s_i> one generator at a time, adding
// whole right cosets of the previous subgroup.
std::vector<ExactMatrix> dimino(std::size_t n, Conductor m, const std::vector<ExactMatrix>& generators,
                                std::size_t max_order) {
    Enumeration group(n, m, max_order);
    std::vector<const ExactMatrix*> used;
    for (const ExactMatrix& s : generators) {
        if (group.contains(s)) continue;
        used.push_back(&s);
        if (group.size() == 1) {
            for (ExactMatrix x = s; !x.is_identity(); x = x * s) group.add(x);
            continue;
        }
        const std::size_t prev = group.size();
        // The new group has order a proper multiple of prev.
        group.require_room(prev);
        for (std::size_t j = 0; j < prev; ++j) group.add(group.at(j) * s);
        for (std::size_t rep = prev; rep < group.size(); rep += prev) {
            const ExactMatrix representative = group.at(rep);
            for (const ExactMatrix* t : used) {
                ExactMatrix y = representative * *t;
                if (group.contains(y)) continue;
                group.require_room(prev);
                for (std::size_t j = 0; j < prev; ++j) group.add(group.at(j) * y);
            }
        }
    }
    return group.take();
}

}  // namespace

FiniteMatrixGroup enumerate_group(std::size_t dimension, Conductor m, std::optional<ExactMatrix> form,
                                  std::vector<ExactMatrix> generators, std::size_t max_order) {
    if (dimension == 0) throw DimensionMismatch("group dimension must be positive");
    if (max_order == 0) throw OrderBoundExceeded(max_order);
    if (form) {
        if (form->rows() != dimension) throw DimensionMismatch("form does not match the group dimension");
        *form = promote(*form, m);
        validate_symplectic_form(*form);
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        ExactMatrix& g = generators[i];
        if (g.rows() != dimension || g.cols() != dimension)
            throw DimensionMismatch("generator " + std::to_string(i) + " is " + std::to_string(g.rows()) + "x" +
                                    std::to_string(g.cols()) + ", expected " + std::to_string(dimension) + "x" +
                                    std::to_string(dimension));
        if (g.conductor() != m) {
            if (m % g.conductor() != 0) throw ConductorMismatch(g.conductor(), m);
            g = promote(g, m);
        }
        if (rank(g) != dimension) throw SingularGenerator(i);
        if (form && !is_symplectic(g, *form)) throw NotSymplectic(i);
    }

    FiniteMatrixGroup out;
    out.dimension_ = dimension;
    out.conductor_ = m;
    out.form_ = std::move(form);
    out.elements_ = dimino(dimension, m, generators, max_order);
    std::sort(out.elements_.begin() + 1, out.elements_.end());
    out.index_.reserve(out.elements_.size());
    for (std::size_t i = 0; i < out.elements_.size(); ++i) out.index_.emplace(out.elements_[i], i);
    for (const auto& g : generators) {
        std::size_t i = out.index_.at(g);
        if (i != 0 && std::find(out.generator_indices_.begin(), out.generator_indices_.end(), i) == out.generator_indices_.end())
            out.generator_indices_.push_back(i);
    }
    out.generators_ = std::move(generators);
    return out;
}

FiniteMatrixGroup closure(std::size_t dimension, Conductor m, const ExactMatrix& omega,
                          std::vector<ExactMatrix> generators, std::size_t max_order) {
    return enumerate_group(dimension, m, omega, std::move(generators), max_order);
}

FiniteMatrixGroup linear_closure(std::size_t dimension, Conductor m, std::vector<ExactMatrix> generators,
                                 std::size_t max_order) {
    return enumerate_group(dimension, m, std::nullopt, std::move(generators), max_order);
}

FiniteMatrixGroup closure(const GroupSpec& spec, std::size_t max_order) {
    return enumerate_group(spec.dimension, spec.conductor, spec.form(), spec.generators, max_order);
}

// ---------------------------------------------------------------- subgroups

Subgroup::Subgroup(const FiniteMatrixGroup& parent, std::vector<bool> members)
    : parent_(&parent), members_(std::move(members)), order_(0) {
    if (members_.size() != parent.order()) throw DimensionMismatch("subgroup flags do not match the parent order");
    order_ = static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<std::size_t> Subgroup::members() const {
    std::vector<std::size_t> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i]) out.push_back(i);
    return out;
}

Subgroup generated_subgroup(const FiniteMatrixGroup& group, std::span<const std::size_t> seeds) {
    std::vector<bool> flags(group.order(), false);
    flags[0] = true;
    std::vector<std::size_t> list{0};
    std::vector<std::size_t> done{0};  // generators already applied to list[k]
    std::vector<std::size_t> used;
    for (std::size_t s : seeds) {
        if (s >= group.order()) throw NotAMember();
        if (flags[s]) continue;
        used.push_back(s);
        for (std::size_t pos = 0; pos < list.size(); ++pos) {
            const ExactMatrix x = group.element(list[pos]);
            for (; done[pos] < used.size(); ++done[pos]) {
                std::size_t y = group.index_of(x * group.element(used[done[pos]]));
                if (flags[y]) continue;
                flags[y] = true;
                list.push_back(y);
                done.push_back(0);
            }
        }
    }
    return Subgroup(group, std::move(flags));
}

bool is_normal(const FiniteMatrixGroup& group, const Subgroup& h) {
    if (&h.parent() != &group) throw DimensionMismatch("subgroup belongs to a different group");
    const auto members = h.members();
    for (std::size_t s : group.generator_indices()) {
        const ExactMatrix& g = group.element(s);
        const ExactMatrix g_inv = symref::inverse(g);
        for (std::size_t x : members) {
            if (!h.contains(group.index_of(g * group.element(x) * g_inv))) return false;
        }
    }
    return true;
}

std::size_t element_order(const FiniteMatrixGroup& group, std::size_t index) {
    const ExactMatrix& g = group.element(index);
    std::size_t k = 1;
    for (ExactMatrix x = g; !x.is_identity(); x = x * g) ++k;
    return k;
}

std::size_t element_order(const FiniteMatrixGroup& group, const ExactMatrix& g) {
    return element_order(group, group.index_of(g));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteMatrixGroup& group) {
    const std::size_t n = group.order();
    std::vector<ExactMatrix> gens, gens_inv;
    for (std::size_t s : group.generator_indices()) {
        gens.push_back(group.element(s));
        gens_inv.push_back(symref::inverse(group.element(s)));
    }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls{i};
        seen[i] = true;
        for (std::size_t pos = 0; pos < cls.size(); ++pos) {
            const ExactMatrix x = group.element(cls[pos]);
            for (std::size_t k = 0; k < gens.size(); ++k) {
                std::size_t y = group.index_of(gens[k] * x * gens_inv[k]);
                if (seen[y]) continue;
                seen[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace symref
