#include "symref/linalg.hpp"

#include "symref/errors.hpp"

#include <ostream>

namespace symref {

namespace {

CyclotomicNumber to_conductor(const CyclotomicNumber& value, Conductor m) {
    if (value.conductor() == m) return value;
    return promote(value, m);
}

std::string shape(const ExactMatrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("shape " + shape(a) + " vs " + shape(b));
    if (a.conductor() != b.conductor()) throw ConductorMismatch(a.conductor(), b.conductor());
}

// Eliminates the pivot components of `v` against reduced echelon rows.
void reduce_against(Vector& v, const std::vector<Vector>& rows, const std::vector<std::size_t>& pivots) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const CyclotomicNumber f = v[pivots[r]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (!rows[r][c].is_zero()) v[c] -= f * rows[r][c];
        }
    }
}

std::vector<std::size_t> leading_columns(const std::vector<Vector>& rows) {
    std::vector<std::size_t> pivots;
    pivots.reserve(rows.size());
    for (const auto& row : rows) {
        std::size_t c = 0;
        while (row[c].is_zero()) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------- ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Conductor m)
    : rows_(rows), cols_(cols), conductor_(m), degree_(euler_phi(m)), data_(rows * cols * degree_) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, Conductor m) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix out(rows.size(), cols, m);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, to_conductor(rows[r][c], m));
    }
    return out;
}

ExactMatrix ExactMatrix::identity(std::size_t n, Conductor m) {
    ExactMatrix out(n, n, m);
    for (std::size_t i = 0; i < n; ++i) out.data_[(i * n + i) * out.degree_] = 1;
    return out;
}

ExactMatrix ExactMatrix::diagonal(const Vector& diag, Conductor m) {
    ExactMatrix out(diag.size(), diag.size(), m);
    for (std::size_t i = 0; i < diag.size(); ++i) out.set(i, i, to_conductor(diag[i], m));
    return out;
}

CyclotomicNumber ExactMatrix::at(std::size_t r, std::size_t c) const {
    auto span = coeffs(r, c);
    return CyclotomicNumber(conductor_, std::vector<BigRational>(span.begin(), span.end()));
}

void ExactMatrix::set(std::size_t r, std::size_t c, const CyclotomicNumber& value) {
    if (value.conductor() != conductor_) throw ConductorMismatch(value.conductor(), conductor_);
    std::copy(value.coeffs().begin(), value.coeffs().end(), data_.begin() + static_cast<std::ptrdiff_t>((r * cols_ + c) * degree_));
}

Vector ExactMatrix::row(std::size_t r) const {
    Vector out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            auto span = coeffs(r, c);
            for (std::size_t k = 0; k < degree_; ++k) {
                const bool want_one = r == c && k == 0;
                if (want_one ? !span[k].is_one() : !span[k].is_zero()) return false;
            }
        }
    }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_, conductor_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            auto src = coeffs(r, c);
            std::copy(src.begin(), src.end(), out.data_.begin() + static_cast<std::ptrdiff_t>((c * rows_ + r) * degree_));
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
    if (a.conductor_ != b.conductor_) throw ConductorMismatch(a.conductor_, b.conductor_);
    ExactMatrix out(a.rows_, b.cols_, a.conductor_);
    const std::size_t n = b.cols_;
    if (a.degree_ == 1) {
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigRational& x = a.data_[i * a.cols_ + k];
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const BigRational& y = b.data_[k * n + j];
                    if (!y.is_zero()) out.data_[i * n + j] += x * y;
                }
            }
        }
        return out;
    }
    const auto& field = CyclotomicField::get(a.conductor_);
    const std::size_t deg = a.degree_;
    std::vector<BigRational> scratch;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scratch.assign(2 * deg - 1, BigRational{});
            for (std::size_t k = 0; k < a.cols_; ++k) multiply_accumulate(field, a.coeffs(i, k), b.coeffs(k, j), scratch);
            field.reduce(scratch);
            std::copy(scratch.begin(), scratch.end(), out.data_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * deg));
        }
    }
    return out;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out(a.rows_, CyclotomicNumber(0, a.conductor_));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (v[k].is_zero()) continue;
            out[i] += a.at(i, k) * to_conductor(v[k], a.conductor_);
        }
    return out;
}

std::strong_ordering operator<=>(const ExactMatrix& a, const ExactMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
    return a.data_ <=> b.data_;
}

std::size_t ExactMatrix::hash() const {
    std::size_t h = rows_ * 31 + cols_;
    for (const auto& x : data_) h = (h * 1000003u) ^ x.hash();
    return h;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m.at(r, c);
        os << "]\n";
    }
    return os;
}

ExactMatrix promote(const ExactMatrix& a, Conductor target) {
    if (a.conductor() == target) return a;
    if (target % a.conductor() != 0) throw NotASubfield(a.conductor(), target);
    ExactMatrix out(a.rows(), a.cols(), target);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, promote(a.at(r, c), target));
    return out;
}

// ---------------------------------------------------------------- elimination

Echelon row_reduce(std::vector<Vector> rows, std::size_t cols, Conductor m) {
    for (auto& row : rows) {
        if (row.size() != cols) throw DimensionMismatch("row length " + std::to_string(row.size()) + " != " + std::to_string(cols));
        for (auto& x : row) x = to_conductor(x, m);
    }
    Echelon out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead]);
        Vector& p = rows[lead];
        if (!p[col].is_one()) {
            const CyclotomicNumber scale = inverse(p[col]);
            for (std::size_t c = col; c < cols; ++c)
                if (!p[c].is_zero()) p[c] = p[c] * scale;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col].is_zero()) continue;
            const CyclotomicNumber f = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!p[c].is_zero()) rows[r][c] -= f * p[c];
        }
        out.pivots.push_back(col);
        ++lead;
    }
    rows.resize(lead);
    out.rows = std::move(rows);
    return out;
}

namespace {
std::vector<Vector> matrix_rows(const ExactMatrix& a) {
    std::vector<Vector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
    return rows;
}
}  // namespace

std::size_t rank(const ExactMatrix& a) { return row_reduce(matrix_rows(a), a.cols(), a.conductor()).rows.size(); }

ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of non-square " + shape(a));
    const std::size_t n = a.rows();
    std::vector<Vector> rows = matrix_rows(a);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) rows[r].push_back(CyclotomicNumber(r == c ? 1 : 0, a.conductor()));
    }
    Echelon e = row_reduce(std::move(rows), 2 * n, a.conductor());
    if (e.rows.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
    ExactMatrix out(n, n, a.conductor());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.set(r, c, e.rows[r][n + c]);
    return out;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, Conductor m, std::vector<Vector> vectors) {
    Subspace out;
    out.ambient_ = ambient;
    out.conductor_ = m;
    out.basis_ = row_reduce(std::move(vectors), ambient, m).rows;
    return out;
}

Subspace Subspace::full(std::size_t ambient, Conductor m) {
    std::vector<Vector> rows(ambient, Vector(ambient, CyclotomicNumber(0, m)));
    for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = CyclotomicNumber(1, m);
    Subspace out;
    out.ambient_ = ambient;
    out.conductor_ = m;
    out.basis_ = std::move(rows);
    return out;
}

Subspace Subspace::zero(std::size_t ambient, Conductor m) {
    Subspace out;
    out.ambient_ = ambient;
    out.conductor_ = m;
    return out;
}

ExactMatrix Subspace::basis_matrix() const {
    ExactMatrix out(ambient_, basis_.size(), conductor_);
    for (std::size_t j = 0; j < basis_.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) out.set(i, j, basis_[j][i]);
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length " + std::to_string(v.size()) + " in ambient " + std::to_string(ambient_));
    Vector w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(to_conductor(x, conductor_));
    reduce_against(w, basis_, leading_columns(basis_));
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient dimension");
    if (other.dim() > dim()) return false;
    const auto pivots = leading_columns(basis_);
    for (const auto& v : other.basis_) {
        Vector w = v;
        reduce_against(w, basis_, pivots);
        for (const auto& x : w)
            if (!x.is_zero()) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = b.basis_.size() <=> a.basis_.size(); c != 0) return c;
    if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
    return a.basis_ <=> b.basis_;
}

Subspace kernel(const ExactMatrix& a) {
    const std::size_t n = a.cols();
    const Conductor m = a.conductor();
    Echelon e = row_reduce(matrix_rows(a), n, m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, CyclotomicNumber(0, m));
        v[f] = CyclotomicNumber(1, m);
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
        vectors.push_back(std::move(v));
    }
    return Subspace::span(n, m, std::move(vectors));
}

Subspace fixed_space(const ExactMatrix& g) {
    if (!g.is_square()) throw DimensionMismatch("fixed space of non-square " + shape(g));
    return kernel(g - ExactMatrix::identity(g.rows(), g.conductor()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("intersecting subspaces of ambient " + std::to_string(a.ambient_dim()) + " and " +
                                std::to_string(b.ambient_dim()));
    if (a.conductor() != b.conductor()) throw ConductorMismatch(a.conductor(), b.conductor());
    // v lies in both iff every linear functional annihilating a or b kills v.
    const std::size_t n = a.ambient_dim();
    std::vector<Vector> functionals;
    for (const Subspace* s : {&a, &b}) {
        if (s->dim() == n) continue;
        if (s->dim() == 0) return Subspace::zero(n, a.conductor());
        const Subspace annihilator = kernel(ExactMatrix::from_rows(s->basis(), s->conductor()));
        for (const auto& u : annihilator.basis()) functionals.push_back(u);
    }
    if (functionals.empty()) return Subspace::full(n, a.conductor());
    return kernel(ExactMatrix::from_rows(functionals, a.conductor()));
}

Subspace image(const ExactMatrix& g, const Subspace& s) {
    if (g.cols() != s.ambient_dim()) throw DimensionMismatch("image: matrix does not act on the ambient space");
    std::vector<Vector> vectors;
    vectors.reserve(s.dim());
    for (const auto& v : s.basis()) vectors.push_back(g * v);
    return Subspace::span(g.rows(), g.conductor(), std::move(vectors));
}

// ---------------------------------------------------------------- forms

ExactMatrix standard_symplectic_form(std::size_t dim, Conductor m) {
    if (dim % 2 != 0) throw BadForm("symplectic dimension must be even, got " + std::to_string(dim));
    ExactMatrix out(dim, dim, m);
    for (std::size_t k = 0; k < dim; k += 2) {
        out.set(k, k + 1, CyclotomicNumber(1, m));
        out.set(k + 1, k, CyclotomicNumber(-1, m));
    }
    return out;
}

void validate_symplectic_form(const ExactMatrix& omega) {
    if (!omega.is_square()) throw BadForm("form is not square: " + shape(omega));
    if (omega.rows() % 2 != 0) throw BadForm("form has odd dimension " + std::to_string(omega.rows()));
    if (omega.transpose() != -omega) throw BadForm("form is not antisymmetric");
    if (rank(omega) != omega.rows()) throw BadForm("form is degenerate");
}

bool is_symplectic(const ExactMatrix& g, const ExactMatrix& omega) {
    validate_symplectic_form(omega);
    if (!g.is_square() || g.rows() != omega.rows())
        throw DimensionMismatch("matrix " + shape(g) + " against form " + shape(omega));
    return g.transpose() * omega * g == omega;
}

bool form_restriction_nondegenerate(const ExactMatrix& omega, const Subspace& s) {
    if (omega.rows() != s.ambient_dim() || !omega.is_square())
        throw DimensionMismatch("form " + shape(omega) + " on ambient " + std::to_string(s.ambient_dim()));
    if (s.dim() == 0) return true;
    const ExactMatrix basis = s.basis_matrix();
    return rank(basis.transpose() * omega * basis) == s.dim();
}

}  // namespace symref
