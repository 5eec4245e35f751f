#pragma once

#include "symref/cyclotomic.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace symref {

using Vector = std::vector<CyclotomicNumber>;

/**
 * Dense matrix over Q(zeta_m).
 *
 * Storage is a flat row-major array of rational coefficients, phi(m) per entry,
 * with the conductor held once for the whole matrix.
 */
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, Conductor m = 1);
    /// Rows of equal length, all entries of conductor `m` (or rational, promoted to `m`).
    static ExactMatrix from_rows(const std::vector<Vector>& rows, Conductor m);
    static ExactMatrix identity(std::size_t n, Conductor m = 1);
    static ExactMatrix diagonal(const Vector& diag, Conductor m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Conductor conductor() const { return conductor_; }
    bool is_square() const { return rows_ == cols_; }

    CyclotomicNumber at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const CyclotomicNumber& value);
    std::span<const BigRational> coeffs(std::size_t r, std::size_t c) const {
        return {data_.data() + (r * cols_ + c) * degree_, degree_};
    }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    bool is_zero() const;
    bool is_identity() const;

    ExactMatrix transpose() const;
    ExactMatrix operator-() const;
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend Vector operator*(const ExactMatrix& a, const Vector& v);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;
    /// Shape, then conductor, then row-major coefficients. This is the canonical element order.
    friend std::strong_ordering operator<=>(const ExactMatrix& a, const ExactMatrix& b);

    std::size_t hash() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Conductor conductor_ = 1;
    std::size_t degree_ = 1;
    std::vector<BigRational> data_;
};

struct ExactMatrixHash {
    std::size_t operator()(const ExactMatrix& m) const { return m.hash(); }
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

ExactMatrix promote(const ExactMatrix& a, Conductor target);

/// Reduced row echelon form with first-nonzero pivoting.
struct Echelon {
    std::vector<Vector> rows;           // nonzero rows only
    std::vector<std::size_t> pivots;    // pivot column per row
};
Echelon row_reduce(std::vector<Vector> rows, std::size_t cols, Conductor m);

std::size_t rank(const ExactMatrix& a);

/// Throws SingularMatrix.
ExactMatrix inverse(const ExactMatrix& a);

/**
 * Linear subspace of the column space C^n over Q(zeta_m).
 *
 * The spanning set is kept as the nonzero rows of a reduced row echelon
 * matrix (equivalently, columns in reduced column echelon form), which makes
 * the representation canonical: equal subspaces compare equal.
 */
class Subspace {
public:
    Subspace() = default;
    static Subspace span(std::size_t ambient, Conductor m, std::vector<Vector> vectors);
    static Subspace full(std::size_t ambient, Conductor m);
    static Subspace zero(std::size_t ambient, Conductor m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t codim() const { return ambient_ - basis_.size(); }
    Conductor conductor() const { return conductor_; }

    /// Canonical basis vectors (rows of the echelon matrix).
    const std::vector<Vector>& basis() const { return basis_; }
    /// Basis as an ambient x dim matrix of columns.
    ExactMatrix basis_matrix() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;
    /// Dimension descending (codimension ascending), then basis coefficients.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_ = 0;
    Conductor conductor_ = 1;
    std::vector<Vector> basis_;
};

/// {v : a v = 0}
Subspace kernel(const ExactMatrix& a);

/// Vectors fixed by g, i.e. kernel(g - I).
Subspace fixed_space(const ExactMatrix& g);

/// Throws DimensionMismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Image g(S) of a subspace.
Subspace image(const ExactMatrix& g, const Subspace& s);

/// Block-diagonal standard form: e_{2k-1}, e_{2k} pair to 1.
ExactMatrix standard_symplectic_form(std::size_t dim, Conductor m = 1);

/// Throws BadForm unless omega is square, even-sized, antisymmetric and nonsingular.
void validate_symplectic_form(const ExactMatrix& omega);

/// g^T omega g == omega. Throws BadForm for an invalid omega, DimensionMismatch on shape.
bool is_symplectic(const ExactMatrix& g, const ExactMatrix& omega);

/// Whether omega restricted to s (B^T omega B for a basis B) is nonsingular.
bool form_restriction_nondegenerate(const ExactMatrix& omega, const Subspace& s);

}  // namespace symref
