#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "derivlab/scalars.hpp"

namespace derivlab {

/// Dense exact matrix over a ring. Row-major, 0-based indices.
class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);
    Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Scalar v);

    const std::vector<Scalar>& entries() const { return e_; }

    Matrix transpose() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    void check_index(std::size_t i, std::size_t j) const;

    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);

Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols);
Matrix identity(const Ring& ring, std::size_t n);

/// Matrix unit: 1 at (i, j), zero elsewhere. 0-based.
Matrix unit(const Ring& ring, std::size_t n, std::size_t i, std::size_t j);

inline Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
Matrix mat_scale(const Scalar& c, const Matrix& a);
inline Matrix transpose(const Matrix& a) { return a.transpose(); }

/// ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// e_ii * a * e_jj: the (i, j) entry of a placed at (i, j), zeros elsewhere.
Matrix corner(const Matrix& a, std::size_t i, std::size_t j);

bool is_symmetric(const Matrix& a);
/// a^T = -a with zero diagonal; the diagonal condition is imposed in every
/// characteristic.
bool is_skew(const Matrix& a);

/// Affine solution set of an exact linear system. Over fields the
/// homogeneous part is a basis; over Z a lattice basis; over Z/m a
/// generating set (the solution module need not be free).
struct SolutionSpace {
    Ring ring;
    std::size_t unknowns = 0;
    std::optional<std::vector<Scalar>> particular;
    std::vector<std::vector<Scalar>> homogeneous;

    bool solvable() const { return particular.has_value(); }

    /// Membership: is v = particular + (combination of homogeneous
    /// generators)? Over Z the combination must be integral.
    bool contains(const std::vector<Scalar>& v) const;
};

/// Solves A x = b over a field (exact Gaussian elimination), over Z
/// (Smith normal form) or over Z/m (the lifted system [A | m*I] over Z).
SolutionSpace solve_linear(const Matrix& A, const std::vector<Scalar>& b);

struct SmithDecomposition {
    Matrix u, s, v; // a = u * s * v, u and v unimodular, s diagonal with d_i | d_{i+1}
};

/// Smith normal form of an integer matrix (any shape).
SmithDecomposition smith_normal_form(const Matrix& a);

Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_symmetric(const Ring& ring, std::size_t n, Rng& rng);
Matrix random_skew(const Ring& ring, std::size_t n, Rng& rng);

} // namespace derivlab
