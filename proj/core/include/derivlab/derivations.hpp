#pragma once

#include <utility>
#include <vector>

#include "derivlab/matrices.hpp"

namespace derivlab {

/// ax - xa.
Matrix inner_apply(const Matrix& a, const Matrix& x);

/// Gauge fix: a - a[0][0] * I. Same inner derivation, zero (0,0) entry.
Matrix canonicalize(const Matrix& a);

/// True iff a and b implement the same inner derivation, i.e. a - b is a
/// scalar multiple of the identity.
bool inner_equal(const Matrix& a, const Matrix& b);

/// The map x -> ax - xa together with its gauge-fixed implementer.
struct InnerDerivation {
    Matrix implementer;
    bool canonical = false;

    static InnerDerivation make(const Matrix& a);
    Matrix operator()(const Matrix& x) const { return inner_apply(implementer, x); }
};

/// Simultaneous witness constraints: find one a with a*point - point*a =
/// value for every pair.
struct WitnessSystem {
    std::vector<std::pair<Matrix, Matrix>> constraints;
};

/// Row-major vectorization of a square matrix and its inverse.
std::vector<Scalar> vec(const Matrix& m);
Matrix unvec(const Ring& ring, std::size_t n, const std::vector<Scalar>& v);

/// The n^2 x n^2 matrix of a |-> ax - xa in row-major coordinates.
Matrix sylvester_operator(const Matrix& x);

/// Affine set {a : ax - xa = y}; unsolvable means no particular.
SolutionSpace sylvester_solve(const Matrix& x, const Matrix& y);

/// Affine set of simultaneous witnesses for every constraint.
SolutionSpace joint_solve(const WitnessSystem& sys);

/// {a : ax = xa}, returned with particular = 0.
SolutionSpace centralizer(const Matrix& x);

} // namespace derivlab
