#include "derivlab/derivations.hpp"

namespace derivlab {

namespace {

void require_square_pair(const Matrix& a, const Matrix& x) {
    if (!a.ring().same(x.ring())) throw RingMismatchError("operands belong to different rings");
    if (!a.is_square() || a.rows() != x.rows() || a.cols() != x.cols()) {
        throw ShapeError("operands must be square matrices of equal size");
    }
}

} // namespace

Matrix inner_apply(const Matrix& a, const Matrix& x) {
    require_square_pair(a, x);
    return a * x - x * a;
}

Matrix canonicalize(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("canonicalize requires a square matrix");
    const Scalar& c = a.at(0, 0);
    if (c.is_zero()) return a;
    return a - mat_scale(c, identity(a.ring(), a.rows()));
}

bool inner_equal(const Matrix& a, const Matrix& b) {
    require_square_pair(a, b);
    const Matrix d = a - b;
    const Scalar& c = d.at(0, 0);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i == j) {
                if (!(d.at(i, j) == c)) return false;
            } else if (!d.at(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

InnerDerivation InnerDerivation::make(const Matrix& a) {
    return InnerDerivation{canonicalize(a), true};
}

std::vector<Scalar> vec(const Matrix& m) { return m.entries(); }

Matrix unvec(const Ring& ring, std::size_t n, const std::vector<Scalar>& v) {
    return Matrix(ring, n, n, v);
}

Matrix sylvester_operator(const Matrix& x) {
    if (!x.is_square()) throw ShapeError("sylvester operator requires a square matrix");
    const Ring& ring = x.ring();
    const std::size_t n = x.rows();
    // equation (r, c):  sum_t a[r][t] x[t][c] - x[r][t] a[t][c] = y[r][c]
    // coefficient of unknown a[u][v]:  x[v][c]*[u == r] - x[r][u]*[v == c]
    Matrix op(ring, n * n, n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t eq = r * n + c;
            for (std::size_t v = 0; v < n; ++v) {
                op.set(eq, r * n + v, x.at(v, c));
            }
            for (std::size_t u = 0; u < n; ++u) {
                const std::size_t var = u * n + c;
                op.set(eq, var, op.at(eq, var) - x.at(r, u));
            }
        }
    }
    return op;
}

SolutionSpace sylvester_solve(const Matrix& x, const Matrix& y) {
    require_square_pair(x, y);
    return solve_linear(sylvester_operator(x), vec(y));
}

SolutionSpace joint_solve(const WitnessSystem& sys) {
    if (sys.constraints.empty()) throw Error("joint_solve requires at least one constraint");
    const Matrix& first = sys.constraints.front().first;
    const Ring& ring = first.ring();
    const std::size_t n = first.rows();
    for (const auto& [point, value] : sys.constraints) {
        require_square_pair(point, value);
        if (!point.ring().same(ring) || point.rows() != n) {
            throw ShapeError("witness constraints must share ring and dimension");
        }
    }
    const std::size_t nn = n * n;
    Matrix stacked(ring, nn * sys.constraints.size(), nn);
    std::vector<Scalar> rhs;
    rhs.reserve(nn * sys.constraints.size());
    for (std::size_t k = 0; k < sys.constraints.size(); ++k) {
        const Matrix op = sylvester_operator(sys.constraints[k].first);
        for (std::size_t i = 0; i < nn; ++i) {
            for (std::size_t j = 0; j < nn; ++j) {
                stacked.set(k * nn + i, j, op.at(i, j));
            }
        }
        for (const Scalar& s : vec(sys.constraints[k].second)) rhs.push_back(s);
    }
    return solve_linear(stacked, rhs);
}

SolutionSpace centralizer(const Matrix& x) {
    if (!x.is_square()) throw ShapeError("centralizer requires a square matrix");
    return sylvester_solve(x, zeros(x.ring(), x.rows(), x.cols()));
}

} // namespace derivlab
