#include "derivlab/matrices.hpp"

#include <algorithm>
#include <utility>

namespace derivlab {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
    if (!a.ring().same(b.ring())) {
        throw RingMismatchError("matrix operands belong to different rings");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix shapes do not conform");
    }
}

} // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    e_.reserve(rows_ * cols_);
    const Scalar z = ring_.zero();
    for (std::size_t i = 0; i < rows_ * cols_; ++i) e_.push_back(z);
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    if (e_.size() != rows_ * cols_) throw ShapeError("entry count does not match matrix shape");
    for (const Scalar& s : e_) {
        if (!s.ring().same(ring_)) throw RingMismatchError("matrix entry from a different ring");
    }
}

void Matrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return e_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
    check_index(i, j);
    if (!v.ring().same(ring_)) throw RingMismatchError("matrix entry from a different ring");
    e_[i * cols_ + j] = std::move(v);
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t.e_[j * rows_ + i] = e_[i * cols_ + j];
        }
    }
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
    require_same_ring(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return e_ == o.e_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        out.push_back(a.entries()[i] + b.entries()[i]);
    }
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        out.push_back(a.entries()[i] - b.entries()[i]);
    }
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a) {
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (const Scalar& s : a.entries()) out.push_back(-s);
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_ring(a, b);
    if (a.cols() != b.rows()) throw ShapeError("matrix product shapes do not conform");
    const Ring& ring = a.ring();
    Matrix out(ring, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc = ring.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Scalar& x = a.at(i, k);
                if (x.is_zero()) continue;
                acc = acc + x * b.at(k, j);
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Matrix(ring, rows, cols);
}

Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring.one());
    return m;
}

Matrix unit(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(ring, n, n);
    m.set(i, j, ring.one());
    return m;
}

Matrix mat_scale(const Scalar& c, const Matrix& a) {
    if (!c.ring().same(a.ring())) throw RingMismatchError("scale factor from a different ring");
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (const Scalar& s : a.entries()) out.push_back(c * s);
    return Matrix(a.ring(), a.rows(), a.cols(), std::move(out));
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    if (!a.is_square()) throw ShapeError("commutator requires square matrices");
    return a * b - b * a;
}

Matrix corner(const Matrix& a, std::size_t i, std::size_t j) {
    if (!a.is_square()) throw ShapeError("corner requires a square matrix");
    Matrix out(a.ring(), a.rows(), a.cols());
    out.set(i, j, a.at(i, j));
    return out;
}

bool is_symmetric(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("symmetry test requires a square matrix");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (!(a.at(i, j) == a.at(j, i))) return false;
        }
    }
    return true;
}

bool is_skew(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("skew test requires a square matrix");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a.at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (!(a.at(i, j) == -a.at(j, i))) return false;
        }
    }
    return true;
}

// --- linear solving ---

namespace {

SolutionSpace solve_field(const Matrix& A, const std::vector<Scalar>& b) {
    const Ring& ring = A.ring();
    const std::size_t m = A.rows(), n = A.cols();
    // augmented working copy
    std::vector<std::vector<Scalar>> w;
    w.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Scalar> row;
        row.reserve(n + 1);
        for (std::size_t j = 0; j < n; ++j) row.push_back(A.at(i, j));
        row.push_back(b[i]);
        w.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pr = r;
        while (pr < m && w[pr][c].is_zero()) ++pr;
        if (pr == m) continue;
        std::swap(w[pr], w[r]);
        const Scalar inv = *ring.inv(w[r][c]);
        for (std::size_t j = c; j <= n; ++j) w[r][j] = inv * w[r][j];
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w[i][c].is_zero()) continue;
            const Scalar f = w[i][c];
            for (std::size_t j = c; j <= n; ++j) w[i][j] = w[i][j] - f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    SolutionSpace out{ring, n, std::nullopt, {}};
    bool consistent = true;
    for (std::size_t i = r; i < m; ++i) {
        if (!w[i][n].is_zero()) {
            consistent = false;
            break;
        }
    }
    if (consistent) {
        std::vector<Scalar> x(n, ring.zero());
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w[i][n];
        out.particular = std::move(x);
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> h(n, ring.zero());
        h[f] = ring.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i) h[pivot_col[i]] = -w[i][f];
        out.homogeneous.push_back(std::move(h));
    }
    return out;
}

struct SnfWork {
    // s = l * a * r with l, r unimodular; u = l^-1, v = r^-1 so a = u * s * v.
    std::vector<std::vector<Int>> s, l, r, u, v;
    std::size_t m = 0, n = 0;
};

void snf_reduce(SnfWork& w) {
    const std::size_t m = w.m, n = w.n;
    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(w.s[i], w.s[j]);
        std::swap(w.l[i], w.l[j]);
        for (std::size_t c = 0; c < m; ++c) std::swap(w.u[c][i], w.u[c][j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t rr = 0; rr < m; ++rr) std::swap(w.s[rr][i], w.s[rr][j]);
        for (std::size_t rr = 0; rr < n; ++rr) std::swap(w.r[rr][i], w.r[rr][j]);
        std::swap(w.v[i], w.v[j]);
    };
    // s.row(i) += c * s.row(j); keep l, u in sync
    auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t t = 0; t < n; ++t) w.s[i][t] += c * w.s[j][t];
        for (std::size_t t = 0; t < m; ++t) w.l[i][t] += c * w.l[j][t];
        for (std::size_t t = 0; t < m; ++t) w.u[t][j] -= c * w.u[t][i];
    };
    // s.col(j) += c * s.col(i); keep r, v in sync
    auto col_add = [&](std::size_t j, std::size_t i, const Int& c) {
        for (std::size_t t = 0; t < m; ++t) w.s[t][j] += c * w.s[t][i];
        for (std::size_t t = 0; t < n; ++t) w.r[t][j] += c * w.r[t][i];
        for (std::size_t t = 0; t < n; ++t) w.v[i][t] -= c * w.v[j][t];
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t t = 0; t < n; ++t) w.s[i][t] = -w.s[i][t];
        for (std::size_t t = 0; t < m; ++t) w.l[i][t] = -w.l[i][t];
        for (std::size_t t = 0; t < m; ++t) w.u[t][i] = -w.u[t][i];
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // locate minimal nonzero |entry| in the trailing block
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (w.s[i][j] == 0) continue;
                    if (!found || abs(w.s[i][j]) < abs(w.s[pi][pj])) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            }
            if (!found) break; // trailing block is zero
            row_swap(t, pi);
            col_swap(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.s[i][t] == 0) continue;
                const Int q = w.s[i][t] / w.s[t][t];
                if (q != 0) row_add(i, t, -q);
                if (w.s[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.s[t][j] == 0) continue;
                const Int q = w.s[t][j] / w.s[t][t];
                if (q != 0) col_add(j, t, -q);
                if (w.s[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // enforce the divisibility chain
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (w.s[i][j] % w.s[t][t] != 0) {
                        row_add(t, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) break;
        }
        if (w.s[t][t] < 0) row_negate(t);
    }
}

SnfWork snf_work(const Matrix& a) {
    if (a.ring().kind() != RingKind::Integers) {
        throw Error("smith_normal_form requires an integer matrix");
    }
    SnfWork w;
    w.m = a.rows();
    w.n = a.cols();
    w.s.assign(w.m, std::vector<Int>(w.n, Int(0)));
    for (std::size_t i = 0; i < w.m; ++i) {
        for (std::size_t j = 0; j < w.n; ++j) w.s[i][j] = a.at(i, j).as_int();
    }
    w.l.assign(w.m, std::vector<Int>(w.m, Int(0)));
    w.u.assign(w.m, std::vector<Int>(w.m, Int(0)));
    for (std::size_t i = 0; i < w.m; ++i) w.l[i][i] = w.u[i][i] = 1;
    w.r.assign(w.n, std::vector<Int>(w.n, Int(0)));
    w.v.assign(w.n, std::vector<Int>(w.n, Int(0)));
    for (std::size_t i = 0; i < w.n; ++i) w.r[i][i] = w.v[i][i] = 1;
    snf_reduce(w);
    return w;
}

Matrix from_int_rows(const Ring& ring, const std::vector<std::vector<Int>>& rows) {
    std::vector<Scalar> e;
    e.reserve(rows.size() * rows[0].size());
    for (const auto& row : rows) {
        for (const Int& x : row) e.push_back(ring.from_int(x));
    }
    return Matrix(ring, rows.size(), rows[0].size(), std::move(e));
}

// Solves the integer system via s = l * a * r: a x = b  <=>  s z = l b, x = r z.
SolutionSpace solve_integers(const Matrix& A, const std::vector<Scalar>& b) {
    const Ring& ring = A.ring();
    const std::size_t m = A.rows(), n = A.cols();
    SnfWork w = snf_work(A);

    std::vector<Int> lb(m, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (w.l[i][j] != 0) lb[i] += w.l[i][j] * b[j].as_int();
        }
    }

    SolutionSpace out{ring, n, std::nullopt, {}};
    const std::size_t steps = std::min(m, n);
    std::vector<Int> z(n, Int(0));
    bool consistent = true;
    for (std::size_t i = 0; i < m; ++i) {
        const Int d = i < steps ? w.s[i][i] : Int(0);
        if (d == 0) {
            if (lb[i] != 0) {
                consistent = false;
                break;
            }
        } else if (i < n) {
            if (lb[i] % d != 0) {
                consistent = false;
                break;
            }
            z[i] = lb[i] / d;
        }
    }
    if (consistent) {
        std::vector<Scalar> x;
        x.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (w.r[i][j] != 0 && z[j] != 0) acc += w.r[i][j] * z[j];
            }
            x.push_back(ring.from_int(acc));
        }
        out.particular = std::move(x);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const bool free_coord = j >= steps || w.s[j][j] == 0;
        if (!free_coord) continue;
        std::vector<Scalar> h;
        h.reserve(n);
        for (std::size_t i = 0; i < n; ++i) h.push_back(ring.from_int(w.r[i][j]));
        out.homogeneous.push_back(std::move(h));
    }
    return out;
}

// Z/m: solve the lifted integer system [A | m*I] (x; t) = b and project x.
SolutionSpace solve_mod(const Matrix& A, const std::vector<Scalar>& b) {
    const Ring& ring = A.ring();
    const Int modulus = ring.spec().m;
    const Ring zring{RingSpec::integers()};
    const std::size_t m = A.rows(), n = A.cols();

    Matrix lifted(zring, m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) lifted.set(i, j, zring.from_int(A.at(i, j).as_int()));
        lifted.set(i, n + i, zring.from_int(modulus));
    }
    std::vector<Scalar> lb;
    lb.reserve(m);
    for (const Scalar& s : b) lb.push_back(zring.from_int(s.as_int()));

    const SolutionSpace zsol = solve_integers(lifted, lb);
    SolutionSpace out{ring, n, std::nullopt, {}};
    if (zsol.particular) {
        std::vector<Scalar> x;
        x.reserve(n);
        for (std::size_t i = 0; i < n; ++i) x.push_back(ring.from_int((*zsol.particular)[i].as_int()));
        out.particular = std::move(x);
    }
    for (const auto& h : zsol.homogeneous) {
        std::vector<Scalar> g;
        g.reserve(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            Scalar s = ring.from_int(h[i].as_int());
            nonzero = nonzero || !s.is_zero();
            g.push_back(std::move(s));
        }
        if (nonzero && std::find(out.homogeneous.begin(), out.homogeneous.end(), g) == out.homogeneous.end()) {
            out.homogeneous.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace

SolutionSpace solve_linear(const Matrix& A, const std::vector<Scalar>& b) {
    if (b.size() != A.rows()) throw ShapeError("right-hand side length does not match row count");
    for (const Scalar& s : b) {
        if (!s.ring().same(A.ring())) throw RingMismatchError("right-hand side from a different ring");
    }
    switch (A.ring().kind()) {
        case RingKind::PrimeField:
        case RingKind::ExtensionField:
        case RingKind::Rationals:
            return solve_field(A, b);
        case RingKind::Integers:
            return solve_integers(A, b);
        case RingKind::IntegersMod:
            return solve_mod(A, b);
    }
    throw Error("unreachable ring kind");
}

bool SolutionSpace::contains(const std::vector<Scalar>& v) const {
    if (!particular) return false;
    if (v.size() != unknowns) throw ShapeError("vector length does not match unknown count");
    std::vector<Scalar> delta;
    delta.reserve(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) delta.push_back(v[i] - (*particular)[i]);
    if (homogeneous.empty()) {
        return std::all_of(delta.begin(), delta.end(), [](const Scalar& s) { return s.is_zero(); });
    }
    Matrix gen(ring, unknowns, homogeneous.size());
    for (std::size_t j = 0; j < homogeneous.size(); ++j) {
        for (std::size_t i = 0; i < unknowns; ++i) gen.set(i, j, homogeneous[j][i]);
    }
    return solve_linear(gen, delta).solvable();
}

SmithDecomposition smith_normal_form(const Matrix& a) {
    SnfWork w = snf_work(a);
    const Ring& ring = a.ring();
    return SmithDecomposition{from_int_rows(ring, w.u), from_int_rows(ring, w.s), from_int_rows(ring, w.v)};
}

Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng) {
    std::vector<Scalar> e;
    e.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(ring.random_scalar(rng));
    return Matrix(ring, rows, cols, std::move(e));
}

Matrix random_symmetric(const Ring& ring, std::size_t n, Rng& rng) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scalar s = ring.random_scalar(rng);
            m.set(i, j, s);
            if (i != j) m.set(j, i, std::move(s));
        }
    }
    return m;
}

Matrix random_skew(const Ring& ring, std::size_t n, Rng& rng) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Scalar s = ring.random_scalar(rng);
            m.set(j, i, -s);
            m.set(i, j, std::move(s));
        }
    }
    return m;
}

} // namespace derivlab
