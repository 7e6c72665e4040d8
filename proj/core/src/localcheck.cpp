#include "derivlab/localcheck.hpp"

#include <atomic>
#include <set>
#include <utility>

#include "check_engine.hpp"
#include "derivlab/parallel.hpp"

namespace derivlab {

std::size_t carrier_dim(Carrier carrier, std::size_t n) {
    return carrier == Carrier::FullMatrixAlgebra ? n * n : n * (n + 1) / 2;
}

namespace detail {

std::vector<std::vector<std::size_t>> carrier_cells(Carrier carrier, std::size_t n) {
    std::vector<std::vector<std::size_t>> cells;
    if (carrier == Carrier::FullMatrixAlgebra) {
        cells.reserve(n * n);
        for (std::size_t p = 0; p < n * n; ++p) cells.push_back({p});
    } else {
        cells.reserve(carrier_dim(carrier, n));
        for (std::size_t i = 0; i < n; ++i) cells.push_back({i * n + i});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                cells.push_back({i * n + j, j * n + i});
            }
        }
    }
    return cells;
}

std::size_t exhaustive_point_count(const Ring& ring, std::size_t n, Carrier carrier) {
    if (!ring.is_finite()) {
        throw InfiniteRingError("exhaustive point enumeration over an infinite ring");
    }
    const Int card = ring.cardinality();
    Int total = 1;
    for (std::size_t i = 0; i < carrier_dim(carrier, n); ++i) {
        total *= card;
        if (total > Int(kExhaustivePointBudget)) {
            throw BudgetError("exhaustive point enumeration exceeds the 2^20 budget; use sampled mode");
        }
    }
    return total.convert_to<std::size_t>();
}

Matrix exhaustive_point(const Ring& ring, std::size_t n, Carrier carrier, std::size_t index) {
    const std::uint64_t card = ring.cardinality().convert_to<std::uint64_t>();
    const auto cells = carrier_cells(carrier, n);
    Matrix m(ring, n, n);
    std::uint64_t rest = index;
    for (const auto& cell : cells) {
        const Scalar s = ring.element_at(Int(rest % card));
        rest /= card;
        for (std::size_t c : cell) m.set(c / n, c % n, s);
    }
    return m;
}

namespace {

// Bounded pool of candidate witnesses, FIFO replacement.
template <typename T>
struct CandidatePool {
    static constexpr std::size_t kCap = 3;
    std::vector<T> items;
    std::size_t next = 0;

    void push(T item) {
        if (items.size() < kCap) {
            items.push_back(std::move(item));
        } else {
            items[next] = std::move(item);
            next = (next + 1) % kCap;
        }
    }
};

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
    std::size_t cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
}

} // namespace

SweepResult sweep_points(const AdditiveMap& f, std::size_t count,
                         const std::function<Matrix(std::size_t)>& point_at,
                         const SolveFn& solve, const GlobalWitnessFn& is_global,
                         const GlobalSolveFn& global_solve, unsigned workers) {
    const bool try_joint = count > 512 && global_solve != nullptr;
    std::atomic<std::size_t> first_fail{SIZE_MAX};
    std::atomic<std::size_t> solves{0}, reuses{0};

    parallel_chunks(count, workers, [&](std::size_t begin, std::size_t end) {
        CandidatePool<Matrix> pool;
        bool have_global = false, joint_tried = false;
        std::size_t local_solves = 0, local_reuses = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            if (idx > first_fail.load(std::memory_order_relaxed)) break;
            if (have_global) {
                // a witness matching f's whole action covers this point
                ++local_reuses;
                continue;
            }
            const Matrix x = point_at(idx);
            const Matrix y = f.apply(x);
            bool pass = false;
            for (const Matrix& cand : pool.items) {
                if (inner_apply(cand, x) == y) {
                    pass = true;
                    ++local_reuses;
                    break;
                }
            }
            if (!pass) {
                ++local_solves;
                if (auto w = solve(x, y)) {
                    have_global = is_global(*w);
                    pool.push(std::move(*w));
                    pass = true;
                }
            }
            if (!pass) atomic_min(first_fail, idx);
            if (pass && !have_global && try_joint && !joint_tried && local_solves >= 2) {
                joint_tried = true;
                if (auto g = global_solve()) {
                    if (is_global(*g)) {
                        pool.push(std::move(*g));
                        have_global = true;
                    }
                }
            }
        }
        solves.fetch_add(local_solves, std::memory_order_relaxed);
        reuses.fetch_add(local_reuses, std::memory_order_relaxed);
    });

    SweepResult out;
    const std::size_t ff = first_fail.load();
    if (ff != SIZE_MAX) out.first_fail = ff;
    out.solves = solves.load();
    out.reuses = reuses.load();
    return out;
}

bool fast_sweep_applicable(const AdditiveMap& f) {
    const std::uint64_t mod = f.ring().small_modulus();
    return mod != 0 && mod <= (1u << 16);
}

namespace {

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        const std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t0);
}

// Gaussian elimination mod a prime; aug is eqs x (vars + 1) row-major.
// Returns the free-variables-zero particular, or nullopt when
// inconsistent.
std::optional<std::vector<std::uint64_t>> gauss_mod_p(std::vector<std::uint64_t>& aug,
                                                      std::size_t eqs, std::size_t vars,
                                                      std::uint64_t p) {
    const std::size_t width = vars + 1;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < vars && row < eqs; ++col) {
        std::size_t pr = row;
        while (pr < eqs && aug[pr * width + col] % p == 0) ++pr;
        if (pr == eqs) continue;
        if (pr != row) {
            for (std::size_t j = 0; j < width; ++j) std::swap(aug[pr * width + j], aug[row * width + j]);
        }
        const std::uint64_t inv = inv_mod_u64(aug[row * width + col] % p, p);
        for (std::size_t j = col; j < width; ++j) {
            aug[row * width + j] = (aug[row * width + j] % p) * inv % p;
        }
        for (std::size_t i = 0; i < eqs; ++i) {
            if (i == row) continue;
            const std::uint64_t f = aug[i * width + col] % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < width; ++j) {
                aug[i * width + j] =
                    (aug[i * width + j] + (p - f) * aug[row * width + j]) % p;
            }
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    for (std::size_t i = row; i < eqs; ++i) {
        if (aug[i * width + vars] % p != 0) return std::nullopt;
    }
    std::vector<std::uint64_t> x(vars, 0);
    for (const auto& [pr, pc] : pivots) x[pc] = aug[pr * width + vars] % p;
    return x;
}

} // namespace

SweepResult sweep_exhaustive_fast(const AdditiveMap& f, std::size_t total,
                                  const SolveFn& solve, const GlobalWitnessFn& is_global,
                                  const GlobalSolveFn& global_solve, unsigned workers) {
    const bool try_joint = total > 512 && global_solve != nullptr;
    const Ring& ring = f.ring();
    const std::uint64_t mod = ring.small_modulus();
    const std::size_t n = f.n();
    const std::size_t dim = f.points_dim();
    const auto cells = carrier_cells(f.carrier(), n);
    const bool prime_field = ring.kind() == RingKind::PrimeField;
    const bool jordan = f.carrier() == Carrier::JordanSymmetric;

    // Machine-word witness search over prime fields; the commutator check
    // below re-verifies anything it returns, and the exact solver remains
    // the fallback and the reject re-verification path.
    auto fast_solve = [&](const std::vector<std::uint64_t>& x,
                          const std::vector<std::uint64_t>& y)
        -> std::optional<std::vector<std::uint64_t>> {
        if (!prime_field) return std::nullopt;
        if (!jordan) {
            const std::size_t vars = n * n;
            std::vector<std::uint64_t> aug(vars * (vars + 1), 0);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    const std::size_t eq = r * n + c;
                    for (std::size_t v = 0; v < n; ++v) {
                        aug[eq * (vars + 1) + r * n + v] += x[v * n + c];
                    }
                    for (std::size_t u = 0; u < n; ++u) {
                        aug[eq * (vars + 1) + u * n + c] += mod - x[r * n + u] % mod;
                    }
                    aug[eq * (vars + 1) + vars] = y[r * n + c];
                }
            }
            return gauss_mod_p(aug, vars, vars, mod);
        }
        const std::size_t vars = n * (n - 1) / 2;
        if (vars == 0) {
            bool zero = true;
            for (std::uint64_t v : y) zero = zero && v % mod == 0;
            if (!zero) return std::nullopt;
            return std::vector<std::uint64_t>(n * n, 0);
        }
        std::vector<std::uint64_t> aug(n * n * (vars + 1), 0);
        std::size_t var = 0;
        std::vector<std::pair<std::size_t, std::size_t>> unknowns;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) unknowns.emplace_back(i, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t cc = 0; cc < n; ++cc) {
                const std::size_t eq = r * n + cc;
                for (var = 0; var < vars; ++var) {
                    const auto [i, j] = unknowns[var];
                    std::uint64_t coef = 0;
                    if (r == i) coef += x[j * n + cc];
                    if (r == j) coef += mod - x[i * n + cc] % mod;
                    if (cc == j) coef += mod - x[r * n + i] % mod;
                    if (cc == i) coef += x[r * n + j];
                    aug[eq * (vars + 1) + var] = coef % mod;
                }
                aug[eq * (vars + 1) + vars] = y[r * n + cc];
            }
        }
        auto sol = gauss_mod_p(aug, n * n, vars, mod);
        if (!sol) return std::nullopt;
        std::vector<std::uint64_t> cand(n * n, 0);
        for (var = 0; var < vars; ++var) {
            const auto [i, j] = unknowns[var];
            cand[i * n + j] = (*sol)[var] % mod;
            cand[j * n + i] = (mod - (*sol)[var] % mod) % mod;
        }
        return cand;
    };

    // action over the ring itself here (no extension split for these rings)
    std::vector<std::uint64_t> act(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) act[i * dim + j] = f.action().at(i, j).residue_u64();
    }

    std::atomic<std::size_t> first_fail{SIZE_MAX};
    std::atomic<std::size_t> solves{0}, reuses{0};

    auto matrix_of = [&](const std::vector<std::uint64_t>& cand) {
        Matrix m(ring, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m.set(r, c, ring.from_int(Int(cand[r * n + c])));
        }
        return m;
    };

    parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end) {
        CandidatePool<std::vector<std::uint64_t>> pool;
        bool have_global = false, joint_tried = false;
        std::size_t local_solves = 0, local_reuses = 0;
        std::vector<std::uint64_t> digits(dim), yc(dim), x(n * n), y(n * n);
        for (std::size_t idx = begin; idx < end; ++idx) {
            if (idx > first_fail.load(std::memory_order_relaxed)) break;
            if (have_global) {
                ++local_reuses;
                continue;
            }
            std::size_t rest = idx;
            for (std::size_t p = 0; p < dim; ++p) {
                digits[p] = rest % mod;
                rest /= mod;
            }
            for (std::size_t r = 0; r < dim; ++r) {
                std::uint64_t acc = 0;
                const std::uint64_t* row = act.data() + r * dim;
                for (std::size_t c = 0; c < dim; ++c) acc += row[c] * digits[c];
                yc[r] = acc % mod;
            }
            for (std::size_t p = 0; p < dim; ++p) {
                for (std::size_t c : cells[p]) {
                    x[c] = digits[p];
                    y[c] = yc[p];
                }
            }
            auto verifies = [&](const std::vector<std::uint64_t>& cand) {
                for (std::size_t r = 0; r < n; ++r) {
                    for (std::size_t c = 0; c < n; ++c) {
                        std::uint64_t lhs = 0, rhs = 0;
                        for (std::size_t t = 0; t < n; ++t) {
                            lhs += cand[r * n + t] * x[t * n + c];
                            rhs += x[r * n + t] * cand[t * n + c];
                        }
                        if ((lhs % mod) != ((rhs + y[r * n + c]) % mod)) return false;
                    }
                }
                return true;
            };
            bool pass = false;
            for (const auto& cand : pool.items) {
                if (verifies(cand)) {
                    pass = true;
                    ++local_reuses;
                    break;
                }
            }
            if (!pass) {
                ++local_solves;
                if (auto fw = fast_solve(x, y); fw && verifies(*fw)) {
                    have_global = is_global(matrix_of(*fw));
                    pool.push(std::move(*fw));
                    pass = true;
                } else if (!prime_field) {
                    Matrix xm(ring, n, n), ym(ring, n, n);
                    for (std::size_t r = 0; r < n; ++r) {
                        for (std::size_t c = 0; c < n; ++c) {
                            xm.set(r, c, ring.from_int(Int(x[r * n + c])));
                            ym.set(r, c, ring.from_int(Int(y[r * n + c])));
                        }
                    }
                    if (auto w = solve(xm, ym)) {
                        std::vector<std::uint64_t> cand(n * n);
                        for (std::size_t r = 0; r < n; ++r) {
                            for (std::size_t c = 0; c < n; ++c) {
                                cand[r * n + c] = w->at(r, c).residue_u64();
                            }
                        }
                        have_global = is_global(*w);
                        pool.push(std::move(cand));
                        pass = true;
                    }
                }
            }
            if (!pass) atomic_min(first_fail, idx);
            if (pass && !have_global && try_joint && !joint_tried && local_solves >= 2) {
                joint_tried = true;
                if (auto g = global_solve()) {
                    if (is_global(*g)) {
                        std::vector<std::uint64_t> cand(n * n);
                        for (std::size_t r = 0; r < n; ++r) {
                            for (std::size_t c = 0; c < n; ++c) {
                                cand[r * n + c] = g->at(r, c).residue_u64();
                            }
                        }
                        pool.push(std::move(cand));
                        have_global = true;
                    }
                }
            }
        }
        solves.fetch_add(local_solves, std::memory_order_relaxed);
        reuses.fetch_add(local_reuses, std::memory_order_relaxed);
    });

    SweepResult out;
    const std::size_t ff = first_fail.load();
    if (ff != SIZE_MAX) out.first_fail = ff;
    out.solves = solves.load();
    out.reuses = reuses.load();
    return out;
}

} // namespace detail

// --- AdditiveMap ---

Ring AdditiveMap::base_ring_of(const Ring& ring) {
    if (ring.kind() == RingKind::ExtensionField) {
        return Ring(RingSpec::prime_field(ring.spec().p));
    }
    return ring;
}

AdditiveMap::AdditiveMap(Ring ring, std::size_t n, Carrier carrier, Matrix action)
    : ring_(std::move(ring)),
      base_(base_ring_of(ring_)),
      n_(n),
      carrier_(carrier),
      k_(ring_.kind() == RingKind::ExtensionField ? ring_.spec().k : 1),
      dim_(derivlab::carrier_dim(carrier, n)),
      action_(std::move(action)) {
    if (n_ == 0) throw ShapeError("map dimension must be positive");
    const std::size_t d = module_dim();
    if (action_.rows() != d || action_.cols() != d) {
        throw ShapeError("action matrix does not match the module dimension");
    }
    if (!action_.ring().same(base_)) {
        throw RingMismatchError("action matrix must live over the prime ring");
    }
}

Matrix AdditiveMap::module_basis_element(std::size_t index) const {
    if (index >= module_dim()) throw ShapeError("module basis index out of range");
    const std::size_t pos = index / k_;
    const unsigned t = static_cast<unsigned>(index % k_);
    Scalar coef = ring_.one();
    if (t > 0) {
        std::vector<Int> c(k_, Int(0));
        c[t] = 1;
        coef = Scalar(ring_, std::move(c));
    }
    Matrix m(ring_, n_, n_);
    const auto cells = detail::carrier_cells(carrier_, n_);
    for (std::size_t cell : cells[pos]) m.set(cell / n_, cell % n_, coef);
    return m;
}

std::vector<Matrix> AdditiveMap::module_basis() const {
    std::vector<Matrix> out;
    out.reserve(module_dim());
    for (std::size_t i = 0; i < module_dim(); ++i) out.push_back(module_basis_element(i));
    return out;
}

std::vector<Scalar> AdditiveMap::coords(const Matrix& x) const {
    if (!x.ring().same(ring_)) throw RingMismatchError("point from a different ring");
    if (x.rows() != n_ || x.cols() != n_) throw ShapeError("point has the wrong shape");
    if (carrier_ == Carrier::JordanSymmetric && !is_symmetric(x)) {
        throw ShapeError("point is not in the Jordan carrier (not symmetric)");
    }
    std::vector<Scalar> out;
    out.reserve(module_dim());
    const auto cells = detail::carrier_cells(carrier_, n_);
    for (const auto& cell : cells) {
        const Scalar& s = x.at(cell[0] / n_, cell[0] % n_);
        if (k_ == 1) {
            out.push_back(s);
        } else {
            for (unsigned t = 0; t < k_; ++t) out.push_back(base_.from_int(s.coeffs()[t]));
        }
    }
    return out;
}

Matrix AdditiveMap::matrix_from_coords(const std::vector<Scalar>& c) const {
    if (c.size() != module_dim()) throw ShapeError("coordinate vector has the wrong length");
    Matrix m(ring_, n_, n_);
    const auto cells = detail::carrier_cells(carrier_, n_);
    for (std::size_t pos = 0; pos < dim_; ++pos) {
        Scalar s = ring_.zero();
        if (k_ == 1) {
            s = c[pos];
        } else {
            std::vector<Int> coeffs(k_);
            for (unsigned t = 0; t < k_; ++t) coeffs[t] = c[pos * k_ + t].as_int();
            s = Scalar(ring_, std::move(coeffs));
        }
        for (std::size_t cell : cells[pos]) m.set(cell / n_, cell % n_, s);
    }
    return m;
}

Matrix AdditiveMap::apply(const Matrix& x) const {
    const std::vector<Scalar> c = coords(x);
    const std::size_t d = module_dim();
    std::vector<Scalar> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Scalar acc = base_.zero();
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar& a = action_.at(i, j);
            if (a.is_zero() || c[j].is_zero()) continue;
            acc = acc + a * c[j];
        }
        out.push_back(std::move(acc));
    }
    return matrix_from_coords(out);
}

std::vector<Matrix> AdditiveMap::basis_images() const {
    std::vector<Matrix> out;
    const std::size_t d = module_dim();
    out.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Scalar> col;
        col.reserve(d);
        for (std::size_t i = 0; i < d; ++i) col.push_back(action_.at(i, j));
        out.push_back(matrix_from_coords(col));
    }
    return out;
}

bool AdditiveMap::operator==(const AdditiveMap& o) const {
    return ring_.same(o.ring_) && n_ == o.n_ && carrier_ == o.carrier_ && action_ == o.action_;
}

AdditiveMap map_from_inner(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("implementer must be square");
    const Ring& ring = a.ring();
    const std::size_t n = a.rows();
    const Ring base = AdditiveMap::base_ring_of(ring);
    const std::size_t k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(Carrier::FullMatrixAlgebra, n) * k;
    AdditiveMap probe(ring, n, Carrier::FullMatrixAlgebra, identity(base, d));
    Matrix action(base, d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<Scalar> col = probe.coords(inner_apply(a, probe.module_basis_element(j)));
        for (std::size_t i = 0; i < d; ++i) action.set(i, j, col[i]);
    }
    return AdditiveMap(ring, n, Carrier::FullMatrixAlgebra, std::move(action));
}

AdditiveMap map_from_basis_images(const Ring& ring, std::size_t n, Carrier carrier,
                                  const std::vector<Matrix>& images) {
    const Ring base = AdditiveMap::base_ring_of(ring);
    const std::size_t k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(carrier, n) * k;
    if (images.size() != d) {
        throw ShapeError("expected one image per module basis element");
    }
    AdditiveMap probe(ring, n, carrier, identity(base, d));
    Matrix action(base, d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<Scalar> col = probe.coords(images[j]);
        for (std::size_t i = 0; i < d; ++i) action.set(i, j, col[i]);
    }
    return AdditiveMap(ring, n, carrier, std::move(action));
}

AdditiveMap gen_basis_patched(const Ring& ring, std::size_t n,
                              const std::vector<Matrix>& implementers) {
    const std::size_t k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(Carrier::FullMatrixAlgebra, n) * k;
    if (implementers.size() != d) {
        throw ShapeError("expected one implementer per module basis element");
    }
    const Ring base = AdditiveMap::base_ring_of(ring);
    AdditiveMap probe(ring, n, Carrier::FullMatrixAlgebra, identity(base, d));
    std::vector<Matrix> images;
    images.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        images.push_back(inner_apply(implementers[j], probe.module_basis_element(j)));
    }
    return map_from_basis_images(ring, n, Carrier::FullMatrixAlgebra, images);
}

bool is_derivation(const AdditiveMap& f) {
    if (f.carrier() != Carrier::FullMatrixAlgebra) {
        throw Error("is_derivation applies to the full matrix algebra; use jordan_is_derivation");
    }
    const std::vector<Matrix> basis = f.module_basis();
    const std::vector<Matrix> images = f.basis_images();
    for (std::size_t s = 0; s < basis.size(); ++s) {
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const Matrix prod = basis[s] * basis[t];
            const Matrix lhs = f.apply(prod);
            const Matrix rhs = images[s] * basis[t] + basis[s] * images[t];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

// --- point sets ---

PointSet PointSet::exhaustive() {
    PointSet p;
    p.mode = Mode::Exhaustive;
    return p;
}

PointSet PointSet::sampled(std::size_t count, std::uint64_t seed) {
    PointSet p;
    p.mode = Mode::Sampled;
    p.count = count;
    p.seed = seed;
    return p;
}

PointSet PointSet::explicit_points(std::vector<Matrix> pts) {
    PointSet p;
    p.mode = Mode::Explicit;
    p.points = std::move(pts);
    return p;
}

namespace {

std::vector<Scalar> scalar_choices(const Ring& ring, Rng& rng, std::size_t limit) {
    if (ring.is_finite() && ring.cardinality() <= Int(limit)) {
        return enumerate_scalars(ring);
    }
    std::vector<Scalar> out;
    out.reserve(limit);
    for (std::size_t i = 0; i < limit; ++i) out.push_back(ring.random_scalar(rng));
    return out;
}

std::string point_key(const Matrix& m) {
    std::string key;
    for (const Scalar& s : m.entries()) {
        key += to_string(s);
        key += ';';
    }
    return key;
}

} // namespace

std::vector<Matrix> sampled_points(const Ring& ring, std::size_t n, Carrier carrier,
                                   std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Matrix> out;
    std::set<std::string> seen;
    auto add = [&](const Matrix& m) {
        if (seen.insert(point_key(m)).second) out.push_back(m);
    };

    const std::vector<Scalar> singles = scalar_choices(ring, rng, 16);
    const std::vector<Scalar> pairs = scalar_choices(ring, rng, 6);
    const std::vector<Scalar> triples = scalar_choices(ring, rng, 4);
    const std::vector<Scalar> quads = scalar_choices(ring, rng, 3);

    if (carrier == Carrier::FullMatrixAlgebra) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                add(unit(ring, n, i, j));
                for (const Scalar& l : singles) add(mat_scale(l, unit(ring, n, i, j)));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const Matrix eii = unit(ring, n, i, i);
                const Matrix eij = unit(ring, n, i, j);
                const Matrix eji = unit(ring, n, j, i);
                const Matrix ejj = unit(ring, n, j, j);
                for (const Scalar& l : pairs) {
                    for (const Scalar& m : pairs) {
                        add(mat_scale(l, eii) + mat_scale(m, eij));
                        add(mat_scale(l, eii) + mat_scale(m, eji));
                        add(mat_scale(l, eij) + mat_scale(m, eji));
                    }
                }
                for (const Scalar& l : triples) {
                    for (const Scalar& m : triples) {
                        for (const Scalar& v : triples) {
                            add(mat_scale(l, eii) + mat_scale(m, eij) + mat_scale(v, eji));
                        }
                    }
                }
                for (const Scalar& l : quads) {
                    for (const Scalar& m : quads) {
                        for (const Scalar& v : quads) {
                            for (const Scalar& r : quads) {
                                add(mat_scale(l, eii) + mat_scale(m, eij) + mat_scale(v, eji) +
                                    mat_scale(r, ejj));
                            }
                        }
                    }
                }
            }
        }
        // unit pairs with at least three distinct indices
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t l = 0; l < n; ++l) {
                        std::set<std::size_t> distinct{i, j, k, l};
                        if (distinct.size() < 3) continue;
                        add(unit(ring, n, i, j) + unit(ring, n, k, l));
                    }
                }
            }
        }
        if (n >= 2) {
            Matrix superdiag(ring, n, n);
            for (std::size_t t = 0; t + 1 < n; ++t) superdiag.set(t, t + 1, ring.one());
            add(superdiag);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) add(superdiag + unit(ring, n, i, j));
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    Matrix part(ring, n, n);
                    for (std::size_t t = i; t < j; ++t) part.set(t, t + 1, ring.one());
                    add(part + unit(ring, n, j, i));
                }
            }
        }
        add(identity(ring, n));
        while (out.size() < count) add(random_matrix(ring, n, n, rng));
    } else {
        auto ebar = [&](std::size_t i, std::size_t j) {
            return unit(ring, n, i, j) + unit(ring, n, j, i);
        };
        for (std::size_t i = 0; i < n; ++i) {
            add(unit(ring, n, i, i));
            for (const Scalar& l : singles) add(mat_scale(l, unit(ring, n, i, i)));
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                add(ebar(i, j));
                for (const Scalar& l : singles) add(mat_scale(l, ebar(i, j)));
                for (const Scalar& l : pairs) {
                    for (const Scalar& m : pairs) {
                        add(mat_scale(l, unit(ring, n, i, i)) + mat_scale(m, ebar(i, j)));
                        add(mat_scale(l, unit(ring, n, j, j)) + mat_scale(m, ebar(i, j)));
                        add(mat_scale(l, unit(ring, n, i, i)) + mat_scale(m, unit(ring, n, j, j)));
                    }
                }
            }
        }
        // pairs of distinct symmetrized units
        const auto cells = detail::carrier_cells(carrier, n);
        for (std::size_t a = n; a < cells.size(); ++a) {
            for (std::size_t b = a + 1; b < cells.size(); ++b) {
                const std::size_t ai = cells[a][0] / n, aj = cells[a][0] % n;
                const std::size_t bi = cells[b][0] / n, bj = cells[b][0] % n;
                add(ebar(ai, aj) + ebar(bi, bj));
            }
        }
        add(identity(ring, n));
        while (out.size() < count) add(random_symmetric(ring, n, rng));
    }
    return out;
}

namespace detail {

bool witness_action_equals(const Matrix& w, const AdditiveMap& f) {
    const std::size_t d = f.module_dim();
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<Scalar> col = f.coords(inner_apply(w, f.module_basis_element(j)));
        for (std::size_t i = 0; i < d; ++i) {
            if (!(col[i] == f.action().at(i, j))) return false;
        }
    }
    return true;
}

Verdict run_verdict(const AdditiveMap& f, const PointSet& pts, const SolveFn& solve,
                    const GlobalWitnessFn& is_global, const GlobalSolveFn& global_solve,
                    unsigned workers) {
    Verdict v;
    v.seed = pts.seed;
    SweepResult sweep;
    std::function<Matrix(std::size_t)> point_at;
    std::size_t total = 0;
    bool whole_algebra = false;

    switch (pts.mode) {
        case PointSet::Mode::Exhaustive: {
            total = exhaustive_point_count(f.ring(), f.n(), f.carrier());
            whole_algebra = true;
            point_at = [&f](std::size_t i) {
                return exhaustive_point(f.ring(), f.n(), f.carrier(), i);
            };
            if (fast_sweep_applicable(f)) {
                sweep = sweep_exhaustive_fast(f, total, solve, is_global, global_solve, workers);
            } else {
                sweep = sweep_points(f, total, point_at, solve, is_global, global_solve, workers);
            }
            break;
        }
        case PointSet::Mode::Sampled: {
            auto materialized = std::make_shared<std::vector<Matrix>>(
                sampled_points(f.ring(), f.n(), f.carrier(), pts.count, pts.seed));
            total = materialized->size();
            point_at = [materialized](std::size_t i) { return (*materialized)[i]; };
            sweep = sweep_points(f, total, point_at, solve, is_global, global_solve, workers);
            break;
        }
        case PointSet::Mode::Explicit: {
            // carrier membership of user-supplied points is checked up
            // front; the witness shortcut must not mask a bad point
            for (const Matrix& p : pts.points) f.coords(p);
            total = pts.points.size();
            point_at = [&pts](std::size_t i) { return pts.points[i]; };
            sweep = sweep_points(f, total, point_at, solve, is_global, global_solve, workers);
            break;
        }
    }

    v.full_solves = sweep.solves;
    v.witness_reuses = sweep.reuses;
    if (!sweep.first_fail) {
        v.outcome = whole_algebra ? Verdict::Outcome::CertifiedAccept
                                  : Verdict::Outcome::ProbabilisticAccept;
        v.checked_points = total;
        return v;
    }

    const Matrix witness = point_at(*sweep.first_fail);
    if (solve(witness, f.apply(witness))) {
        throw Error("checker inconsistency: rejected point re-verified solvable");
    }
    v.outcome = Verdict::Outcome::Reject;
    v.witness = witness;
    v.checked_points = *sweep.first_fail + 1;
    return v;
}

} // namespace detail

namespace {

std::optional<Matrix> sylvester_witness(const Matrix& x, const Matrix& y) {
    SolutionSpace s = sylvester_solve(x, y);
    if (!s.particular) return std::nullopt;
    return unvec(x.ring(), x.rows(), *s.particular);
}

} // namespace

Verdict check_local_inner(const AdditiveMap& f, const PointSet& pts, unsigned workers) {
    if (f.carrier() != Carrier::FullMatrixAlgebra) {
        throw Error("check_local_inner applies to the full matrix algebra; use the Jordan checker");
    }
    const detail::GlobalWitnessFn is_global = [&f](const Matrix& w) {
        return detail::witness_action_equals(w, f);
    };
    const detail::GlobalSolveFn global_solve = [&f]() -> std::optional<Matrix> {
        WitnessSystem sys;
        const std::vector<Matrix> basis = f.module_basis();
        const std::vector<Matrix> images = f.basis_images();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            sys.constraints.emplace_back(basis[j], images[j]);
        }
        const SolutionSpace sol = joint_solve(sys);
        if (!sol.particular) return std::nullopt;
        return unvec(f.ring(), f.n(), *sol.particular);
    };
    return detail::run_verdict(f, pts, sylvester_witness, is_global, global_solve, workers);
}

} // namespace derivlab
