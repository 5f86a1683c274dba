#include "frieze/variety.hpp"

#include <algorithm>
#include <map>

#include "frieze/cluster.hpp"
#include "frieze/linalg.hpp"
#include "frieze/rational_function.hpp"

namespace frieze {

MonomialBasis monomial_basis(int nvars, int degree) {
    if (nvars < 1) throw InvalidInput("monomial basis needs at least one variable");
    if (degree < 0) throw InvalidInput("negative degree bound");
    MonomialBasis basis{nvars, degree, {}};
    Exponents cur(nvars, 0);
    // Within a degree block, fill variables left to right taking the largest
    // remaining exponent first: that is descending lex.
    auto emit = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[var] = remaining;
            basis.monomials.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    for (int d = 0; d <= degree; ++d) emit(emit, 0, d);
    return basis;
}

namespace {

Rational eval_monomial(const Exponents& e, const Point& p) {
    Rational v(1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) v *= rational_pow(p[i], e[i]);
    return v;
}

std::vector<Rational> evaluation_row(const Point& p, const MonomialBasis& basis) {
    std::vector<Rational> row;
    row.reserve(basis.monomials.size());
    for (const Exponents& e : basis.monomials) row.push_back(eval_monomial(e, p));
    return row;
}

// Pivot priority for elimination: graded-lex descending (largest monomial
// leads), which makes kernel rows monic in their leading monomial.
std::vector<int> grlex_descending_order(const MonomialBasis& basis) {
    std::vector<int> order(basis.monomials.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return grlex_less(basis.monomials[b], basis.monomials[a]);
    });
    return order;
}

LaurentPolynomial row_to_poly(const std::vector<Rational>& row, const MonomialBasis& basis) {
    LaurentPolynomial p(basis.nvars);
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0) p.add_term(basis.monomials[c], row[c]);
    return p;
}

std::vector<Rational> poly_to_row(const LaurentPolynomial& p, const MonomialBasis& basis,
                                  const std::map<Exponents, int, GrlexDescending>& index) {
    std::vector<Rational> row(basis.monomials.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw InvalidInput("polynomial does not fit in the monomial basis");
        row[it->second] = c;
    }
    return row;
}

std::map<Exponents, int, GrlexDescending> basis_index(const MonomialBasis& basis) {
    std::map<Exponents, int, GrlexDescending> index;
    for (std::size_t i = 0; i < basis.monomials.size(); ++i)
        index.emplace(basis.monomials[i], static_cast<int>(i));
    return index;
}

// Minimal generating subset of canonical kernel rows: walk rows from the
// smallest leading monomial up, dropping any row spanned by bounded-degree
// monomial multiples of the rows kept so far.
std::vector<LaurentPolynomial> prune_to_generators(const std::vector<LaurentPolynomial>& kernel,
                                                   const MonomialBasis& basis) {
    if (kernel.empty()) return {};
    auto index = basis_index(basis);
    std::vector<int> order = grlex_descending_order(basis);
    std::vector<LaurentPolynomial> sorted = kernel;
    std::sort(sorted.begin(), sorted.end(), [](const LaurentPolynomial& a,
                                               const LaurentPolynomial& b) {
        return grlex_less(a.leading_term().first, b.leading_term().first);
    });
    std::vector<LaurentPolynomial> kept;
    RowEchelon closure(static_cast<int>(basis.monomials.size()), order);
    for (const LaurentPolynomial& row : sorted) {
        std::vector<Rational> vec = poly_to_row(row, basis, index);
        RowEchelon probe = closure;  // membership: does the row add rank?
        if (!probe.add_row(vec)) continue;
        kept.push_back(row);
        // Insert all bounded-degree monomial multiples of the new generator.
        long gdeg = row.degree();
        MonomialBasis mults = monomial_basis(basis.nvars, basis.degree_bound -
                                                              static_cast<int>(gdeg));
        for (const Exponents& m : mults.monomials)
            closure.add_row(poly_to_row(row.shifted(m), basis, index));
    }
    return kept;
}

}  // namespace

EvaluationMatrix evaluation_matrix(const std::vector<Point>& points, const MonomialBasis& basis) {
    EvaluationMatrix m{basis, {}};
    for (const Point& p : points) {
        if (static_cast<int>(p.size()) != basis.nvars)
            throw InvalidInput("point dimension does not match the monomial basis");
        m.rows.push_back(evaluation_row(p, basis));
    }
    return m;
}

VanishingSpace nullspace(const EvaluationMatrix& m) {
    std::vector<int> order = grlex_descending_order(m.basis);
    RowEchelon ech(static_cast<int>(m.basis.monomials.size()), order);
    for (const auto& row : m.rows) ech.add_row(row);
    VanishingSpace space;
    space.degree_bound = m.basis.degree_bound;
    space.points_used = static_cast<long>(m.rows.size());
    space.stabilized = true;
    for (const auto& row : ech.kernel()) space.basis.push_back(row_to_poly(row, m.basis));
    space.generators = prune_to_generators(space.basis, m.basis);
    return space;
}

namespace {

// Lazily extended exact orbit shared by the class computations.
class OrbitCache {
public:
    OrbitCache(const Quiver& q, const Point& start, std::size_t bit_budget)
        : quiver_(q), bit_budget_(bit_budget), record_(iterate(q, start, 0, bit_budget)) {}

    // Point P_t; throws NonGenericSpecialization if the orbit dies first.
    const Point& point(long t) {
        extend(t);
        if (record_.failure && t >= record_.failure->step) {
            const auto& f = *record_.failure;
            throw NonGenericSpecialization(
                "orbit coordinate " + std::to_string(f.vertex) + " became zero at step " +
                    std::to_string(f.step) + ": start is not generic to this horizon",
                f.step, f.vertex);
        }
        if (period_) return record_.points[t % *period_];
        return record_.points[t];
    }

    std::optional<long> period() const { return period_; }

    // Extends far enough to decide periodicity up to `horizon`.
    void probe_period(long horizon) { extend(horizon); }

private:
    void extend(long t) {
        if (period_ || record_.failure) return;
        while (static_cast<long>(record_.points.size()) <= t) {
            long have = static_cast<long>(record_.points.size()) - 1;
            OrbitRecord next = iterate(quiver_, record_.points.back(), 1, bit_budget_);
            if (next.failure) {
                record_.failure = OrbitFailure{have + 1, next.failure->vertex};
                return;
            }
            record_.points.push_back(next.points[1]);
            if (record_.points.back() == record_.points.front()) {
                period_ = have + 1;
                return;
            }
        }
    }

    Quiver quiver_;
    std::size_t bit_budget_;
    OrbitRecord record_;
    std::optional<long> period_;
};

// Modular full-rank certificate: runs the orbit and the evaluation rows mod a
// large prime; rank = width there proves rank = width over Q, hence a zero
// kernel, without ever building the exact points.
bool certify_zero_kernel(const Quiver& q, const Point& start, const MonomialBasis& basis,
                         long offset, long stride, long& points_used) {
    const int n = q.n();
    const int width = static_cast<int>(basis.monomials.size());
    for (std::uint64_t p : certification_primes()) {
        std::vector<std::uint64_t> x(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!rational_mod(start[i], p, x[i]) || x[i] == 0) ok = false;
        }
        if (!ok) continue;
        ModRowEchelon ech(width, p);
        long fed = 0;
        long t = 0;
        auto step = [&]() -> bool {  // one Coxeter step mod p
            for (int i = 1; i <= n; ++i) {
                std::uint64_t prod = 1;
                for (int j = 1; j <= n; ++j) {
                    int into = q.b(j, i);
                    for (int r = 0; r < into; ++r) prod = mulmod(prod, x[j - 1], p);
                    int outof = q.b(i, j);
                    for (int r = 0; r < outof; ++r) prod = mulmod(prod, x[j - 1], p);
                }
                std::uint64_t numer = prod + 1 == p ? 0 : (prod + 1) % p;
                if (x[i - 1] == 0) return false;
                x[i - 1] = mulmod(numer, invmod(x[i - 1], p), p);
                if (x[i - 1] == 0) return false;
            }
            ++t;
            return true;
        };
        bool dead = false;
        while (t < offset && !dead) dead = !step();
        while (!dead && fed < 2L * width + 8) {
            std::vector<std::uint64_t> row(width);
            for (int c = 0; c < width; ++c) {
                std::uint64_t v = 1;
                const Exponents& e = basis.monomials[c];
                for (int i = 0; i < n; ++i)
                    for (int r = 0; r < e[i]; ++r) v = mulmod(v, x[i], p);
                row[c] = v;
            }
            ech.add_row(std::move(row));
            ++fed;
            if (ech.rank() == width) {
                points_used = fed;
                return true;
            }
            for (long s = 0; s < stride && !dead; ++s) dead = !step();
        }
        // Rank stalled below width (or the prime collided): inconclusive.
    }
    return false;
}

VanishingSpace vanishing_from_cache(const Quiver& q, const Point& start, OrbitCache& cache,
                                    const MonomialBasis& basis, long offset, long stride,
                                    std::vector<Point>* samples_out) {
    const int width = static_cast<int>(basis.monomials.size());
    VanishingSpace space;
    space.degree_bound = basis.degree_bound;

    long certified_points = 0;
    if (certify_zero_kernel(q, start, basis, offset, stride, certified_points)) {
        space.points_used = certified_points;
        space.stabilized = true;
        return space;
    }

    std::vector<int> order = grlex_descending_order(basis);
    RowEchelon ech(width, order);
    std::vector<Point> samples;
    int unchanged = 0;
    long fed = 0;
    for (;;) {
        // Periodic orbit: the class is the finite set of its residue points.
        cache.probe_period(offset + stride * fed);
        if (cache.period()) {
            long p = *cache.period();
            ech = RowEchelon(width, order);
            samples.clear();
            std::vector<bool> seen(p, false);
            for (long k = 0;; ++k) {
                long t = (offset + stride * k) % p;
                if (seen[t]) break;
                seen[t] = true;
                const Point& pt = cache.point(t);
                samples.push_back(pt);
                ech.add_row(evaluation_row(pt, basis));
            }
            fed = static_cast<long>(samples.size());
            space.stabilized = true;
            break;
        }
        const Point& pt = cache.point(offset + stride * fed);
        samples.push_back(pt);
        bool grew = ech.add_row(evaluation_row(pt, basis));
        ++fed;
        unchanged = grew ? 0 : unchanged + 1;
        if (ech.rank() == width) {
            space.stabilized = true;
            break;
        }
        if (unchanged >= 3 && fed >= width + 3) {
            space.stabilized = true;
            break;
        }
        if (fed > 4L * width + 16) {  // safety stop; should be unreachable
            space.stabilized = false;
            break;
        }
    }
    space.points_used = fed;
    for (const auto& row : ech.kernel()) space.basis.push_back(row_to_poly(row, basis));
    space.generators = prune_to_generators(space.basis, basis);
    if (samples_out) *samples_out = std::move(samples);
    return space;
}

}  // namespace

VanishingSpace stabilized_vanishing_space(const Quiver& q, const Point& start, int degree,
                                          long offset, long stride,
                                          const VarietyOptions& options) {
    if (stride < 1) throw InvalidInput("stride must be at least 1");
    if (offset < 0) throw InvalidInput("offset must be non-negative");
    MonomialBasis basis = monomial_basis(q.n(), degree);
    OrbitCache cache(q, start, options.bit_budget);
    return vanishing_from_cache(q, start, cache, basis, offset, stride, nullptr);
}

LaurentPolynomial pullback_numerator(const LaurentPolynomial& f, const Quiver& q,
                                     std::size_t term_budget) {
    ClusterState mutated = coxeter_mutate_cluster(initial_state(q), term_budget);
    RationalFunction composed =
        substitute(f, std::span<const RationalFunction>(mutated.vars), term_budget);
    return numerator_normal_form(composed);
}

DimensionEstimate dimension_estimate(const VanishingSpace& space, const Point& point) {
    const int n = static_cast<int>(point.size());
    for (const LaurentPolynomial& p : space.basis)
        if (p.evaluate(point) != 0)
            throw PointNotOnVariety("a basis polynomial does not vanish at the point");
    std::vector<std::vector<Rational>> jacobian;
    for (const LaurentPolynomial& p : space.generators) {
        std::vector<Rational> grad(n);
        for (int i = 1; i <= n; ++i) grad[i - 1] = p.derivative(i).evaluate(point);
        jacobian.push_back(std::move(grad));
    }
    int rank = matrix_rank(jacobian, n);
    return {n - rank, rank};
}

std::vector<LaurentPolynomial> ideal_slice_basis(const std::vector<LaurentPolynomial>& gens,
                                                 int nvars, int degree) {
    MonomialBasis basis = monomial_basis(nvars, degree);
    auto index = basis_index(basis);
    std::vector<int> order = grlex_descending_order(basis);
    std::vector<std::vector<Rational>> rows;
    for (const LaurentPolynomial& g : gens) {
        if (g.is_zero()) continue;
        if (g.has_negative_exponents())
            throw InvalidInput("ideal slice needs ordinary polynomials");
        int room = degree - static_cast<int>(g.degree());
        if (room < 0) throw InvalidInput("generator degree exceeds the slice degree");
        MonomialBasis mults = monomial_basis(nvars, room);
        for (const Exponents& m : mults.monomials)
            rows.push_back(poly_to_row(g.shifted(m), basis, index));
    }
    std::vector<LaurentPolynomial> out;
    for (const auto& row : reduced_row_echelon(rows, order)) out.push_back(row_to_poly(row, basis));
    return out;
}

bool in_poly_span(const LaurentPolynomial& f, const std::vector<LaurentPolynomial>& basis,
                  int nvars, int degree) {
    MonomialBasis mb = monomial_basis(nvars, degree);
    auto index = basis_index(mb);
    std::vector<int> order = grlex_descending_order(mb);
    std::vector<std::vector<Rational>> rows;
    for (const LaurentPolynomial& b : basis) rows.push_back(poly_to_row(b, mb, index));
    auto rref = reduced_row_echelon(rows, order);
    return in_row_span(poly_to_row(f, mb, index), rref, order);
}

namespace {

bool space_contains(const VanishingSpace& big, const VanishingSpace& small,
                    const MonomialBasis& basis) {
    auto index = basis_index(basis);
    std::vector<int> order = grlex_descending_order(basis);
    std::vector<std::vector<Rational>> rows;
    for (const LaurentPolynomial& b : big.basis) rows.push_back(poly_to_row(b, basis, index));
    auto rref = reduced_row_echelon(rows, order);
    for (const LaurentPolynomial& p : small.basis)
        if (!in_row_span(poly_to_row(p, basis, index), rref, order)) return false;
    return true;
}

}  // namespace

ComponentDecomposition detect_components(const Quiver& q, const Point& start, int degree,
                                         long m_max, const VarietyOptions& options) {
    if (m_max < 1) throw InvalidInput("m_max must be at least 1");
    MonomialBasis basis = monomial_basis(q.n(), degree);
    OrbitCache cache(q, start, options.bit_budget);

    std::vector<Point> full_samples;
    VanishingSpace full = vanishing_from_cache(q, start, cache, basis, 0, 1, &full_samples);

    ComponentDecomposition result{1, {}, false};

    if (cache.period()) {
        // Finite orbit: one singleton class per point, m = period.
        long p = *cache.period();
        result.m = p;
        for (long r = 0; r < p; ++r) {
            std::vector<Point> pts{cache.point(r)};
            VanishingSpace space = nullspace(evaluation_matrix(pts, basis));
            DimensionEstimate dim = dimension_estimate(space, pts[0]);
            result.classes.push_back({static_cast<int>(r), std::move(space), dim, pts[0],
                                      std::move(pts)});
        }
    } else {
        long best_m = 1;
        std::size_t best_quality = full.basis.size();
        std::vector<ComponentClass> best_classes;
        for (long m = 2; m <= m_max; ++m) {
            std::vector<ComponentClass> classes;
            bool all_grow = true;
            std::size_t quality = 0;
            for (long r = 0; r < m && all_grow; ++r) {
                std::vector<Point> samples;
                VanishingSpace space = vanishing_from_cache(q, start, cache, basis, r, m,
                                                            &samples);
                if (space.basis.size() <= full.basis.size() ||
                    !space_contains(space, full, basis)) {
                    all_grow = false;
                    break;
                }
                quality = r == 0 ? space.basis.size()
                                 : std::min(quality, space.basis.size());
                Point base = cache.point(r);
                DimensionEstimate dim = dimension_estimate(space, base);
                classes.push_back({static_cast<int>(r), std::move(space), dim, std::move(base),
                                   std::move(samples)});
            }
            if (all_grow && quality > best_quality) {
                best_quality = quality;
                best_m = m;
                best_classes = std::move(classes);
            }
        }
        result.m = best_m;
        if (best_m == 1) {
            DimensionEstimate dim = dimension_estimate(full, cache.point(0));
            result.classes.push_back({0, full, dim, cache.point(0), full_samples});
        } else {
            result.classes = std::move(best_classes);
        }
    }

    // Cyclic permutation check: class-(r+1) equations pull back to zero on
    // class r's samples.
    result.verified_cycle = true;
    for (std::size_t r = 0; r < result.classes.size() && result.verified_cycle; ++r) {
        const auto& next = result.classes[(r + 1) % result.classes.size()];
        for (const LaurentPolynomial& f : next.space.basis) {
            LaurentPolynomial pb = pullback_numerator(f, q, options.term_budget);
            for (const Point& p : result.classes[r].sample_points) {
                if (pb.evaluate(p) != 0) {
                    result.verified_cycle = false;
                    break;
                }
            }
            if (!result.verified_cycle) break;
        }
    }
    return result;
}

}  // namespace frieze
