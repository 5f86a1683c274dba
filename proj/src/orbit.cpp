#include "frieze/orbit.hpp"

namespace frieze {

namespace {

void check_budget(const Rational& value, std::size_t bit_budget) {
    if (rational_bits(value) > bit_budget)
        throw BudgetExceeded("orbit coordinate exceeded the bit-length budget of " +
                             std::to_string(bit_budget) + " bits");
}

// In-place exchange at vertex i: slots already processed this step hold new
// values, the rest still hold the previous point, which is exactly what the
// recurrence needs in either sweep direction.
Rational exchange_value(const Quiver& q, const Point& x, int i) {
    Rational prod(1);
    for (int j = 1; j <= q.n(); ++j) {
        int into = q.b(j, i);
        if (into > 0) prod *= rational_pow(x[j - 1], into);
        int outof = q.b(i, j);
        if (outof > 0) prod *= rational_pow(x[j - 1], outof);
    }
    return (1 + prod) / x[i - 1];
}

}  // namespace

OrbitRecord iterate(const Quiver& q, const Point& start, long steps, std::size_t bit_budget) {
    if (!q.is_admissible()) throw InvalidInput("orbit iteration requires an admissible quiver");
    if (static_cast<int>(start.size()) != q.n())
        throw InvalidInput("start point dimension does not match the quiver");
    for (int i = 0; i < q.n(); ++i)
        if (start[i] == 0)
            throw ZeroStartCoordinate("start coordinate " + std::to_string(i + 1) + " is zero");
    if (steps < 0) throw InvalidInput("negative step count");

    OrbitRecord record{q, {start}, steps, std::nullopt, std::nullopt};
    Point x = start;
    for (long t = 1; t <= steps; ++t) {
        int zero_vertex = 0;
        for (int i = 1; i <= q.n(); ++i) {
            x[i - 1] = exchange_value(q, x, i);
            check_budget(x[i - 1], bit_budget);
            if (x[i - 1] == 0 && zero_vertex == 0) zero_vertex = i;
        }
        if (zero_vertex != 0) {
            record.failure = OrbitFailure{t, zero_vertex};
            record.generic_up_to = t;
            return record;
        }
        record.points.push_back(x);
        if (!record.period && x == record.points.front())
            record.period = t;
    }
    return record;
}

std::optional<long> detect_period(const OrbitRecord& record) {
    const auto& pts = record.points;
    if (pts.size() < 2) return std::nullopt;
    for (std::size_t p = 1; p + 1 <= pts.size(); ++p) {
        if (pts[p] != pts[0]) continue;
        bool consistent = true;
        for (std::size_t t = 0; t + p < pts.size() && consistent; ++t)
            if (pts[t + p] != pts[t]) consistent = false;
        if (consistent) return static_cast<long>(p);
    }
    return std::nullopt;
}

Point inverse_step(const Quiver& q, const Point& point) {
    if (!q.is_admissible()) throw InvalidInput("inverse step requires an admissible quiver");
    if (static_cast<int>(point.size()) != q.n())
        throw InvalidInput("point dimension does not match the quiver");
    Point x = point;
    for (int i = q.n(); i >= 1; --i) {
        if (x[i - 1] == 0)
            throw NonGenericSpecialization("zero coordinate while inverting a Coxeter step",
                                           -1, i);
        x[i - 1] = exchange_value(q, x, i);
        if (x[i - 1] == 0)
            throw NonGenericSpecialization("inverse step produced a zero coordinate", -1, i);
    }
    return x;
}

}  // namespace frieze
