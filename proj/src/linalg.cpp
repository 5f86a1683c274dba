#include "frieze/linalg.hpp"

#include <algorithm>

#include "frieze/errors.hpp"

namespace frieze {

namespace {

// Clears denominators and divides by the content; sign left as is.
std::vector<mpz_class> to_primitive_int(const std::vector<Rational>& row) {
    mpz_class denlcm = 1;
    for (const Rational& q : row) denlcm = lcm(denlcm, q.get_den());
    std::vector<mpz_class> out(row.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        out[i] = row[i].get_num() * (denlcm / row[i].get_den());
        content = gcd(content, out[i]);
    }
    if (content > 1)
        for (auto& x : out) x /= content;
    return out;
}

void make_primitive(std::vector<mpz_class>& row) {
    mpz_class content = 0;
    for (const auto& x : row) {
        content = gcd(content, x);
        if (content == 1) return;
    }
    if (content > 1)
        for (auto& x : row) x /= content;
}

}  // namespace

RowEchelon::RowEchelon(int width, std::vector<int> column_order)
    : width_(width), column_order_(std::move(column_order)), priority_of_(width, -1) {
    if (static_cast<int>(column_order_.size()) != width)
        throw InvalidInput("column order size does not match width");
    for (int k = 0; k < width; ++k) priority_of_[column_order_[k]] = k;
}

bool RowEchelon::add_row(const std::vector<Rational>& row) {
    if (static_cast<int>(row.size()) != width_) throw InvalidInput("row width mismatch");
    std::vector<mpz_class> r = to_primitive_int(row);
    // Stored rows are mutually reduced (zero at every other pivot column), so
    // one pass eliminates all pivots from r.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int pc = column_order_[pivot_priority_[k]];
        if (r[pc] == 0) continue;
        const auto& stored = rows_[k];
        mpz_class a = stored[pc], b = r[pc];
        for (int j = 0; j < width_; ++j) r[j] = r[j] * a - stored[j] * b;
        make_primitive(r);
    }
    int lead = -1;
    for (int k = 0; k < width_; ++k)
        if (r[column_order_[k]] != 0) {
            lead = k;
            break;
        }
    if (lead == -1) return false;
    // Keep the invariant: clear the new pivot column from existing rows.  r is
    // zero at every stored pivot column, so those are not disturbed.
    int new_pc = column_order_[lead];
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        auto& stored = rows_[k];
        if (stored[new_pc] == 0) continue;
        mpz_class a = r[new_pc], b = stored[new_pc];
        for (int j = 0; j < width_; ++j) stored[j] = stored[j] * a - r[j] * b;
        make_primitive(stored);
    }
    auto pos = std::upper_bound(pivot_priority_.begin(), pivot_priority_.end(), lead);
    std::size_t idx = pos - pivot_priority_.begin();
    pivot_priority_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

std::vector<std::vector<Rational>> RowEchelon::kernel() const {
    // Fully reduce the echelon over Q, then read the kernel off the RREF.
    std::vector<std::vector<Rational>> rref(rows_.size(), std::vector<Rational>(width_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < width_; ++j) rref[i][j] = Rational(rows_[i][j]);
    for (std::size_t i = 0; i < rref.size(); ++i) {
        int pc = column_order_[pivot_priority_[i]];
        Rational inv = Rational(1) / rref[i][pc];
        for (int j = 0; j < width_; ++j) rref[i][j] *= inv;
        for (std::size_t u = 0; u < i; ++u) {
            Rational f = rref[u][pc];
            if (f == 0) continue;
            for (int j = 0; j < width_; ++j) rref[u][j] -= f * rref[i][j];
        }
    }
    std::vector<bool> is_pivot(width_, false);
    for (int pr : pivot_priority_) is_pivot[column_order_[pr]] = true;

    std::vector<std::vector<Rational>> kernel_rows;
    for (int k = 0; k < width_; ++k) {
        int col = column_order_[k];
        if (is_pivot[col]) continue;
        std::vector<Rational> v(width_, Rational(0));
        v[col] = 1;
        for (std::size_t i = 0; i < rref.size(); ++i)
            v[column_order_[pivot_priority_[i]]] = -rref[i][col];
        kernel_rows.push_back(std::move(v));
    }
    return reduced_row_echelon(kernel_rows, column_order_);
}

std::vector<std::vector<Rational>> reduced_row_echelon(
    const std::vector<std::vector<Rational>>& rows, const std::vector<int>& column_order) {
    const int width = static_cast<int>(column_order.size());
    std::vector<std::vector<Rational>> work;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != width) throw InvalidInput("row width mismatch");
        work.push_back(r);
    }
    std::vector<std::vector<Rational>> result;
    std::vector<int> pivots;
    for (int k = 0; k < width && !work.empty(); ++k) {
        int col = column_order[k];
        std::size_t found = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (work[i][col] != 0) {
                found = i;
                break;
            }
        if (found == work.size()) continue;
        std::vector<Rational> pivot_row = std::move(work[found]);
        work.erase(work.begin() + found);
        Rational inv = Rational(1) / pivot_row[col];
        for (auto& x : pivot_row) x *= inv;
        for (auto& r : work) {
            if (r[col] == 0) continue;
            Rational f = r[col];
            for (int j = 0; j < width; ++j) r[j] -= f * pivot_row[j];
        }
        for (std::size_t i = 0; i < result.size(); ++i) {
            Rational f = result[i][col];
            if (f == 0) continue;
            for (int j = 0; j < width; ++j) result[i][j] -= f * pivot_row[j];
        }
        result.push_back(std::move(pivot_row));
        pivots.push_back(k);
        work.erase(std::remove_if(work.begin(), work.end(),
                                  [](const std::vector<Rational>& r) {
                                      return std::all_of(r.begin(), r.end(),
                                                         [](const Rational& x) { return x == 0; });
                                  }),
                   work.end());
    }
    // Integer-primitive rows with positive pivot; already sorted by priority.
    for (auto& r : result) {
        std::vector<mpz_class> ints = to_primitive_int(r);
        int lead = -1;
        for (int k = 0; k < width; ++k)
            if (ints[column_order[k]] != 0) {
                lead = column_order[k];
                break;
            }
        bool flip = ints[lead] < 0;
        for (int j = 0; j < width; ++j) r[j] = Rational(flip ? -ints[j] : ints[j]);
    }
    return result;
}

bool in_row_span(const std::vector<Rational>& row,
                 const std::vector<std::vector<Rational>>& rref,
                 const std::vector<int>& column_order) {
    std::vector<Rational> r = row;
    const int width = static_cast<int>(column_order.size());
    for (const auto& basis_row : rref) {
        int lead = -1;
        for (int k = 0; k < width; ++k)
            if (basis_row[column_order[k]] != 0) {
                lead = column_order[k];
                break;
            }
        if (lead == -1 || r[lead] == 0) continue;
        Rational f = r[lead] / basis_row[lead];
        for (int j = 0; j < width; ++j) r[j] -= f * basis_row[j];
    }
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

Rational determinant(const std::vector<std::vector<Rational>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    Rational scale(1);
    std::vector<std::vector<mpz_class>> m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(matrix[i].size()) != n) throw InvalidInput("matrix is not square");
        mpz_class denlcm = 1;
        for (const Rational& q : matrix[i]) denlcm = lcm(denlcm, q.get_den());
        m[i].resize(n);
        for (int j = 0; j < n; ++j) m[i][j] = matrix[i][j].get_num() * (denlcm / matrix[i][j].get_den());
        scale /= Rational(denlcm);
    }
    // Bareiss.
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == -1) return Rational(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return Rational(sign) * Rational(m[n - 1][n - 1]) * scale;
}

int matrix_rank(const std::vector<std::vector<Rational>>& rows, int width) {
    std::vector<int> order(width);
    for (int i = 0; i < width; ++i) order[i] = i;
    RowEchelon ech(width, order);
    for (const auto& r : rows) ech.add_row(r);
    return ech.rank();
}

// ---- modular ----

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

bool rational_mod(const Rational& q, std::uint64_t p, std::uint64_t& out) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) return false;
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    // mpz_fdiv_ui on a negative value already returns the positive residue.
    out = mulmod(num, invmod(den, p), p);
    return true;
}

const std::vector<std::uint64_t>& certification_primes() {
    static const std::vector<std::uint64_t> primes = {
        2305843009213693951ULL,  // 2^61 - 1
        999999999999999989ULL,
        2147483647ULL,  // 2^31 - 1
    };
    return primes;
}

bool ModRowEchelon::add_row(std::vector<std::uint64_t> row) {
    if (static_cast<int>(row.size()) != width_) throw InvalidInput("row width mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint64_t x = row[pivots_[k]];
        if (x == 0) continue;
        for (int j = 0; j < width_; ++j) {
            std::uint64_t sub = mulmod(rows_[k][j], x, p_);
            row[j] = row[j] >= sub ? row[j] - sub : row[j] + p_ - sub;
        }
    }
    int lead = -1;
    for (int j = 0; j < width_; ++j)
        if (row[j] != 0) {
            lead = j;
            break;
        }
    if (lead == -1) return false;
    std::uint64_t inv = invmod(row[lead], p_);
    for (int j = 0; j < width_; ++j) row[j] = mulmod(row[j], inv, p_);
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
    return true;
}

}  // namespace frieze
