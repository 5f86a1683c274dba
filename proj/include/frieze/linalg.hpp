#pragma once

#include <cstdint>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

/*
 * Fraction-free elimination over exact rationals.  Incoming rows are cleared
 * to primitive integer vectors; cross-multiplication eliminations keep every
 * stored row integral and re-primitivized, so entries stay the size of
 * matrix minors instead of compounding denominators.  Columns are consumed
 * in the order given by `column_order` (highest pivot priority first).
 */
class RowEchelon {
public:
    RowEchelon(int width, std::vector<int> column_order);

    // Reduces the row against the echelon; inserts it when independent.
    // Returns true when the rank grew.
    bool add_row(const std::vector<Rational>& row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    // Canonical reduced basis of {c : R c = 0}: rows in reduced echelon form
    // w.r.t. the same column order, integer-primitive, positive lead, sorted
    // by pivot priority.
    std::vector<std::vector<Rational>> kernel() const;

private:
    int width_;
    std::vector<int> column_order_;          // column_order_[k] = k-th priority column
    std::vector<int> priority_of_;           // inverse permutation
    std::vector<std::vector<mpz_class>> rows_;  // sorted by pivot priority
    std::vector<int> pivot_priority_;        // priority index of each row's pivot
};

// Reduced row echelon form of arbitrary rational rows under a column order;
// rows are returned integer-primitive with positive pivot, sorted by pivot
// priority.  Zero rows are dropped.
std::vector<std::vector<Rational>> reduced_row_echelon(
    const std::vector<std::vector<Rational>>& rows, const std::vector<int>& column_order);

// Reduces `row` against an RREF basis (as produced above); the remainder is
// zero exactly when the row lies in the span.
bool in_row_span(const std::vector<Rational>& row,
                 const std::vector<std::vector<Rational>>& rref,
                 const std::vector<int>& column_order);

// Exact determinant of a square rational matrix (Bareiss after clearing
// denominators row by row).
Rational determinant(const std::vector<std::vector<Rational>>& matrix);

// Exact rank via the echelon above.
int matrix_rank(const std::vector<std::vector<Rational>>& rows, int width);

// ---- modular helpers (used to certify full rank cheaply) ----

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Image of a rational mod p; false when the denominator vanishes mod p.
bool rational_mod(const Rational& q, std::uint64_t p, std::uint64_t& out);

// Primes below 2^62 for modular certification, largest first.
const std::vector<std::uint64_t>& certification_primes();

class ModRowEchelon {
public:
    ModRowEchelon(int width, std::uint64_t p) : width_(width), p_(p) {}
    bool add_row(std::vector<std::uint64_t> row);  // true when rank grew
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int width_;
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> pivots_;
};

}  // namespace frieze
