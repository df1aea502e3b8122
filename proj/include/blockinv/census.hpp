#pragma once

#include "blockinv/exact.hpp"

namespace blockinv {

// A secant-variety triple: k-th secant of degree-d forms on projective
// n-space. N = C(n+d, d) - 1 is the ambient projective dimension.
struct AHTriple {
    long k = 0;
    long d = 0;
    long n = 0;
};

// Number of rows x cols arrays of nonnegative integers with constant row
// sums and column sums, counted up to permutation of the columns. Dynamic
// programming over column types; returns 0 when rows*row_sum != cols*col_sum.
ExactInt count_weight_arrays(int rows, int cols, int row_sum, int col_sum);

// C(vars + degree - 1, degree): monomials of the given degree.
ExactInt count_total_monomials(long vars, long degree);

// ceil(m * ceil((m-1)/4) / 5): the standard lower bound for covering all
// pairs of an m-set by 5-blocks.
long covering_bound(long m);

// Alexander-Hirschowitz codimension of the k-th secant of the degree-d
// Veronese of P^n, exceptional cases included.
ExactInt ah_codimension(const AHTriple& t);

// True iff C(n+d, d) = (n+1)k + 1.
bool is_ah_ordinary(const AHTriple& t);

}  // namespace blockinv
