#pragma once

#include "primat/matrix.hpp"

namespace primat {

// original = h * u; h is the canonical column-style Hermite normal form:
// lower triangular, strictly positive diagonal, 0 <= h(m,n) < h(m,m) for
// n < m; u unimodular.
struct HnfDecomposition {
    IntegerMatrix h;
    IntegerMatrix u;
};

// original = u * lambda * v; u, v unimodular, lambda diagonal with
// nonnegative entries forming a divisibility chain (invariant factors).
struct SnfDecomposition {
    IntegerMatrix u;
    IntegerMatrix lambda;
    IntegerMatrix v;
};

// Canonical HNF of a square nonsingular matrix; throws SingularError.
HnfDecomposition hnf(const IntegerMatrix& a);

// Smith form; accepts rectangular blocks (used for the D x 2D coprimality
// test) and singular input (zero invariant factors trail the chain).
SnfDecomposition snf(const IntegerMatrix& a);

// hnf(a).h — the canonical representative of the right-unimodular associate
// class: canonical_form(a) == canonical_form(b) iff a = b * U for some
// unimodular U.
IntegerMatrix canonical_form(const IntegerMatrix& a);

// True iff h is the HNF of a prime matrix: exactly one diagonal entry
// differs from 1 and that entry is a rational prime. Throws ValueError if h
// is not a canonical HNF in the first place.
bool is_prime_hnf_shape(const IntegerMatrix& h);

namespace detail {

// Column reduction of a full-row-rank r x c block (c >= r):
//   h = a * v,   a = h * u,   u = v^{-1},
// with h = (G | 0), G lower triangular in canonical form. The kernel
// lattice of a is spanned by the last c - r columns of v.
struct ColumnHnf {
    IntegerMatrix h;
    IntegerMatrix u;
    IntegerMatrix v;
};

ColumnHnf column_hnf(const IntegerMatrix& a);

}  // namespace detail

}  // namespace primat
