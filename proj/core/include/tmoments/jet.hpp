#pragma once

#include "tmoments/rational.hpp"

#include <vector>

namespace tmoments {

// Degree-2 truncated Taylor expansion in three variables around (1,1,1),
// written in u = x-1, v = y-1, w = z-1:
//
//   c0 + cu*u + cv*v + cw*w + cuu*u^2 + cuv*u*v + cuw*u*w
//      + cvv*v^2 + cvw*v*w + cww*w^2
//
// The coefficients are exact rationals, so a jet carries the value and all
// first and second partial derivatives of a function at (1,1,1) exactly.
// Truncation at total degree 2 makes this a commutative ring with nilpotents.
struct Jet2 {
    Rational c0, cu, cv, cw;
    Rational cuu, cuv, cuw, cvv, cvw, cww;

    static Jet2 constant(Rational value) {
        Jet2 j;
        j.c0 = std::move(value);
        return j;
    }
    static Jet2 zero() { return {}; }
    static Jet2 one() { return constant(1); }

    // Partial derivatives of the represented function at (1,1,1).
    const Rational& f() const { return c0; }
    const Rational& fx() const { return cu; }
    const Rational& fy() const { return cv; }
    const Rational& fz() const { return cw; }
    Rational fxx() const { return 2 * cuu; }
    Rational fyy() const { return 2 * cvv; }
    Rational fzz() const { return 2 * cww; }
    const Rational& fxy() const { return cuv; }
    const Rational& fxz() const { return cuw; }
    const Rational& fyz() const { return cvw; }

    friend bool operator==(const Jet2&, const Jet2&) = default;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator*(const Rational& s, const Jet2& a);
Jet2& operator+=(Jet2& a, const Jet2& b);
Jet2& operator-=(Jet2& a, const Jet2& b);

// Jet of (1/K) * x^eps * y^delta * z, the weight of a transition with input
// eps and output delta. The binomial expansion (1+u)^e = 1 + e*u +
// e(e-1)/2 * u^2 + ... stays exact for arbitrary rational exponents, which
// is why jets are used here instead of polynomials.
Jet2 edge_weight_jet(const Rational& eps, const Rational& delta, int alphabet_size);

class JetMatrix {
public:
    explicit JetMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {}

    static JetMatrix identity(int n);

    int size() const { return n_; }
    Jet2& at(int row, int col) { return entries_[static_cast<size_t>(row) * n_ + col]; }
    const Jet2& at(int row, int col) const {
        return entries_[static_cast<size_t>(row) * n_ + col];
    }

private:
    int n_;
    std::vector<Jet2> entries_;
};

// Division-free determinant (Samuelson-Berkowitz). The jet ring has zero
// divisors, so elimination with pivoting is unsound; this stays exact over
// any commutative ring at O(n^4) ring multiplications.
Jet2 det(const JetMatrix& m);

} // namespace tmoments
