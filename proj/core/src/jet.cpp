#include "tmoments/jet.hpp"

#include "tmoments/errors.hpp"

namespace tmoments {

Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r += b;
    return r;
}

Jet2& operator+=(Jet2& a, const Jet2& b) {
    a.c0 += b.c0;
    a.cu += b.cu;
    a.cv += b.cv;
    a.cw += b.cw;
    a.cuu += b.cuu;
    a.cuv += b.cuv;
    a.cuw += b.cuw;
    a.cvv += b.cvv;
    a.cvw += b.cvw;
    a.cww += b.cww;
    return a;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 r = a;
    r -= b;
    return r;
}

Jet2& operator-=(Jet2& a, const Jet2& b) {
    a.c0 -= b.c0;
    a.cu -= b.cu;
    a.cv -= b.cv;
    a.cw -= b.cw;
    a.cuu -= b.cuu;
    a.cuv -= b.cuv;
    a.cuw -= b.cuw;
    a.cvv -= b.cvv;
    a.cvw -= b.cvw;
    a.cww -= b.cww;
    return a;
}

Jet2 operator-(const Jet2& a) {
    return Jet2::zero() - a;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.c0 = a.c0 * b.c0;
    r.cu = a.c0 * b.cu + a.cu * b.c0;
    r.cv = a.c0 * b.cv + a.cv * b.c0;
    r.cw = a.c0 * b.cw + a.cw * b.c0;
    r.cuu = a.c0 * b.cuu + a.cu * b.cu + a.cuu * b.c0;
    r.cvv = a.c0 * b.cvv + a.cv * b.cv + a.cvv * b.c0;
    r.cww = a.c0 * b.cww + a.cw * b.cw + a.cww * b.c0;
    r.cuv = a.c0 * b.cuv + a.cu * b.cv + a.cv * b.cu + a.cuv * b.c0;
    r.cuw = a.c0 * b.cuw + a.cu * b.cw + a.cw * b.cu + a.cuw * b.c0;
    r.cvw = a.c0 * b.cvw + a.cv * b.cw + a.cw * b.cv + a.cvw * b.c0;
    return r;
}

Jet2 operator*(const Rational& s, const Jet2& a) {
    Jet2 r;
    r.c0 = s * a.c0;
    r.cu = s * a.cu;
    r.cv = s * a.cv;
    r.cw = s * a.cw;
    r.cuu = s * a.cuu;
    r.cuv = s * a.cuv;
    r.cuw = s * a.cuw;
    r.cvv = s * a.cvv;
    r.cvw = s * a.cvw;
    r.cww = s * a.cww;
    return r;
}

Jet2 edge_weight_jet(const Rational& eps, const Rational& delta, int alphabet_size) {
    if (alphabet_size < 1)
        raise(errc::precondition_violated, "edge weight needs a nonempty alphabet");
    Rational inv_k(1, alphabet_size);

    // (1/K) (1+u)^eps (1+v)^delta (1+w), truncated at total degree 2.
    Jet2 r;
    r.c0 = inv_k;
    r.cu = inv_k * eps;
    r.cv = inv_k * delta;
    r.cw = inv_k;
    r.cuu = inv_k * eps * (eps - 1) / 2;
    r.cvv = inv_k * delta * (delta - 1) / 2;
    r.cuv = inv_k * eps * delta;
    r.cuw = r.cu;
    r.cvw = r.cv;
    // cww stays 0: the weight is linear in z.
    return r;
}

JetMatrix JetMatrix::identity(int n) {
    JetMatrix m(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Jet2::one();
    return m;
}

Jet2 det(const JetMatrix& m) {
    int n = m.size();
    if (n == 0)
        return Jet2::one();

    // Samuelson-Berkowitz: grow the characteristic polynomial of the leading
    // principal submatrices. After round r, `charpoly` holds the coefficients
    // of det(lambda*I - A_r) from the leading term down.
    std::vector<Jet2> charpoly = {Jet2::one(), -m.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        int k = r - 1; // size of the previous principal submatrix

        // toeplitz[0] = 1, toeplitz[1] = -a_rr,
        // toeplitz[i] = -(row . A^{i-2} . col) for i >= 2.
        std::vector<Jet2> toeplitz(r + 1, Jet2::zero());
        toeplitz[0] = Jet2::one();
        toeplitz[1] = -m.at(k, k);
        std::vector<Jet2> vec(k);
        for (int i = 0; i < k; ++i)
            vec[i] = m.at(i, k);
        for (int i = 2; i <= r; ++i) {
            Jet2 dot = Jet2::zero();
            for (int j = 0; j < k; ++j)
                dot += m.at(k, j) * vec[j];
            toeplitz[i] = -dot;
            if (i == r)
                break;
            std::vector<Jet2> next(k, Jet2::zero());
            for (int row = 0; row < k; ++row)
                for (int col = 0; col < k; ++col)
                    next[row] += m.at(row, col) * vec[col];
            vec = std::move(next);
        }

        std::vector<Jet2> grown(r + 1, Jet2::zero());
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < std::min<int>(i + 1, r); ++j)
                grown[i] += toeplitz[i - j] * charpoly[j];
        charpoly = std::move(grown);
    }

    // det(A) = (-1)^n * charpoly(0).
    Jet2 result = charpoly[n];
    if (n % 2 != 0)
        result = -result;
    return result;
}

} // namespace tmoments
