#pragma once

#include "ckgz/coeffs.hpp"

namespace ckgz {

// Printed closed forms of the parametrized matrix elements, transcribed
// verbatim (up to the recorded corrections) and kept independent of the
// GzCoeffs route; tests compare the two.

template <typename S>
struct U2Closed {
    S m12, m22, m11, j1;

    S diag_a00() const { return mono_div(m12 + m22, j1) - m11; }
    S diag_a11() const { return m11; }
    /// Coefficient of |m11 - 1>.
    S lower() const {
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt((m12 - j1 * (m11 - S(1.0))) * (j1 * m11 - m22));
    }
    /// Coefficient of |m11 + 1>.
    S raise() const {
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt((m12 - j1 * m11) * (j1 * (m11 + S(1.0)) - m22));
    }
};

template <typename S>
struct U3Closed {
    S m13, m23, m33, m12, m22, m11, j1, j2;

    S diag_a00() const { return m23 + mono_div(m13 + m33, j1 * j2) - mono_div(m12 + m22, j2); }
    S diag_a11() const { return mono_div(m12 + m22, j2) - m11; }
    S diag_a22() const { return m11; }

    // The u(2;j2) subalgebra acting on m11.
    S a12() const { return U2Closed<S>{m12, m22, m11, j2}.lower(); }
    S a21() const { return U2Closed<S>{m12, m22, m11, j2}.raise(); }

    // Row-2 movers; coefficients without the 1/j2 prefactor.
    S a01_first() const {  // target |m12 - j2>
        S num = (m13 - j1 * m12 + j1 * j2) * (m33 - j1 * m12 - j1 * j2) * (j2 * m23 - m12) * (j2 * m11 - m12);
        S den = (m22 - m12) * (m22 - m12 - j2);
        return sqrt_ratio(num, den);
    }
    S a01_second() const {  // target |m22 - j2>
        S num = (m13 - j1 * m22 + S(2.0) * j1 * j2) * (m33 - j1 * m22) * (j2 * m23 + j2 - m22) *
                (j2 * m11 + j2 - m22);
        S den = (m12 - m22 + S(2.0) * j2) * (m12 - m22 + j2);
        return sqrt_ratio(num, den);
    }
    S a10_first() const {  // target |m12 + j2>
        S num = (m13 - j1 * m12) * (m33 - j1 * m12 - S(2.0) * j1 * j2) * (j2 * m23 - j2 - m12) *
                (j2 * m11 - j2 - m12);
        S den = (m22 - m12 - j2) * (m22 - m12 - S(2.0) * j2);
        return sqrt_ratio(num, den);
    }
    S a10_second() const {  // target |m22 + j2>; second radical factor follows the mirrored pattern
        S num = (m13 - j1 * m22 + j1 * j2) * (m33 - j1 * m22 - j1 * j2) * (j2 * m23 - m22) * (j2 * m11 - m22);
        S den = (m12 - m22 + j2) * (m12 - m22);
        return sqrt_ratio(num, den);
    }

    // Derived movers acting on m12/m22 and m11 together (no 1/j2 prefactor).
    S a02_first() const {  // target |m12 - j2, m11 - 1>
        S num = (m13 - j1 * m12 + j1 * j2) * (m33 - j1 * m12 - j1 * j2) * (j2 * m23 - m12) * (m22 - j2 * m11);
        S den = (m22 - m12) * (m22 - m12 - j2);
        return sqrt_ratio(num, den);
    }
    S a02_second() const {  // target |m22 - j2, m11 - 1>
        S num = (m13 - j1 * m22 + S(2.0) * j1 * j2) * (m33 - j1 * m22) * (j2 * m23 + j2 - m22) *
                (m12 - j2 * m11 + j2);
        S den = (m12 - m22 + S(2.0) * j2) * (m12 - m22 + j2);
        return sqrt_ratio(num, den);
    }
    S a20_first() const {  // target |m12 + j2, m11 + 1> (raising pattern)
        S num = (m13 - j1 * m12) * (m33 - j1 * m12 - S(2.0) * j1 * j2) * (j2 * m23 - j2 - m12) *
                (m22 - j2 * m11 - j2);
        S den = (m22 - m12 - j2) * (m22 - m12 - S(2.0) * j2);
        return sqrt_ratio(num, den);
    }
    S a20_second() const {  // target |m22 + j2, m11 + 1>
        S num = (m13 - j1 * m22 + j1 * j2) * (m33 - j1 * m22 - j1 * j2) * (j2 * m23 - m22) * (m12 - j2 * m11);
        S den = (m12 - m22 + j2) * (m12 - m22);
        return sqrt_ratio(num, den);
    }

  private:
    static S sqrt_ratio(const S& num, const S& den) {
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt(-num * inverse(den));
    }
};

}  // namespace ckgz
