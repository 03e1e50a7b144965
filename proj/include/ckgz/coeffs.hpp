#pragma once

#include <functional>

#include "ckgz/jet.hpp"
#include "ckgz/pattern.hpp"
#include "ckgz/series.hpp"

namespace ckgz {

// Scalar-type shims so the coefficient formulas read identically over
// PimenovScalar, LaurentSeries and their jets.

inline PimenovScalar mono_div(const PimenovScalar& a, const PimenovScalar& mono) { return div(a, mono); }
inline double mono_div(double a, double mono) { return a / mono; }
inline Complex mono_div(Complex a, Complex mono) { return a / mono; }

template <typename S>
Jet<S> mono_div(const Jet<S>& a, const Jet<S>& mono) {
    // The divisor must be a plain (jet-constant) monomial.
    Jet<S> out(S(0.0), a.order());
    for (const auto& [idx, v] : a.terms()) out.set(idx, mono_div(v, mono.value()));
    return out;
}

/// Generic-coefficient evaluator for the parametrized raising/lowering and
/// diagonal actions. Components are supplied by a callback so the same
/// formulas serve pattern values, label reconstructions, and lattice
/// offsets. Index conventions: rows k = 1..n, positions p = 1..k; the
/// lowering generator on row k is A_{n-k-1,n-k}, the raising one its mirror.
template <typename S>
struct GzCoeffs {
    int n = 2;
    std::function<S(int)> jval;     // slot l -> parameter value
    std::function<S(Pos)> comp;     // scheme component m_{p,k}

    S J(int row) const {
        S out = S(1.0);
        for (int l = n - row + 1; l <= n - 1; ++l) out = out * jval(l);
        return out;
    }

    S l(int p, int k) const {
        if (p == 1) return comp({1, k}) - J(k);
        if (p == k) return comp({k, k}) - S(static_cast<double>(k)) * J(k);
        return comp({p, k}) - S(static_cast<double>(p));
    }

    /// Eigenvalue of A_{n-k,n-k}: row sum difference, outer components
    /// divided by the row scale.
    S diag(int k) const {
        auto rowsum = [&](int kk) -> S {
            if (kk == 0) return S(0.0);
            if (kk == 1) return comp({1, 1});
            S s = mono_div(comp({1, kk}) + comp({kk, kk}), J(kk));
            for (int p = 2; p <= kk - 1; ++p) s = s + comp({p, kk});
            return s;
        };
        return rowsum(k) - rowsum(k - 1);
    }

    /// Coefficient of the outer emission |m_{1k} - J_k> (first = true) or
    /// |m_{kk} - J_k> of the lowering generator on row k, without the 1/J_k
    /// prefactor.
    S lower_outer(int k, bool first) const {
        S Jk = J(k), Jk1 = J(k + 1);
        S lm = first ? l(1, k) : l(k, k);
        S num = S(1.0);
        for (int p = 2; p <= k; ++p) num = num * (Jk * l(p, k + 1) - lm + Jk);
        for (int p = 2; p <= k - 2; ++p) num = num * (Jk * l(p, k - 1) - lm);
        S den = S(1.0);
        for (int p = 2; p <= k - 1; ++p) den = den * (Jk * l(p, k) - lm + Jk) * (Jk * l(p, k) - lm);
        S jn_k = jval(n - k);
        num = num * (l(1, k + 1) - jn_k * lm + Jk1) * (l(k + 1, k + 1) - jn_k * lm + Jk1);
        if (k == 2) {
            num = num * (l(1, 1) * jval(n - 1) - lm);
        } else if (k >= 3) {
            S jn_k1 = jval(n - k + 1);
            num = num * (l(1, k - 1) * jn_k1 - lm) * (l(k - 1, k - 1) * jn_k1 - lm);
        }
        if (k >= 2) {
            S lo = first ? l(k, k) : l(1, k);
            den = den * (lo - lm + Jk) * (lo - lm);
        }
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt(-num * inverse(den));
    }

    /// Coefficient of the outer emission |m_{1k} + J_k> / |m_{kk} + J_k> of
    /// the raising generator, without the 1/J_k prefactor.
    S raise_outer(int k, bool first) const {
        S Jk = J(k), Jk1 = J(k + 1);
        (void)Jk1;
        S lm = first ? l(1, k) : l(k, k);
        S num = S(1.0);
        for (int p = 2; p <= k; ++p) num = num * (Jk * l(p, k + 1) - lm);
        for (int p = 2; p <= k - 2; ++p) num = num * (Jk * l(p, k - 1) - lm - Jk);
        S den = S(1.0);
        for (int p = 2; p <= k - 1; ++p) den = den * (Jk * l(p, k) - lm) * (Jk * l(p, k) - lm - Jk);
        S jn_k = jval(n - k);
        num = num * (l(1, k + 1) - lm * jn_k) * (l(k + 1, k + 1) - lm * jn_k);
        if (k == 2) {
            num = num * (l(1, 1) * jval(n - 1) - lm - Jk);
        } else if (k >= 3) {
            S jn_k1 = jval(n - k + 1);
            num = num * (l(1, k - 1) * jn_k1 - lm - Jk) * (l(k - 1, k - 1) * jn_k1 - lm - Jk);
        }
        if (k >= 2) {
            S lo = first ? l(k, k) : l(1, k);
            den = den * (lo - lm) * (lo - lm - Jk);
        }
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt(-num * inverse(den));
    }

    /// Interior emission |m_{sk} - 1>, 1 < s < k; the printed prefactor
    /// j_{n-k+1} is not included here.
    S lower_interior(int k, int s) const {
        S Jk = J(k), Jk1 = J(k + 1), Jkm1 = J(k - 1);
        S ls = l(s, k);
        S num = S(1.0);
        for (int p = 2; p <= k; ++p) num = num * (l(p, k + 1) - ls + S(1.0));
        for (int p = 2; p <= k - 2; ++p) num = num * (l(p, k - 1) - ls);
        S den = S(1.0);
        for (int p = 2; p <= k - 1; ++p) {
            if (p == s) continue;
            den = den * (l(p, k) - ls + S(1.0)) * (l(p, k) - ls);
        }
        num = num * (l(1, k + 1) - Jk1 * ls + Jk1) * (l(k + 1, k + 1) - Jk1 * ls + Jk1);
        num = num * (l(1, k - 1) - Jkm1 * ls) * (l(k - 1, k - 1) - Jkm1 * ls);
        den = den * (l(1, k) - Jk * ls + Jk) * (l(1, k) - Jk * ls);
        den = den * (l(k, k) - Jk * ls + Jk) * (l(k, k) - Jk * ls);
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt(-num * inverse(den));
    }

    S raise_interior(int k, int s) const {
        S Jk = J(k), Jk1 = J(k + 1), Jkm1 = J(k - 1);
        S ls = l(s, k);
        S num = S(1.0);
        for (int p = 2; p <= k; ++p) num = num * (l(p, k + 1) - ls);
        for (int p = 2; p <= k - 2; ++p) num = num * (l(p, k - 1) - ls - S(1.0));
        S den = S(1.0);
        for (int p = 2; p <= k - 1; ++p) {
            if (p == s) continue;
            den = den * (l(p, k) - ls) * (l(p, k) - ls - S(1.0));
        }
        num = num * (l(1, k + 1) - Jk1 * ls) * (l(k + 1, k + 1) - Jk1 * ls);
        num = num * (l(1, k - 1) - Jkm1 * ls - Jkm1) * (l(k - 1, k - 1) - Jkm1 * ls - Jkm1);
        den = den * (l(1, k) - Jk * ls) * (l(1, k) - Jk * ls - Jk);
        den = den * (l(k, k) - Jk * ls) * (l(k, k) - Jk * ls - Jk);
        using std::sqrt;
        using ckgz::sqrt;
        return sqrt(-num * inverse(den));
    }
};

}  // namespace ckgz
