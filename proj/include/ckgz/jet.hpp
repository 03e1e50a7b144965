#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "ckgz/series.hpp"

namespace ckgz {

inline double inverse(double x) { return 1.0 / x; }
inline Complex inverse(Complex x) { return Complex(1.0, 0.0) / x; }

inline constexpr int kMaxJetDirs = 4;
using JetIdx = std::array<std::uint8_t, kMaxJetDirs>;

inline int jet_total(const JetIdx& a) {
    int t = 0;
    for (auto v : a) t += v;
    return t;
}

/// Truncated multivariate Taylor polynomial: terms_[alpha] is the Taylor
/// coefficient (derivative / alpha!). Used to differentiate the transcribed
/// coefficient closures analytically.
template <typename S>
class Jet {
  public:
    Jet() = default;
    Jet(S value, int order) : order_(order) { set(JetIdx{}, std::move(value)); }

    static Jet variable(S value, int dir, int order) {
        Jet out(std::move(value), order);
        if (order >= 1) {
            JetIdx e{};
            e[dir] = 1;
            out.set(e, S(1.0));
        }
        return out;
    }

    int order() const { return order_; }
    const std::map<JetIdx, S>& terms() const { return terms_; }
    S value() const { return coeff(JetIdx{}); }
    S coeff(const JetIdx& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? S(0.0) : it->second;
    }
    void set(const JetIdx& a, S v) {
        if (is_zero_scalar(v))
            terms_.erase(a);
        else
            terms_[a] = std::move(v);
    }

    Jet& operator+=(const Jet& o) {
        for (const auto& [a, v] : o.terms_) set(a, coeff(a) + v);
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (const auto& [a, v] : o.terms_) set(a, coeff(a) - v);
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(const Jet& a) {
        Jet out;
        out.order_ = a.order_;
        for (const auto& [ai, v] : a.terms_) out.set(ai, -v);
        return out;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet out;
        out.order_ = a.order_;
        for (const auto& [ai, av] : a.terms_)
            for (const auto& [bi, bv] : b.terms_) {
                JetIdx c{};
                int tot = 0;
                for (int d = 0; d < kMaxJetDirs; ++d) {
                    c[d] = static_cast<std::uint8_t>(ai[d] + bi[d]);
                    tot += c[d];
                }
                if (tot > out.order_) continue;
                out.set(c, out.coeff(c) + av * bv);
            }
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    Jet nilpotent_part() const {
        Jet out = *this;
        out.terms_.erase(JetIdx{});
        return out;
    }

  private:
    static bool is_zero_scalar(const S& v) {
        if constexpr (std::is_same_v<S, double>) return v == 0.0;
        else if constexpr (std::is_same_v<S, Complex>) return v == Complex{};
        else return v.is_zero();
    }
    std::map<JetIdx, S> terms_;
    int order_ = 0;
};

template <typename S>
Jet<S> inverse(const Jet<S>& a) {
    S v0 = a.value();
    S iv = inverse(v0);
    Jet<S> t = a.nilpotent_part() * Jet<S>(iv, a.order());
    Jet<S> acc(S(1.0), a.order());
    Jet<S> pw(S(1.0), a.order());
    for (int m = 1; m <= a.order(); ++m) {
        pw = pw * (-t);
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc * Jet<S>(iv, a.order());
}

template <typename S>
Jet<S> sqrt(const Jet<S>& a) {
    using std::sqrt;
    using ckgz::sqrt;
    S r0 = sqrt(a.value());
    Jet<S> t = a.nilpotent_part() * Jet<S>(inverse(a.value()), a.order());
    Jet<S> acc(S(1.0), a.order());
    Jet<S> pw(S(1.0), a.order());
    double binom = 1.0;
    for (int m = 1; m <= a.order(); ++m) {
        binom *= (0.5 - (m - 1)) / m;
        pw = pw * t;
        if (pw.is_zero()) break;
        acc += pw * Jet<S>(S(binom), a.order());
    }
    return acc * Jet<S>(r0, a.order());
}

}  // namespace ckgz
