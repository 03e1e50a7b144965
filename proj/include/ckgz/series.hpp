#pragma once

#include <cstdint>
#include <map>

#include "ckgz/pimenov.hpp"

namespace ckgz {

// Truncated Laurent series in the formal contraction parameters, one
// dimension per dual slot. Exponents are tracked on a fixed window
// [-kExpMin, +kExpMax]; division by a parameter monomial is an exponent
// shift and is always defined. Converting back to a PimenovScalar keeps
// exponents 0 and 1 per slot (the dual-number projection) and rejects
// negative exponents.
//
// This is the exact side channel used where plain dual arithmetic loses
// grade-mixing information (contracted rows whose components are shifted
// by the contraction parameter).

inline constexpr int kExpMin = -6;
inline constexpr int kExpMax = 6;
inline constexpr int kMaxSeriesSlots = 4;

/// Packed exponent vector; 4 bits per slot, offset-encoded.
class ExpKey {
  public:
    constexpr ExpKey() = default;

    int get(int dim) const { return static_cast<int>((bits_ >> (4 * dim)) & 0xF) + kExpMin; }
    void set(int dim, int e) {
        bits_ &= ~(std::uint64_t{0xF} << (4 * dim));
        bits_ |= (static_cast<std::uint64_t>(e - kExpMin) & 0xF) << (4 * dim);
    }
    static ExpKey zero() {
        ExpKey k;
        for (int d = 0; d < kMaxSeriesSlots; ++d) k.set(d, 0);
        return k;
    }
    constexpr auto operator<=>(const ExpKey&) const = default;

  private:
    std::uint64_t bits_ = 0;
};

class LaurentSeries {
  public:
    LaurentSeries() = default;
    LaurentSeries(double re) { set(ExpKey::zero(), Complex(re, 0.0)); }  // NOLINT(implicit)
    LaurentSeries(Complex c) { set(ExpKey::zero(), c); }                 // NOLINT(implicit)

    static LaurentSeries zero() { return {}; }
    static LaurentSeries one() { return LaurentSeries(1.0); }
    /// The formal parameter of series dimension `dim` (0-based).
    static LaurentSeries eps(int dim, int power = 1);

    const std::map<ExpKey, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Complex coeff(const ExpKey& k) const;
    Complex scalar_part() const { return coeff(ExpKey::zero()); }

    void set(const ExpKey& k, Complex c);

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator-(const LaurentSeries& a);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    /// Exponent shift by -power on dimension `dim` (division by eps^power).
    LaurentSeries shifted(int dim, int delta) const;

    /// True when every nonzero term has exponent >= 0 on every dimension.
    bool laurent_free() const;

    double norm() const;
    /// Max coefficient magnitude over terms whose every exponent lies in
    /// [glo, ghi]; used to compare only reliably-tracked grades.
    double norm_window(int glo, int ghi) const;

    std::string to_string() const;

  private:
    std::map<ExpKey, Complex> terms_;
};

/// Division by a one-term series: exponent shift plus coefficient division,
/// defined for every argument.
LaurentSeries mono_div(const LaurentSeries& a, const LaurentSeries& mono);

/// Inverse; requires nonzero coefficient at exponent zero and no negative
/// exponents in the argument (terminates on the truncation window).
LaurentSeries inverse(const LaurentSeries& a);

/// Principal branch sqrt; requires nonzero coefficient at exponent zero and
/// no negative exponents.
LaurentSeries sqrt(const LaurentSeries& a);

double distance(const LaurentSeries& a, const LaurentSeries& b);

/// Dual-number projection: exponents {0,1} per dimension map to supports,
/// higher exponents are dropped (nilpotent truncation). Negative exponents
/// throw IndeterminateDivision.
/// `dims_to_slots[dim]` names the dual slot carried by series dimension dim.
PimenovScalar to_pimenov(const LaurentSeries& a, const std::vector<int>& dims_to_slots);

/// Lift: supports map to exponent-1 terms.
LaurentSeries from_pimenov(const PimenovScalar& a, const std::vector<int>& dims_to_slots);

}  // namespace ckgz
