#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckgz {

using Complex = std::complex<double>;

/// Division hit a term that is not divisible by the (nilpotent) divisor,
/// i.e. the expression is undefined rather than merely singular.
struct IndeterminateDivision : std::runtime_error {
    explicit IndeterminateDivision(const std::string& what) : std::runtime_error(what) {}
};

/// Square root taken outside its domain (zero scalar part, nonzero nilpotent part).
struct SqrtUndefined : std::runtime_error {
    explicit SqrtUndefined(const std::string& what) : std::runtime_error(what) {}
};

/// Set of dual-unit slot indices, kept as a bitmask. Slot k (1-based, k <= 30)
/// occupies bit k-1. The empty set is the scalar (non-nilpotent) part.
class DualSupport {
  public:
    constexpr DualSupport() = default;
    constexpr explicit DualSupport(std::uint32_t mask) : mask_(mask) {}

    static DualSupport unit(int slot);  // the singleton {slot}

    constexpr std::uint32_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool overlaps(DualSupport other) const { return (mask_ & other.mask_) != 0; }
    constexpr bool contains(DualSupport other) const { return (mask_ & other.mask_) == other.mask_; }
    constexpr DualSupport united(DualSupport other) const { return DualSupport(mask_ | other.mask_); }
    constexpr DualSupport minus(DualSupport other) const { return DualSupport(mask_ & ~other.mask_); }

    std::vector<int> indices() const;  // strictly increasing slot ids

    constexpr auto operator<=>(const DualSupport&) const = default;

  private:
    std::uint32_t mask_ = 0;
};

/// Element of the complex Pimenov algebra: a finite sum of complex
/// coefficients on dual-unit monomials iota_S, with iota_k^2 = 0 and
/// distinct units commuting and persisting.
class PimenovScalar {
  public:
    PimenovScalar() = default;
    PimenovScalar(double re) { set_term(DualSupport{}, Complex(re, 0.0)); }  // NOLINT(implicit)
    PimenovScalar(Complex c) { set_term(DualSupport{}, c); }                 // NOLINT(implicit)

    static PimenovScalar zero() { return {}; }
    static PimenovScalar one() { return PimenovScalar(1.0); }
    static PimenovScalar i() { return PimenovScalar(Complex(0.0, 1.0)); }
    /// The dual unit iota_slot.
    static PimenovScalar iota(int slot);
    static PimenovScalar monomial(DualSupport s, Complex c);

    const std::map<DualSupport, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the value is a single monomial c*iota_S (or zero).
    bool is_monomial() const { return terms_.size() <= 1; }

    Complex coeff(DualSupport s) const;
    /// Coefficient of the empty support.
    Complex real_part() const { return coeff(DualSupport{}); }
    /// The value with the empty-support term removed.
    PimenovScalar nilpotent_part() const;

    void set_term(DualSupport s, Complex c);

    PimenovScalar& operator+=(const PimenovScalar& o);
    PimenovScalar& operator-=(const PimenovScalar& o);
    friend PimenovScalar operator+(PimenovScalar a, const PimenovScalar& b) { return a += b; }
    friend PimenovScalar operator-(PimenovScalar a, const PimenovScalar& b) { return a -= b; }
    friend PimenovScalar operator-(const PimenovScalar& a);
    friend PimenovScalar operator*(const PimenovScalar& a, const PimenovScalar& b);
    PimenovScalar& operator*=(const PimenovScalar& o) { return *this = *this * o; }

    bool operator==(const PimenovScalar& o) const { return terms_ == o.terms_; }

    /// Largest coefficient magnitude over all supports.
    double norm() const;
    std::string to_string() const;

  private:
    std::map<DualSupport, Complex> terms_;  // zero coefficients are never stored
};

/// Strict division by a monomial divisor c*iota_S: every term of `a` must
/// carry support >= S. Throws IndeterminateDivision otherwise.
PimenovScalar div(const PimenovScalar& a, const PimenovScalar& divisor);

/// Inverse of an invertible element (nonzero scalar part); terminating
/// Neumann series in the nilpotent part.
PimenovScalar inverse(const PimenovScalar& a);

/// Principal square root of the scalar part with the first-order nilpotent
/// expansion sqrt(a0 + eta) = sqrt(a0) + eta/(2 sqrt(a0)).
/// sqrt(0) = 0; zero scalar part with eta != 0 throws SqrtUndefined.
PimenovScalar sqrt(const PimenovScalar& a);

inline Complex real_part(const PimenovScalar& a) { return a.real_part(); }

/// Max coefficient magnitude of (a - b).
double distance(const PimenovScalar& a, const PimenovScalar& b);

enum class SlotKind { unit, dual, imaginary };

SlotKind slot_kind_from_string(const std::string& s);
std::string to_string(SlotKind k);

/// The parameter tuple j = (j_1,...,j_{n-1}); slot k ranges over
/// {1, iota_k, i}.
struct CkParameterVector {
    int n = 2;
    std::vector<SlotKind> slots;  // length n-1

    CkParameterVector() = default;
    CkParameterVector(int n_, std::vector<SlotKind> slots_);

    SlotKind slot(int k) const;  // 1-based
    PimenovScalar slot_value(int k) const;
    bool all_unit() const;
    bool has_dual() const;
};

/// A literal product of consecutive slot values, with the slot range recorded.
struct ParameterProduct {
    PimenovScalar value;
    std::vector<int> factor_set;  // the slots multiplied, ascending
};

/// Product of slot values over [lo, hi]; an empty range (lo > hi) is 1.
ParameterProduct parameter_product(const CkParameterVector& j, int lo, int hi);

/// J_k of the component transformation: product over slots n-k+1 .. n-1.
/// J_1 = 1, J_n = full product.
ParameterProduct row_scale(const CkParameterVector& j, int row);

}  // namespace ckgz
