#include "ckgz/pimenov.hpp"

#include <cmath>
#include <sstream>

namespace ckgz {

DualSupport DualSupport::unit(int slot) {
    if (slot < 1 || slot > 30) throw std::invalid_argument("dual slot out of range: " + std::to_string(slot));
    return DualSupport(std::uint32_t{1} << (slot - 1));
}

std::vector<int> DualSupport::indices() const {
    std::vector<int> out;
    for (int k = 1; k <= 30; ++k)
        if (mask_ & (std::uint32_t{1} << (k - 1))) out.push_back(k);
    return out;
}

PimenovScalar PimenovScalar::iota(int slot) { return monomial(DualSupport::unit(slot), Complex(1.0, 0.0)); }

PimenovScalar PimenovScalar::monomial(DualSupport s, Complex c) {
    PimenovScalar out;
    out.set_term(s, c);
    return out;
}

Complex PimenovScalar::coeff(DualSupport s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Complex{} : it->second;
}

PimenovScalar PimenovScalar::nilpotent_part() const {
    PimenovScalar out = *this;
    out.terms_.erase(DualSupport{});
    return out;
}

void PimenovScalar::set_term(DualSupport s, Complex c) {
    if (c == Complex{})
        terms_.erase(s);
    else
        terms_[s] = c;
}

PimenovScalar& PimenovScalar::operator+=(const PimenovScalar& o) {
    for (const auto& [s, c] : o.terms_) set_term(s, coeff(s) + c);
    return *this;
}

PimenovScalar& PimenovScalar::operator-=(const PimenovScalar& o) {
    for (const auto& [s, c] : o.terms_) set_term(s, coeff(s) - c);
    return *this;
}

PimenovScalar operator-(const PimenovScalar& a) {
    PimenovScalar out;
    for (const auto& [s, c] : a.terms()) out.set_term(s, -c);
    return out;
}

PimenovScalar operator*(const PimenovScalar& a, const PimenovScalar& b) {
    PimenovScalar out;
    for (const auto& [sa, ca] : a.terms())
        for (const auto& [sb, cb] : b.terms()) {
            if (sa.overlaps(sb)) continue;  // iota_k^2 = 0
            DualSupport s = sa.united(sb);
            out.set_term(s, out.coeff(s) + ca * cb);
        }
    return out;
}

double PimenovScalar::norm() const {
    double m = 0.0;
    for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

std::string PimenovScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        for (int k : s.indices()) os << "*iota" << k;
    }
    return os.str();
}

PimenovScalar div(const PimenovScalar& a, const PimenovScalar& divisor) {
    if (!divisor.is_monomial() || divisor.is_zero())
        throw IndeterminateDivision("divisor must be a nonzero monomial, got " + divisor.to_string());
    const auto& [ds, dc] = *divisor.terms().begin();
    PimenovScalar out;
    for (const auto& [s, c] : a.terms()) {
        if (!s.contains(ds))
            throw IndeterminateDivision("term " + PimenovScalar::monomial(s, c).to_string() +
                                        " not divisible by " + divisor.to_string());
        out.set_term(s.minus(ds), c / dc);
    }
    return out;
}

PimenovScalar inverse(const PimenovScalar& a) {
    Complex a0 = a.real_part();
    if (a0 == Complex{}) throw IndeterminateDivision("inverse of non-invertible value " + a.to_string());
    // 1/(a0 + eta) = (1/a0) sum (-eta/a0)^m, finite since eta is nilpotent.
    PimenovScalar t = a.nilpotent_part() * PimenovScalar(Complex(1.0, 0.0) / a0);
    PimenovScalar acc = PimenovScalar::one();
    PimenovScalar pow = PimenovScalar::one();
    for (int m = 1; m <= 32; ++m) {
        pow = pow * (-t);
        if (pow.is_zero()) break;
        acc += pow;
    }
    return acc * PimenovScalar(Complex(1.0, 0.0) / a0);
}

PimenovScalar sqrt(const PimenovScalar& a) {
    Complex a0 = a.real_part();
    PimenovScalar eta = a.nilpotent_part();
    if (a0 == Complex{}) {
        if (eta.is_zero()) return PimenovScalar::zero();
        throw SqrtUndefined("sqrt of purely nilpotent value " + a.to_string());
    }
    Complex r0 = std::sqrt(a0);
    return PimenovScalar(r0) + eta * PimenovScalar(Complex(0.5, 0.0) / r0);
}

double distance(const PimenovScalar& a, const PimenovScalar& b) { return (a - b).norm(); }

SlotKind slot_kind_from_string(const std::string& s) {
    if (s == "1" || s == "unit") return SlotKind::unit;
    if (s == "iota" || s == "dual") return SlotKind::dual;
    if (s == "i" || s == "imaginary") return SlotKind::imaginary;
    throw std::invalid_argument("unknown parameter kind: " + s);
}

std::string to_string(SlotKind k) {
    switch (k) {
        case SlotKind::unit: return "1";
        case SlotKind::dual: return "iota";
        case SlotKind::imaginary: return "i";
    }
    return "?";
}

CkParameterVector::CkParameterVector(int n_, std::vector<SlotKind> slots_) : n(n_), slots(std::move(slots_)) {
    if (n < 1 || static_cast<int>(slots.size()) != n - 1)
        throw std::invalid_argument("parameter vector needs n-1 slots");
}

SlotKind CkParameterVector::slot(int k) const {
    if (k < 1 || k > n - 1) throw std::out_of_range("parameter slot " + std::to_string(k));
    return slots[k - 1];
}

PimenovScalar CkParameterVector::slot_value(int k) const {
    switch (slot(k)) {
        case SlotKind::unit: return PimenovScalar::one();
        case SlotKind::dual: return PimenovScalar::iota(k);
        case SlotKind::imaginary: return PimenovScalar::i();
    }
    return PimenovScalar::one();
}

bool CkParameterVector::all_unit() const {
    for (auto s : slots)
        if (s != SlotKind::unit) return false;
    return true;
}

bool CkParameterVector::has_dual() const {
    for (auto s : slots)
        if (s == SlotKind::dual) return true;
    return false;
}

ParameterProduct parameter_product(const CkParameterVector& j, int lo, int hi) {
    if (lo < 1 || hi > j.n - 1)
        if (lo <= hi) throw std::out_of_range("parameter product range out of bounds");
    ParameterProduct out;
    out.value = PimenovScalar::one();
    for (int l = lo; l <= hi; ++l) {
        out.value *= j.slot_value(l);
        out.factor_set.push_back(l);
    }
    return out;
}

ParameterProduct row_scale(const CkParameterVector& j, int row) {
    if (row < 1 || row > j.n) throw std::out_of_range("row out of range");
    return parameter_product(j, j.n - row + 1, j.n - 1);
}

}  // namespace ckgz
