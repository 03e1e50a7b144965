#include "ckgz/series.hpp"

#include <cmath>
#include <sstream>

namespace ckgz {

namespace {

bool key_in_window(const ExpKey& k) {
    for (int d = 0; d < kMaxSeriesSlots; ++d) {
        int e = k.get(d);
        if (e < kExpMin || e > kExpMax) return false;
    }
    return true;
}

}  // namespace

LaurentSeries LaurentSeries::eps(int dim, int power) {
    if (dim < 0 || dim >= kMaxSeriesSlots) throw std::out_of_range("series dimension");
    LaurentSeries out;
    ExpKey k = ExpKey::zero();
    k.set(dim, power);
    out.set(k, Complex(1.0, 0.0));
    return out;
}

Complex LaurentSeries::coeff(const ExpKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Complex{} : it->second;
}

void LaurentSeries::set(const ExpKey& k, Complex c) {
    if (c == Complex{})
        terms_.erase(k);
    else
        terms_[k] = c;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    for (const auto& [k, c] : o.terms_) set(k, coeff(k) + c);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    for (const auto& [k, c] : o.terms_) set(k, coeff(k) - c);
    return *this;
}

LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries out;
    for (const auto& [k, c] : a.terms()) out.set(k, -c);
    return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            ExpKey k;
            bool ok = true;
            for (int d = 0; d < kMaxSeriesSlots; ++d) {
                int e = ka.get(d) + kb.get(d);
                if (e < kExpMin || e > kExpMax) {
                    ok = false;
                    break;
                }
                k.set(d, e);
            }
            if (!ok) continue;  // truncated outside the tracked window
            out.set(k, out.coeff(k) + ca * cb);
        }
    return out;
}

LaurentSeries LaurentSeries::shifted(int dim, int delta) const {
    LaurentSeries out;
    for (const auto& [k, c] : terms_) {
        ExpKey k2 = k;
        k2.set(dim, k.get(dim) + delta);
        if (!key_in_window(k2)) continue;
        out.set(k2, c);
    }
    return out;
}

bool LaurentSeries::laurent_free() const {
    for (const auto& [k, c] : terms_)
        for (int d = 0; d < kMaxSeriesSlots; ++d)
            if (k.get(d) < 0) return false;
    return true;
}

double LaurentSeries::norm() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

double LaurentSeries::norm_window(int glo, int ghi) const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) {
        bool in = true;
        for (int d = 0; d < kMaxSeriesSlots; ++d) {
            int e = k.get(d);
            if (e < glo || e > ghi) {
                in = false;
                break;
            }
        }
        if (in) m = std::max(m, std::abs(c));
    }
    return m;
}

std::string LaurentSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        for (int d = 0; d < kMaxSeriesSlots; ++d)
            if (k.get(d) != 0) os << "*e" << d << "^" << k.get(d);
    }
    return os.str();
}

LaurentSeries mono_div(const LaurentSeries& a, const LaurentSeries& mono) {
    if (mono.terms().size() != 1) throw IndeterminateDivision("series divisor must be a monomial");
    const auto& [key, c] = *mono.terms().begin();
    LaurentSeries out = a;
    for (int d = 0; d < kMaxSeriesSlots; ++d) {
        int e = key.get(d);
        if (e != 0) out = out.shifted(d, -e);
    }
    return out * LaurentSeries(Complex(1.0, 0.0) / c);
}

LaurentSeries inverse(const LaurentSeries& a) {
    Complex a0 = a.scalar_part();
    if (a0 == Complex{} || !a.laurent_free())
        throw IndeterminateDivision("series inverse needs invertible scalar part: " + a.to_string());
    LaurentSeries t = (a - LaurentSeries(a0)) * LaurentSeries(Complex(1.0, 0.0) / a0);
    LaurentSeries acc = LaurentSeries::one();
    LaurentSeries pow = LaurentSeries::one();
    for (int m = 1; m <= kExpMax * kMaxSeriesSlots + 1; ++m) {
        pow = pow * (-t);
        if (pow.is_zero()) break;
        acc += pow;
    }
    return acc * LaurentSeries(Complex(1.0, 0.0) / a0);
}

LaurentSeries sqrt(const LaurentSeries& a) {
    Complex a0 = a.scalar_part();
    if (a0 == Complex{}) {
        if (a.is_zero()) return LaurentSeries::zero();
        throw SqrtUndefined("sqrt of series with zero scalar part: " + a.to_string());
    }
    if (!a.laurent_free()) throw SqrtUndefined("sqrt of series with negative exponents");
    Complex r0 = std::sqrt(a0);
    LaurentSeries t = (a - LaurentSeries(a0)) * LaurentSeries(Complex(1.0, 0.0) / a0);
    // sqrt(a0) * sum binom(1/2, m) t^m
    LaurentSeries acc = LaurentSeries::one();
    LaurentSeries pow = LaurentSeries::one();
    double binom = 1.0;
    for (int m = 1; m <= kExpMax * kMaxSeriesSlots + 1; ++m) {
        binom *= (0.5 - (m - 1)) / m;
        pow = pow * t;
        if (pow.is_zero()) break;
        acc += pow * LaurentSeries(binom);
    }
    return acc * LaurentSeries(r0);
}

double distance(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).norm(); }

PimenovScalar to_pimenov(const LaurentSeries& a, const std::vector<int>& dims_to_slots) {
    PimenovScalar out;
    for (const auto& [k, c] : a.terms()) {
        DualSupport s;
        bool keep = true;
        for (int d = 0; d < kMaxSeriesSlots; ++d) {
            int e = k.get(d);
            if (e == 0) continue;
            if (e < 0)
                throw IndeterminateDivision("negative parameter grade in dual projection: " + a.to_string());
            if (e > 1 || d >= static_cast<int>(dims_to_slots.size())) {
                keep = false;  // nilpotent truncation
                break;
            }
            s = s.united(DualSupport::unit(dims_to_slots[d]));
        }
        if (keep) out.set_term(s, out.coeff(s) + c);
    }
    return out;
}

LaurentSeries from_pimenov(const PimenovScalar& a, const std::vector<int>& dims_to_slots) {
    LaurentSeries out;
    for (const auto& [s, c] : a.terms()) {
        ExpKey k = ExpKey::zero();
        for (int slot : s.indices()) {
            int dim = -1;
            for (int d = 0; d < static_cast<int>(dims_to_slots.size()); ++d)
                if (dims_to_slots[d] == slot) dim = d;
            if (dim < 0) throw std::invalid_argument("support slot has no series dimension");
            k.set(dim, 1);
        }
        out.set(k, out.coeff(k) + c);
    }
    return out;
}

}  // namespace ckgz
