#include "ckgz/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ckgz {

HighestWeight::HighestWeight(std::vector<int> m) : m_top(std::move(m)) {
    if (m_top.empty()) throw std::invalid_argument("empty highest weight");
    for (size_t i = 1; i < m_top.size(); ++i)
        if (m_top[i - 1] < m_top[i]) throw ValidationError("highest weight not weakly decreasing");
}

ClassicalPattern::ClassicalPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t k = 0; k < rows_.size(); ++k)
        if (rows_[k].size() != k + 1) throw std::invalid_argument("row " + std::to_string(k + 1) + " has wrong length");
}

int ClassicalPattern::m(int p, int k) const {
    if (k < 1 || k > n() || p < 1 || p > k) throw std::out_of_range("pattern position");
    return rows_[k - 1][p - 1];
}

bool ClassicalPattern::satisfies_betweenness() const {
    for (int k = 2; k <= n(); ++k)
        for (int p = 1; p <= k - 1; ++p)
            if (!(m(p, k) >= m(p, k - 1) && m(p, k - 1) >= m(p + 1, k))) return false;
    return true;
}

bool ClassicalPattern::operator<(const ClassicalPattern& o) const {
    for (int k = n() - 1; k >= 1; --k)
        if (rows_[k - 1] != o.rows_[k - 1]) return rows_[k - 1] < o.rows_[k - 1];
    return false;
}

std::string ClassicalPattern::to_string() const {
    std::ostringstream os;
    for (int k = n(); k >= 1; --k) {
        for (int p = 1; p <= k; ++p) os << m(p, k) << (p == k ? "" : " ");
        if (k > 1) os << " / ";
    }
    return os.str();
}

std::vector<ClassicalPattern> enumerate_classical(const HighestWeight& hw) {
    const int n = hw.n();
    std::vector<std::vector<int>> rows(n);
    rows[n - 1] = hw.m_top;
    std::vector<ClassicalPattern> out;

    // Fill rows from k = n-1 down to 1; within a row, positions left to right.
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 0) {
            out.emplace_back(rows);
            return;
        }
        rows[k - 1].assign(k, 0);
        auto fill = [&](auto&& fself, int p) -> void {
            if (p > k) {
                self(self, k - 1);
                return;
            }
            int lo = rows[k][p];      // m(p+1, k+1)
            int hi = rows[k][p - 1];  // m(p, k+1)
            for (int v = lo; v <= hi; ++v) {
                rows[k - 1][p - 1] = v;
                fself(fself, p + 1);
            }
        };
        fill(fill, 1);
    };
    rec(rec, n - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(SeriesTag t) {
    switch (t) {
        case SeriesTag::classical: return "classical";
        case SeriesTag::contracted: return "contracted";
        case SeriesTag::continuous_series: return "continuous";
        case SeriesTag::additional_continuous: return "additional_continuous";
        case SeriesTag::discrete_upper: return "discrete_upper";
        case SeriesTag::discrete_lower: return "discrete_lower";
        case SeriesTag::continued_general: return "continued_general";
    }
    return "?";
}

SeriesTag series_tag_from_string(const std::string& s) {
    for (SeriesTag t : {SeriesTag::classical, SeriesTag::contracted, SeriesTag::continuous_series,
                        SeriesTag::additional_continuous, SeriesTag::discrete_upper, SeriesTag::discrete_lower,
                        SeriesTag::continued_general})
        if (to_string(t) == s) return t;
    throw std::invalid_argument("unknown series tag: " + s);
}

std::string pos_name(Pos pos) { return "m" + std::to_string(pos.p) + std::to_string(pos.k); }

CkLabelSet::CkLabelSet(CkParameterVector j, SeriesTag tag) : j_(std::move(j)), tag_(tag) {}

RowKind CkLabelSet::row_kind(int row) const {
    if (row == 1) return RowKind::integer;
    auto scale = row_scale(j_, row);
    bool dual = false, imag = false;
    for (int slot : scale.factor_set) {
        if (j_.slot(slot) == SlotKind::dual) dual = true;
        if (j_.slot(slot) == SlotKind::imaginary) imag = true;
    }
    if (dual) return RowKind::dual;
    if (imag) {
        if (tag_ == SeriesTag::discrete_upper || tag_ == SeriesTag::discrete_lower) return RowKind::imag_discrete;
        return RowKind::imag_continuous;
    }
    return RowKind::integer;
}

void CkLabelSet::set_discrete(Pos pos, int value) { discrete_[pos] = value; }

std::optional<int> CkLabelSet::discrete(Pos pos) const {
    auto it = discrete_.find(pos);
    if (it == discrete_.end()) return std::nullopt;
    return it->second;
}

void CkLabelSet::set_continuous(const std::string& name, double value) { continuous_[name] = value; }

std::optional<double> CkLabelSet::continuous(const std::string& name) const {
    auto it = continuous_.find(name);
    if (it == continuous_.end()) return std::nullopt;
    return it->second;
}

std::pair<std::string, std::string> CkLabelSet::dual_label_names(int row) const {
    if (row == n()) return {"k", n() == 2 ? "zeta" : "xi"};
    if (n() == 3 && row == 2) return {"r", "zeta"};
    return {"k" + std::to_string(row), "zeta" + std::to_string(row)};
}

double CkLabelSet::amp(int row) const {
    auto [ka, pz] = dual_label_names(row);
    auto v = continuous(ka);
    if (!v) throw ValidationError("missing continuous label " + ka);
    return *v;
}

double CkLabelSet::phase(int row) const {
    auto [ka, pz] = dual_label_names(row);
    auto v = continuous(pz);
    if (!v) throw ValidationError("missing continuous label " + pz);
    return *v;
}

PimenovScalar CkLabelSet::component(Pos pos) const { return component_with_offset(pos, 0); }

PimenovScalar CkLabelSet::component_with_offset(Pos pos, int offset) const {
    const int row = pos.k;
    const bool outer_first = pos.p == 1, outer_last = pos.p == row;
    if (row > 1 && (outer_first || outer_last)) {
        switch (row_kind(row)) {
            case RowKind::dual: {
                PimenovScalar scale = row_scale(j_, row).value;
                double sign = outer_first ? 1.0 : -1.0;
                return PimenovScalar(sign * amp(row)) +
                       scale * PimenovScalar(phase(row) / 2.0 + static_cast<double>(offset));
            }
            case RowKind::imag_continuous: {
                double a = continuous("a").value_or(0.0);
                double b = continuous("b").value_or(0.0);
                double z = continuous("zeta").value_or(0.0);
                if (outer_first) return PimenovScalar(Complex(a, b + z / 2.0));
                return PimenovScalar(Complex(-a, -(b - z / 2.0)));
            }
            case RowKind::imag_discrete: {
                auto v = discrete(pos);
                if (!v) throw ValidationError("missing discrete component " + pos_name(pos));
                return PimenovScalar(Complex(0.0, static_cast<double>(*v)));
            }
            case RowKind::integer: break;
        }
    }
    auto v = discrete(pos);
    if (!v) throw ValidationError("missing discrete component " + pos_name(pos));
    return PimenovScalar(static_cast<double>(*v));
}

std::string CkLabelSet::describe() const {
    std::ostringstream os;
    os << "u(" << n() << ";";
    for (int k = 1; k <= n() - 1; ++k) os << to_string(j_.slot(k)) << (k == n() - 1 ? "" : ",");
    os << ") " << to_string(tag_);
    for (const auto& [pos, v] : discrete_) os << " " << pos_name(pos) << "=" << v;
    for (const auto& [name, v] : continuous_) os << " " << name << "=" << v;
    return os.str();
}

CkLabelSet transform_components(const ClassicalPattern& p, const CkParameterVector& j) {
    if (p.n() != j.n) throw std::invalid_argument("pattern rank differs from parameter rank");
    CkLabelSet out(j, j.all_unit() ? SeriesTag::classical : SeriesTag::contracted);
    for (int k = 1; k <= p.n(); ++k) {
        RowKind kind = out.row_kind(k);
        for (int q = 1; q <= k; ++q) {
            bool outer = k > 1 && (q == 1 || q == k);
            if (!outer || kind == RowKind::integer) {
                out.set_discrete({q, k}, p.m(q, k));
            }
        }
        if (kind == RowKind::dual) {
            auto [ka, pz] = out.dual_label_names(k);
            out.set_continuous(ka, 0.0);
            out.set_continuous(pz, 0.0);
        } else if (kind == RowKind::imag_continuous) {
            out.set_continuous("a", 0.0);
            out.set_continuous("b", 0.0);
            out.set_continuous("zeta", 0.0);
        }
    }
    return out;
}

CkLabelSet classical_labels(const HighestWeight& hw) {
    const int n = hw.n();
    CkParameterVector j(n, std::vector<SlotKind>(n - 1, SlotKind::unit));
    CkLabelSet out(j, SeriesTag::classical);
    for (int p = 1; p <= n; ++p) out.set_discrete({p, n}, hw.m_top[p - 1]);
    return out;
}

std::vector<SchemeInequality> scheme_inequalities(const CkLabelSet& labels) {
    std::vector<SchemeInequality> out;
    const int n = labels.n();
    const auto& j = labels.params();
    auto slots_of_row = [&](int row) { return row_scale(j, row).factor_set; };

    for (int k = 2; k <= n; ++k) {
        auto Jk = slots_of_row(k), Jk1 = slots_of_row(k - 1);
        // Interior-to-interior betweenness.
        for (int p = 2; p <= k - 2; ++p) {
            out.push_back({{{p, k}, {}}, {{p, k - 1}, {}}});
            out.push_back({{{p, k - 1}, {}}, {{p + 1, k}, {}}});
        }
        // Outer chains.
        out.push_back({{{1, k}, Jk}, {{1, k - 1}, Jk1}});
        if (k >= 3) {
            out.push_back({{{1, k - 1}, Jk1}, {{2, k}, {}}});
            out.push_back({{{k - 1, k}, {}}, {{k - 1, k - 1}, Jk1}});
        }
        out.push_back({{{k - 1, k - 1}, Jk1}, {{k, k}, Jk}});
    }
    for (int s = 2; s <= n - 2; ++s) out.push_back({{{s, n}, {}}, {{s + 1, n}, {}}});
    if (n >= 3) {
        out.push_back({{{1, n}, slots_of_row(n)}, {{2, n}, {}}});
        out.push_back({{{n - 1, n}, {}}, {{n, n}, slots_of_row(n)}});
    } else {
        out.push_back({{{1, 2}, slots_of_row(2)}, {{2, 2}, slots_of_row(2)}});
    }
    return out;
}

bool inequality_active(const CkLabelSet& labels, const SchemeInequality& iq) {
    std::vector<int> l = iq.lhs.slots, r = iq.rhs.slots;
    for (auto it = l.begin(); it != l.end();) {
        auto jt = std::find(r.begin(), r.end(), *it);
        if (jt != r.end()) {
            r.erase(jt);
            it = l.erase(it);
        } else {
            ++it;
        }
    }
    auto non_unit = [&](const std::vector<int>& slots) {
        for (int s : slots)
            if (labels.params().slot(s) != SlotKind::unit) return true;
        return false;
    };
    if (non_unit(l) || non_unit(r)) return false;
    auto continued = [&](Pos pos) {
        auto k = labels.row_kind(pos.k);
        return k == RowKind::imag_continuous || k == RowKind::imag_discrete;
    };
    if (continued(iq.lhs.pos) || continued(iq.rhs.pos)) return false;
    return true;
}

std::vector<Violation> validate(const CkLabelSet& labels) {
    std::vector<Violation> out;
    const int n = labels.n();

    // k >= 0 for every dual row.
    for (int row = 2; row <= n; ++row) {
        if (labels.row_kind(row) == RowKind::dual) {
            double k = labels.amp(row);
            if (k < 0.0) out.push_back({labels.dual_label_names(row).first + " >= 0", "got " + std::to_string(k)});
        }
    }
    if (labels.tag() == SeriesTag::continuous_series) {
        if (labels.continuous("a").value_or(0.0) == 0.0) out.push_back({"a != 0", "continuous series needs a != 0"});
    }
    if (labels.tag() == SeriesTag::discrete_upper || labels.tag() == SeriesTag::discrete_lower) {
        auto mt12 = labels.discrete({1, 2}), mt22 = labels.discrete({2, 2}), m11 = labels.discrete({1, 1});
        if (mt12 && mt22 && m11) {
            if (labels.tag() == SeriesTag::discrete_upper && !(*m11 >= *mt12 + 1))
                out.push_back({"m11 >= mt12+1", "discrete series bound"});
            if (labels.tag() == SeriesTag::discrete_lower && !(*m11 <= *mt22 - 1))
                out.push_back({"m11 <= mt22-1", "discrete series bound"});
        }
    }

    for (const auto& iq : scheme_inequalities(labels)) {
        if (!inequality_active(labels, iq)) continue;
        PimenovScalar lval, rval;
        try {
            lval = labels.component(iq.lhs.pos);
            rval = labels.component(iq.rhs.pos);
        } catch (const ValidationError&) {
            continue;  // free basis label on one side: nothing to check yet
        }
        double lre = lval.real_part().real(), rre = rval.real_part().real();
        if (lre < rre - 1e-9) {
            std::ostringstream os;
            os << pos_name(iq.lhs.pos) << " >= " << pos_name(iq.rhs.pos);
            std::ostringstream det;
            det << "real parts " << lre << " < " << rre;
            out.push_back({os.str(), det.str()});
        }
    }
    return out;
}

CkLabelSet make_continued_labels(SeriesTag series, const ContinuedParams& p) {
    CkParameterVector j(2, {SlotKind::imaginary});
    CkLabelSet out(j, series);
    switch (series) {
        case SeriesTag::continuous_series:
            if (p.a == 0.0) throw InvalidSeriesParameters("continuous series needs a != 0");
            out.set_continuous("a", p.a);
            out.set_continuous("b", -0.5);
            out.set_continuous("zeta", p.zeta);
            out.set_continuous("sigma_re", p.zeta / 2.0);
            out.set_continuous("sigma_im", -p.a);
            break;
        case SeriesTag::additional_continuous:
            if (!(p.b > -1.0 && p.b < 0.0))
                throw InvalidSeriesParameters("additional continuous series needs -1 < b < 0");
            out.set_continuous("a", 0.0);
            out.set_continuous("b", p.b);
            out.set_continuous("zeta", p.zeta);
            break;
        case SeriesTag::discrete_upper:
            if (p.m11 && !(*p.m11 >= p.mt12 + 1))
                throw InvalidSeriesParameters("upper discrete series needs m11 >= mt12+1");
            out.set_discrete({1, 2}, p.mt12);
            out.set_discrete({2, 2}, p.mt22);
            if (p.m11) out.set_discrete({1, 1}, *p.m11);
            break;
        case SeriesTag::discrete_lower:
            if (p.m11 && !(*p.m11 <= p.mt22 - 1))
                throw InvalidSeriesParameters("lower discrete series needs m11 <= mt22-1");
            out.set_discrete({1, 2}, p.mt12);
            out.set_discrete({2, 2}, p.mt22);
            if (p.m11) out.set_discrete({1, 1}, *p.m11);
            break;
        case SeriesTag::continued_general:
            out.set_continuous("a", p.a);
            out.set_continuous("b", p.b);
            out.set_continuous("zeta", p.zeta);
            break;
        default:
            throw InvalidSeriesParameters("not an analytic-continuation series: " + to_string(series));
    }
    return out;
}

TransitionVariantCount count_transition_variants(int n) {
    if (n < 2) throw std::invalid_argument("rank must be >= 2");
    TransitionVariantCount out;
    out.per_row = n * (n - 1) / 2;
    for (int k = 2; k <= n; ++k) out.total += k * (k - 1) / 2;
    return out;
}

}  // namespace ckgz
