#include "ckgz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ckgz/closed_forms.hpp"

namespace ckgz {

namespace {

// Trustworthy grade window for exact-channel comparisons: entries carry
// grades >= -1, so one truncation margin is kept at each end.
constexpr int kGradeLo = -kExpMax + 2;
constexpr int kGradeHi = kExpMax - 2;

template <typename M, typename V>
std::map<int, V> apply_col(const M& m, int col) {
    std::map<int, V> out;
    for (const auto& [row, v] : m.cols.at(col)) out[row] = v;
    return out;
}

template <typename M, typename V>
std::map<int, V> apply_state(const M& m, const std::map<int, V>& state, bool& loss) {
    std::map<int, V> out;
    for (const auto& [idx, c] : state) {
        if (m.boundary_loss.at(idx)) loss = true;
        for (const auto& [row, v] : m.cols.at(idx)) {
            auto it = out.find(row);
            if (it == out.end())
                out[row] = v * c;
            else
                it->second += v * c;
        }
    }
    return out;
}

struct PairDeviation {
    double dev = 0.0;
    int col = -1;
    bool skipped = false;
};

// One commutator column against the structure-constant right side:
// [A_kr, A_pq] = (J_kr J_rq / J_kq) d_pr A_kq - (J_kr J_rq / J_pr) d_kq A_pr.
// jquot(k1,r1,k2,r2,kd,rd) = J_{k1 r1} J_{k2 r2} / J_{kd rd}.
template <typename M, typename V, typename JFn, typename NormFn>
PairDeviation commutator_column(const std::map<std::pair<int, int>, M>& gens, int ak, int ar, int bk, int br,
                                int col, const JFn& jquot, const NormFn& norm) {
    const M& A = gens.at({ak, ar});
    const M& B = gens.at({bk, br});
    bool loss = false;
    auto bcol = apply_col<M, V>(B, col);
    if (B.boundary_loss.at(col)) loss = true;
    auto ab = apply_state<M, V>(A, bcol, loss);
    auto acol = apply_col<M, V>(A, col);
    if (A.boundary_loss.at(col)) loss = true;
    auto ba = apply_state<M, V>(B, acol, loss);
    if (loss) return {0.0, col, true};

    std::map<int, V> rhs;
    if (bk == ar) {  // delta_pr: + (J_kr J_rq / J_kq) A_kq
        V c = jquot(ak, ar, ar, br, ak, br);
        for (const auto& [row, v] : gens.at({ak, br}).cols.at(col)) {
            auto it = rhs.find(row);
            if (it == rhs.end())
                rhs[row] = v * c;
            else
                it->second += v * c;
        }
    }
    if (ak == br) {  // delta_kq: - (J_kr J_rq / J_pr) A_pr
        V c = jquot(ak, ar, ar, br, bk, ar);
        for (const auto& [row, v] : gens.at({bk, ar}).cols.at(col)) {
            auto it = rhs.find(row);
            if (it == rhs.end())
                rhs[row] = -(v * c);
            else
                it->second -= v * c;
        }
    }
    double dev = 0.0;
    auto visit = [&](int row) {
        V d = V(0.0);
        auto i1 = ab.find(row);
        if (i1 != ab.end()) d += i1->second;
        auto i2 = ba.find(row);
        if (i2 != ba.end()) d -= i2->second;
        auto i3 = rhs.find(row);
        if (i3 != rhs.end()) d -= i3->second;
        dev = std::max(dev, norm(d));
    };
    for (const auto& [row, v] : ab) visit(row);
    for (const auto& [row, v] : ba)
        if (!ab.count(row)) visit(row);
    for (const auto& [row, v] : rhs)
        if (!ab.count(row) && !ba.count(row)) visit(row);
    return {dev, col, false};
}

struct SweepItem {
    int ak, ar, bk, br, col;
};

template <typename M, typename V, typename JFn, typename NormFn>
CheckReport run_commutator_sweep(const std::map<std::pair<int, int>, M>& gens, const BasisWindow& window,
                                 const JFn& jquot, const NormFn& norm, double tol, SweepMode mode,
                                 const std::string& descriptor) {
    std::vector<std::pair<int, int>> names;
    for (const auto& [key, g] : gens) names.push_back(key);
    std::vector<int> interior;
    for (int c = 0; c < window.size(); ++c)
        if (window.interior(c)) interior.push_back(c);

    std::vector<SweepItem> items;
    items.reserve(names.size() * names.size() * interior.size());
    for (auto [ak, ar] : names)
        for (auto [bk, br] : names)
            for (int c : interior) items.push_back({ak, ar, bk, br, c});

    const long n = static_cast<long>(items.size());
    double best = -1.0;
    long best_idx = -1;
    long skipped = 0;

#pragma omp parallel if (mode == SweepMode::parallel)
    {
        double local_best = -1.0;
        long local_idx = -1;
        long local_skip = 0;
#pragma omp for schedule(static) nowait
        for (long i = 0; i < n; ++i) {
            const auto& it = items[i];
            auto r = commutator_column<M, V>(gens, it.ak, it.ar, it.bk, it.br, it.col, jquot, norm);
            if (r.skipped) {
                ++local_skip;
                continue;
            }
            if (r.dev > local_best || (r.dev == local_best && i < local_idx)) {
                local_best = r.dev;
                local_idx = i;
            }
        }
#pragma omp critical
        {
            skipped += local_skip;
            if (local_best > best || (local_best == best && local_idx < best_idx)) {
                best = local_best;
                best_idx = local_idx;
            }
        }
    }

    CheckReport rep;
    rep.name = "commutators";
    rep.case_descriptor = descriptor;
    rep.tolerance = tol;
    rep.max_deviation = std::max(best, 0.0);
    rep.boundary_excluded = static_cast<int>(skipped);
    rep.pass = rep.max_deviation <= tol;
    if (best_idx >= 0) {
        const auto& w = items[best_idx];
        std::ostringstream os;
        os << "[A" << w.ak << w.ar << ",A" << w.bk << w.br << "] at " << window.describe_entry(w.col);
        rep.worst = os.str();
    }
    std::ostringstream det;
    det << items.size() << " (pair, column) items, " << interior.size() << " interior columns";
    rep.detail = det.str();
    return rep;
}

PimenovScalar conj(const PimenovScalar& a) {
    PimenovScalar out;
    for (const auto& [s, c] : a.terms()) out.set_term(s, std::conj(c));
    return out;
}

}  // namespace

namespace {

// Parameter product over a generator index range, as an exact series.
LaurentSeries series_generator_parameter(const CkParameterVector& j, const std::vector<int>& dims_to_slots, int k,
                                         int r) {
    auto dim_of = [&](int slot) {
        for (int d = 0; d < static_cast<int>(dims_to_slots.size()); ++d)
            if (dims_to_slots[d] == slot) return d;
        throw std::logic_error("no series dimension for slot");
    };
    LaurentSeries out = LaurentSeries::one();
    for (int l = std::min(k, r) + 1; l <= std::max(k, r); ++l) {
        switch (j.slot(l)) {
            case SlotKind::unit: break;
            case SlotKind::imaginary: out = out * LaurentSeries(Complex(0.0, 1.0)); break;
            case SlotKind::dual: out = out * LaurentSeries::eps(dim_of(l)); break;
        }
    }
    return out;
}

CheckReport commutator_report(const GeneratorSet& g, double tol, SweepMode mode) {
    const auto& j = g.labels.params();
    if (g.exact) {
        const auto& dims = g.exact->dims_to_slots;
        auto jq = [&](int k1, int r1, int k2, int r2, int kd, int rd) {
            LaurentSeries num =
                series_generator_parameter(j, dims, k1, r1) * series_generator_parameter(j, dims, k2, r2);
            return mono_div(num, series_generator_parameter(j, dims, kd, rd));
        };
        auto rep = run_commutator_sweep<SeriesMatrix, LaurentSeries>(
            g.exact->gens, g.exact->window, jq,
            [](const LaurentSeries& d) { return d.norm_window(kGradeLo, kGradeHi); }, tol, mode,
            g.labels.describe());
        rep.detail += "; exact contraction-parameter channel";
        return rep;
    }
    auto jq = [&](int k1, int r1, int k2, int r2, int kd, int rd) {
        PimenovScalar num = generator_parameter(j, k1, r1) * generator_parameter(j, k2, r2);
        return div(num, generator_parameter(j, kd, rd));
    };
    return run_commutator_sweep<GeneratorMatrix, PimenovScalar>(
        g.gens, g.window, jq, [](const PimenovScalar& d) { return d.norm(); }, tol, mode, g.labels.describe());
}

}  // namespace

double commutator_sweep_kernel(const GeneratorSet& g, SweepMode mode) {
    return commutator_report(g, 0.0, mode).max_deviation;
}

CheckReport check_commutators(const GeneratorSet& g, double tol, SweepMode mode) {
    return commutator_report(g, tol, mode);
}

CheckReport check_hermiticity(const GeneratorSet& g, double tol, SweepMode mode) {
    (void)mode;
    CheckReport rep;
    rep.name = "hermiticity";
    rep.case_descriptor = g.labels.describe();
    rep.tolerance = tol;
    const int n = g.n();
    double worst = 0.0;
    std::string worst_where;
    for (int c = 0; c < g.window.size(); ++c) {
        if (!g.window.interior(c, 1)) continue;
        for (int a = 0; a < n; ++a) {
            double im = 0.0;
            for (const auto& [row, v] : g.at(a, a).cols[c])
                if (row == c) im = std::abs(v.real_part().imag());
            if (im > worst) {
                worst = im;
                worst_where = "diag A" + std::to_string(a) + std::to_string(a) + " at " + g.window.describe_entry(c);
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                if (!g.has(a, b) || !g.has(b, a)) continue;
                for (const auto& [row, v] : g.at(a, b).cols[c]) {
                    if (!g.window.interior(row, 1)) continue;
                    PimenovScalar mirror = g.at(b, a).entry(c, row);
                    double d = distance(v, conj(mirror));
                    if (d > worst) {
                        worst = d;
                        std::ostringstream os;
                        os << "A" << a << b << " vs A" << b << a << " at " << g.window.describe_entry(c);
                        worst_where = os.str();
                    }
                }
            }
    }
    rep.max_deviation = worst;
    rep.worst = worst_where;
    rep.pass = worst <= tol;
    return rep;
}

CheckReport check_casimir_diagonal(const GeneratorSet& g, const CasimirSpectrum& spectrum, double tol, int max_order) {
    CheckReport rep;
    rep.name = "casimir-diagonal";
    rep.case_descriptor = g.labels.describe();
    rep.tolerance = tol;
    double worst = 0.0;
    std::string worst_where;
    for (int q = 1; q <= max_order; ++q) {
        GeneratorMatrix cas = operator_casimir(g, q);
        Complex want = spectrum.values.at(q - 1).real_part();
        for (int c = 0; c < g.window.size(); ++c) {
            if (!g.window.interior(c)) continue;
            if (cas.boundary_loss[c]) continue;
            Complex diag{};
            double offdiag = 0.0;
            for (const auto& [row, v] : cas.cols[c]) {
                if (row == c)
                    diag = v.real_part();
                else
                    offdiag = std::max(offdiag, std::abs(v.real_part()));
            }
            double d = std::max(std::abs(diag - want), offdiag);
            if (d > worst) {
                worst = d;
                worst_where = "order " + std::to_string(q) + " at " + g.window.describe_entry(c);
            }
        }
    }
    rep.max_deviation = worst;
    rep.worst = worst_where;
    rep.pass = worst <= tol;
    return rep;
}

CheckReport check_nilradical(const GeneratorSet& g, double tol) {
    CheckReport rep;
    rep.name = "nilradical-commutators";
    rep.case_descriptor = g.labels.describe();
    rep.tolerance = tol;
    std::vector<std::pair<int, int>> nil;
    for (const auto& [key, role] : g.structure.roles)
        if (role == GeneratorRole::nilradical) nil.push_back(key);
    if (nil.empty()) {
        rep.detail = "no nilradical tags";
        rep.pass = true;
        return rep;
    }
    double worst = 0.0;
    std::string worst_where;
    auto run = [&](auto const& gens, auto const& window, auto real_norm) {
        for (auto [ak, ar] : nil)
            for (auto [bk, br] : nil)
                for (int c = 0; c < window.size(); ++c) {
                    if (!window.interior(c)) continue;
                    bool loss = false;
                    using M = std::decay_t<decltype(gens.at({0, 0}))>;
                    using V = std::decay_t<decltype(gens.at({0, 0}).cols[0][0].second)>;
                    auto bcol = apply_col<M, V>(gens.at({bk, br}), c);
                    if (gens.at({bk, br}).boundary_loss[c]) loss = true;
                    auto ab = apply_state<M, V>(gens.at({ak, ar}), bcol, loss);
                    auto acol = apply_col<M, V>(gens.at({ak, ar}), c);
                    if (gens.at({ak, ar}).boundary_loss[c]) loss = true;
                    auto ba = apply_state<M, V>(gens.at({bk, br}), acol, loss);
                    if (loss) continue;
                    for (const auto& [row, v] : ab) {
                        V d = v;
                        auto it = ba.find(row);
                        if (it != ba.end()) d -= it->second;
                        double dd = real_norm(d);
                        if (dd > worst) {
                            worst = dd;
                            std::ostringstream os;
                            os << "[A" << ak << ar << ",A" << bk << br << "] at " << window.describe_entry(c);
                            worst_where = os.str();
                        }
                    }
                    for (const auto& [row, v] : ba) {
                        if (ab.count(row)) continue;
                        double dd = real_norm(v);
                        if (dd > worst) {
                            worst = dd;
                            std::ostringstream os;
                            os << "[A" << ak << ar << ",A" << bk << br << "] at " << window.describe_entry(c);
                            worst_where = os.str();
                        }
                    }
                }
    };
    if (g.exact)
        run(g.exact->gens, g.exact->window, [](const LaurentSeries& v) { return std::abs(v.scalar_part()); });
    else
        run(g.gens, g.window, [](const PimenovScalar& v) { return std::abs(v.real_part()); });
    rep.max_deviation = worst;
    rep.worst = worst_where;
    rep.pass = worst <= tol;
    rep.detail = std::to_string(nil.size()) + " nilradical generators";
    return rep;
}

CheckReport check_contraction_limit(const CkLabelSet& labels, const std::vector<double>& eps_list,
                                    double ratio_slack) {
    CheckReport rep;
    rep.name = "contraction-limit";
    rep.case_descriptor = labels.describe();
    const int n = labels.n();

    // Deviation of the real-parameter evaluation from the dual-arithmetic
    // real part, at one epsilon.
    auto deviation_at = [&](double eps) -> double {
        double dev = 0.0;
        auto upd = [&](Complex have, Complex want) { dev = std::max(dev, std::abs(have - want)); };
        if (n == 2) {
            double k = labels.amp(2), zeta = labels.phase(2);
            PimenovScalar i1 = PimenovScalar::iota(1);
            for (int m = -5; m <= 5; ++m) {
                U2Closed<Complex> lim{Complex(k + eps * zeta / 2.0), Complex(-k + eps * zeta / 2.0),
                                      Complex(double(m)), Complex(eps)};
                U2Closed<PimenovScalar> dual{PimenovScalar(k) + i1 * PimenovScalar(zeta / 2.0),
                                             PimenovScalar(-k) + i1 * PimenovScalar(zeta / 2.0),
                                             PimenovScalar(double(m)), i1};
                upd(lim.lower(), dual.lower().real_part());
                upd(lim.raise(), dual.raise().real_part());
                upd(lim.diag_a00(), dual.diag_a00().real_part());
            }
            return dev;
        }
        if (n != 3) throw UnsupportedCase("contraction limit for ranks 2 and 3");
        bool d1 = labels.params().slot(1) == SlotKind::dual;
        bool d2 = labels.params().slot(2) == SlotKind::dual;
        double k = labels.amp(3), xi = labels.phase(3);
        int m23 = labels.discrete({2, 3}).value();
        Complex e1 = d1 ? Complex(eps) : Complex(1.0);
        Complex e2 = d2 ? Complex(eps) : Complex(1.0);
        PimenovScalar p1 = d1 ? PimenovScalar::iota(1) : PimenovScalar::one();
        PimenovScalar p2 = d2 ? PimenovScalar::iota(2) : PimenovScalar::one();

        auto compare_case = [&](Complex m13c, Complex m33c, Complex m12c, Complex m22c, Complex m11c,
                                const PimenovScalar& m13p, const PimenovScalar& m33p, const PimenovScalar& m12p,
                                const PimenovScalar& m22p, const PimenovScalar& m11p, bool row2_dual) {
            U3Closed<Complex> lim{m13c, Complex(double(m23)), m33c, m12c, m22c, m11c, e1, e2};
            U3Closed<PimenovScalar> dual{m13p, PimenovScalar(double(m23)), m33p, m12p, m22p, m11p, p1, p2};
            upd(lim.diag_a00(), dual.diag_a00().real_part());
            upd(lim.diag_a11(), dual.diag_a11().real_part());
            upd(lim.diag_a22(), dual.diag_a22().real_part());
            upd(lim.a12(), dual.a12().real_part());
            upd(lim.a21(), dual.a21().real_part());
            if (!row2_dual) {
                upd(lim.a01_first(), dual.a01_first().real_part());
                upd(lim.a01_second(), dual.a01_second().real_part());
                upd(lim.a10_first(), dual.a10_first().real_part());
                upd(lim.a10_second(), dual.a10_second().real_part());
            } else {
                // Collapsed slot shifts: only the summed mover coefficients
                // have a plain limit in the derivative-scheme basis.
                upd(lim.a02_first() + lim.a02_second(), (dual.a02_first() + dual.a02_second()).real_part());
                upd(lim.a20_first() + lim.a20_second(), (dual.a20_first() + dual.a20_second()).real_part());
            }
        };

        if (!d2) {  // contraction over the first parameter; integer middle row
            for (int m12 = m23; m12 <= m23 + 2; ++m12)
                for (int m22 = m23 - 2; m22 <= m23; ++m22)
                    for (int m11 = m22; m11 <= m12; ++m11)
                        compare_case(Complex(k) + e1 * Complex(xi / 2.0), Complex(-k) + e1 * Complex(xi / 2.0),
                                     Complex(double(m12)), Complex(double(m22)), Complex(double(m11)),
                                     PimenovScalar(k) + p1 * PimenovScalar(xi / 2.0),
                                     PimenovScalar(-k) + p1 * PimenovScalar(xi / 2.0),
                                     PimenovScalar(double(m12)), PimenovScalar(double(m22)),
                                     PimenovScalar(double(m11)), false);
            return dev;
        }
        double r = labels.amp(2), zeta = labels.phase(2);
        Complex J3c = e1 * e2;
        PimenovScalar J3p = p1 * p2;
        for (int m11 = -2; m11 <= 2; ++m11)
            compare_case(Complex(k) + J3c * Complex(xi / 2.0), Complex(-k) + J3c * Complex(xi / 2.0),
                         Complex(r) + e2 * Complex(zeta / 2.0), Complex(-r) + e2 * Complex(zeta / 2.0),
                         Complex(double(m11)), PimenovScalar(k) + J3p * PimenovScalar(xi / 2.0),
                         PimenovScalar(-k) + J3p * PimenovScalar(xi / 2.0),
                         PimenovScalar(r) + p2 * PimenovScalar(zeta / 2.0),
                         PimenovScalar(-r) + p2 * PimenovScalar(zeta / 2.0), PimenovScalar(double(m11)), true);
        return dev;
    };

    std::vector<double> eps = eps_list;
    std::sort(eps.begin(), eps.end(), std::greater<double>());
    std::vector<double> devs;
    for (double e : eps) devs.push_back(deviation_at(e));

    bool pass = true;
    double worst_slope = 1.0;
    std::ostringstream det;
    for (size_t i = 0; i + 1 < eps.size(); ++i) {
        if (devs[i + 1] < 1e-11) continue;  // below float noise: converged
        double slope = std::log(devs[i] / devs[i + 1]) / std::log(eps[i] / eps[i + 1]);
        if (std::abs(slope - 1.0) > std::abs(worst_slope - 1.0)) worst_slope = slope;
        if (devs[i + 1] > ratio_slack * devs[i] * (eps[i + 1] / eps[i])) pass = false;
    }
    det << "devs:";
    for (size_t i = 0; i < eps.size(); ++i) det << " " << eps[i] << "->" << devs[i];
    det << " slope~" << worst_slope;
    rep.detail = det.str();
    rep.tolerance = ratio_slack;
    rep.max_deviation = devs.empty() ? 0.0 : devs.back();
    rep.pass = pass;
    return rep;
}

namespace {

struct RandomScheme {
    // component values plus parameter values for both routes
    std::map<std::string, PimenovScalar> comp;
    std::vector<PimenovScalar> jv;  // slot values
};

PimenovScalar scheme_component(const RandomScheme& s, Pos p) { return s.comp.at(pos_name(p)); }

RandomScheme draw_scheme(int n, const std::vector<SlotKind>& kinds, std::mt19937_64& rng) {
    RandomScheme out;
    CkParameterVector j(n, kinds);
    for (int l = 1; l <= n - 1; ++l) out.jv.push_back(j.slot_value(l));
    std::uniform_int_distribution<int> di(-4, 4);
    std::uniform_real_distribution<double> dr(0.5, 3.0);
    std::uniform_real_distribution<double> dphase(-2.0, 2.0);

    for (int row = n; row >= 1; --row) {
        PimenovScalar scale = row_scale(j, row).value;
        bool nilpotent = false;
        for (int l : row_scale(j, row).factor_set)
            if (j.slot(l) == SlotKind::dual) nilpotent = true;
        if (row == 1) {
            out.comp["m11"] = PimenovScalar(double(di(rng)));
            continue;
        }
        if (nilpotent) {
            double amp = dr(rng) + row;  // keep outer magnitudes separated across rows
            double phase = dphase(rng);
            out.comp[pos_name({1, row})] = PimenovScalar(amp) + scale * PimenovScalar(phase / 2.0);
            out.comp[pos_name({row, row})] = PimenovScalar(-amp) + scale * PimenovScalar(phase / 2.0);
        } else {
            int hi = di(rng) + 5, lo = di(rng) - 5;
            out.comp[pos_name({1, row})] = scale * PimenovScalar(double(hi));
            out.comp[pos_name({row, row})] = scale * PimenovScalar(double(lo));
        }
        for (int p = 2; p <= row - 1; ++p) out.comp[pos_name({p, row})] = PimenovScalar(double(di(rng)));
    }
    return out;
}

}  // namespace

CheckReport check_specialization(int n, std::uint64_t seed, int draws, double tol) {
    CheckReport rep;
    rep.name = "specialization";
    rep.tolerance = tol;
    rep.seed = seed;
    rep.case_descriptor = "rank " + std::to_string(n) + " formula comparison";
    if (n != 2 && n != 3) throw UnsupportedCase("specialization check covers ranks 2 and 3");

    std::mt19937_64 rng(seed);
    double worst = 0.0;
    std::string worst_where;
    auto upd = [&](double d, const std::string& where) {
        if (d > worst) {
            worst = d;
            worst_where = where;
        }
    };

    std::vector<SlotKind> kinds = {SlotKind::unit, SlotKind::dual, SlotKind::imaginary};
    int combos = n == 2 ? 3 : 9;
    for (int combo = 0; combo < combos; ++combo) {
        std::vector<SlotKind> slot_kinds;
        if (n == 2) {
            slot_kinds = {kinds[combo]};
        } else {
            slot_kinds = {kinds[combo / 3], kinds[combo % 3]};
        }
        for (int d = 0; d < draws; ++d) {
            RandomScheme s = draw_scheme(n, slot_kinds, rng);
            auto jval = [&](int l) { return s.jv.at(l - 1); };
            auto comp = [&](Pos p) { return scheme_component(s, p); };
            GzCoeffs<PimenovScalar> cf{n, jval, comp};
            std::string tag = "combo " + std::to_string(combo) + " draw " + std::to_string(d);
            if (n == 2) {
                U2Closed<PimenovScalar> cl{comp({1, 2}), comp({2, 2}), comp({1, 1}), jval(1)};
                upd(distance(cf.diag(2), cl.diag_a00()), tag + " diag0");
                upd(distance(cf.diag(1), cl.diag_a11()), tag + " diag1");
                upd(distance(cf.lower_outer(1, true), cl.lower()), tag + " lower");
                upd(distance(cf.raise_outer(1, true), cl.raise()), tag + " raise");
            } else {
                U3Closed<PimenovScalar> cl{comp({1, 3}), comp({2, 3}), comp({3, 3}), comp({1, 2}),
                                           comp({2, 2}), comp({1, 1}), jval(1),     jval(2)};
                upd(distance(cf.diag(3), cl.diag_a00()), tag + " diag0");
                upd(distance(cf.diag(2), cl.diag_a11()), tag + " diag1");
                upd(distance(cf.diag(1), cl.diag_a22()), tag + " diag2");
                upd(distance(cf.lower_outer(1, true), cl.a12()), tag + " a12");
                upd(distance(cf.raise_outer(1, true), cl.a21()), tag + " a21");
                upd(distance(cf.lower_outer(2, true), cl.a01_first()), tag + " a01/first");
                upd(distance(cf.lower_outer(2, false), cl.a01_second()), tag + " a01/second");
                upd(distance(cf.raise_outer(2, true), cl.a10_first()), tag + " a10/first");
                upd(distance(cf.raise_outer(2, false), cl.a10_second()), tag + " a10/second");
            }
        }
    }
    rep.max_deviation = worst;
    rep.worst = worst_where;
    rep.pass = worst <= tol;
    rep.detail = std::to_string(combos) + " parameter combinations, " + std::to_string(draws) + " draws each";
    return rep;
}

GeneratorSet with_perturbed_entry(const GeneratorSet& g, int k, int r, int col, int row, double delta) {
    GeneratorSet out = g;
    auto& mat = out.gens.at({k, r});
    mat.add(col, row, PimenovScalar(delta));
    if (out.exact) {
        auto exact = std::make_shared<ExactChannel>(*out.exact);
        // perturb the matching lattice entry when the windows coincide
        if (exact->gens.count({k, r}) && col < static_cast<int>(exact->gens[{k, r}].cols.size()))
            exact->gens[{k, r}].add(col, row, LaurentSeries(delta));
        out.exact = exact;
    }
    return out;
}

}  // namespace ckgz
