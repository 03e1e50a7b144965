#include <algorithm>
#include <cmath>

#include "ckgz/build.hpp"
#include "ckgz/coeffs.hpp"
#include "ckgz/jet.hpp"

namespace ckgz {

namespace {

// ---------------------------------------------------------------------
// Window enumeration for integer basis labels (rows below the top).
// ---------------------------------------------------------------------

struct EnumeratedWindow {
    std::vector<Axis> axes;
    std::vector<std::vector<int>> entries;
};

std::vector<Pos> basis_positions(int n) {
    std::vector<Pos> out;
    for (int k = n - 1; k >= 1; --k)
        for (int p = 1; p <= k; ++p) out.push_back({p, k});
    return out;
}

// Extra natural bounds implied by the series tag (discrete series ladders).
void tag_bounds(const CkLabelSet& labels, Pos pos, std::optional<int>& lo, std::optional<int>& hi) {
    if (pos.p != 1 || pos.k != 1) return;
    if (labels.tag() == SeriesTag::discrete_upper) {
        auto mt12 = labels.discrete({1, 2});
        if (mt12) lo = std::max(lo.value_or(*mt12 + 1), *mt12 + 1);
    }
    if (labels.tag() == SeriesTag::discrete_lower) {
        auto mt22 = labels.discrete({2, 2});
        if (mt22) hi = std::min(hi.value_or(*mt22 - 1), *mt22 - 1);
    }
}

EnumeratedWindow enumerate_window(const CkLabelSet& labels0, const GenericOptions& opt) {
    const int n = labels0.n();
    auto positions = basis_positions(n);
    auto ineqs = scheme_inequalities(labels0);

    // Box fallback scaled to the fixed label magnitudes.
    double anchor = 0.0;
    for (const auto& [pos, v] : labels0.discrete_map()) anchor = std::max(anchor, std::fabs(double(v)));
    for (const auto& [name, v] : labels0.continuous_map()) anchor = std::max(anchor, std::fabs(v));
    const int box = opt.window_halfwidth + static_cast<int>(std::ceil(anchor));
    const int box_lo = opt.explicit_box ? opt.explicit_box->first : -box;
    const int box_hi = opt.explicit_box ? opt.explicit_box->second : box;

    std::vector<Axis> axes;
    for (const auto& pos : positions)
        axes.push_back({pos_name(pos), AxisKind::discrete, 0, 0, true, true, pos, 0, true});

    std::vector<std::vector<int>> entries;
    std::vector<bool> lo_box(positions.size(), false), hi_box(positions.size(), false);

    CkLabelSet work = labels0;
    std::vector<int> current(positions.size());

    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == positions.size()) {
            entries.push_back(current);
            return;
        }
        Pos pos = positions[i];
        std::optional<int> lo, hi;
        for (const auto& iq : ineqs) {
            if (!inequality_active(work, iq)) continue;
            if (iq.lhs.pos == pos && !(iq.rhs.pos == pos)) {
                try {
                    double v = work.component(iq.rhs.pos).real_part().real();
                    int b = static_cast<int>(std::ceil(v - 1e-9));
                    lo = std::max(lo.value_or(b), b);
                } catch (const ValidationError&) {
                }
            } else if (iq.rhs.pos == pos && !(iq.lhs.pos == pos)) {
                try {
                    double v = work.component(iq.lhs.pos).real_part().real();
                    int b = static_cast<int>(std::floor(v + 1e-9));
                    hi = std::min(hi.value_or(b), b);
                } catch (const ValidationError&) {
                }
            }
        }
        tag_bounds(work, pos, lo, hi);
        bool lo_from_box = !lo.has_value(), hi_from_box = !hi.has_value();
        int lo_v = lo.value_or(box_lo), hi_v = hi.value_or(box_hi);
        if (!hi_from_box && hi_v > box_hi) {
            hi_v = box_hi;
            hi_from_box = true;
        }
        if (!lo_from_box && lo_v < box_lo) {
            lo_v = box_lo;
            lo_from_box = true;
        }
        for (int v = lo_v; v <= hi_v; ++v) {
            if (v == lo_v && lo_from_box) lo_box[i] = true;
            if (v == hi_v && hi_from_box) hi_box[i] = true;
            current[i] = v;
            work.set_discrete(pos, v);
            self(self, i + 1);
        }
        // leave work's entry behind; it is overwritten on the next visit
    };
    rec(rec, 0);

    // Axis extents and artificial-edge flags from what was actually cut.
    for (size_t i = 0; i < positions.size(); ++i) {
        int lo = 0, hi = 0;
        bool first = true;
        for (const auto& e : entries) {
            lo = first ? e[i] : std::min(lo, e[i]);
            hi = first ? e[i] : std::max(hi, e[i]);
            first = false;
        }
        axes[i].lo = lo;
        axes[i].hi = hi;
        axes[i].lo_natural = !lo_box[i];
        axes[i].hi_natural = !hi_box[i];
    }
    return {axes, entries};
}

bool coords_valid(const CkLabelSet& labels0, const std::vector<SchemeInequality>& ineqs,
                  const std::vector<Pos>& positions, const std::vector<int>& coords) {
    CkLabelSet work = labels0;
    for (size_t i = 0; i < positions.size(); ++i) work.set_discrete(positions[i], coords[i]);
    for (const auto& iq : ineqs) {
        if (!inequality_active(work, iq)) continue;
        try {
            double l = work.component(iq.lhs.pos).real_part().real();
            double r = work.component(iq.rhs.pos).real_part().real();
            if (l < r - 1e-9) return false;
        } catch (const ValidationError&) {
        }
    }
    if (labels0.tag() == SeriesTag::discrete_upper) {
        auto mt12 = labels0.discrete({1, 2});
        for (size_t i = 0; i < positions.size(); ++i)
            if (positions[i] == Pos{1, 1} && mt12 && coords[i] < *mt12 + 1) return false;
    }
    if (labels0.tag() == SeriesTag::discrete_lower) {
        auto mt22 = labels0.discrete({2, 2});
        for (size_t i = 0; i < positions.size(); ++i)
            if (positions[i] == Pos{1, 1} && mt22 && coords[i] > *mt22 - 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// Engine A: every row below the top is an ordinary integer row.
// ---------------------------------------------------------------------

GeneratorSet build_engine_a(const CkLabelSet& labels, const GenericOptions& opt) {
    const int n = labels.n();
    auto positions = basis_positions(n);
    auto ineqs = scheme_inequalities(labels);
    auto win = enumerate_window(labels, opt);
    BasisWindow window(win.axes, win.entries, 0);

    GeneratorSet out;
    out.labels = labels;
    out.window = window;
    out.route = "generic";

    const int N = window.size();
    auto fill = [&](const std::vector<int>& coords) {
        CkLabelSet work = labels;
        for (size_t i = 0; i < positions.size(); ++i) work.set_discrete(positions[i], coords[i]);
        return work;
    };
    auto pos_axis = [&](Pos pos) {
        for (size_t i = 0; i < positions.size(); ++i)
            if (positions[i] == pos) return static_cast<int>(i);
        throw std::logic_error("position not in basis");
    };

    for (int k = 1; k <= n; ++k) {
        GeneratorMatrix g(n - k, n - k, N);
        for (int i = 0; i < N; ++i) {
            CkLabelSet work = fill(window.coords(i));
            GzCoeffs<PimenovScalar> cf{n, [&](int l) { return labels.params().slot_value(l); },
                                       [&](Pos p) { return work.component(p); }};
            g.add(i, i, cf.diag(k));
        }
        out.gens[{n - k, n - k}] = std::move(g);
    }

    for (int k = 1; k <= n - 1; ++k) {
        GeneratorMatrix lower(n - k - 1, n - k, N);
        GeneratorMatrix raise(n - k, n - k - 1, N);
        for (int i = 0; i < N; ++i) {
            CkLabelSet work = fill(window.coords(i));
            GzCoeffs<PimenovScalar> cf{n, [&](int l) { return labels.params().slot_value(l); },
                                       [&](Pos p) { return work.component(p); }};
            struct Move {
                Pos pos;
                int delta;
                bool outer_first;
                int interior_s;  // 0 for outer moves
            };
            std::vector<Move> moves;
            moves.push_back({{1, k}, 0, true, 0});
            if (k >= 2) moves.push_back({{k, k}, 0, false, 0});
            for (int s = 2; s <= k - 1; ++s) moves.push_back({{s, k}, 0, false, s});

            for (const auto& mv : moves)
                for (int dir : {-1, +1}) {
                    auto coords = window.coords(i);
                    int ax = pos_axis(mv.pos);
                    coords[ax] += dir;
                    if (!coords_valid(labels, ineqs, positions, coords)) continue;  // vanishing edge
                    int target = window.find(coords);
                    GeneratorMatrix& g = dir < 0 ? lower : raise;
                    if (target < 0) {
                        g.boundary_loss[i] = true;
                        continue;
                    }
                    PimenovScalar c;
                    if (mv.interior_s > 0) {
                        c = dir < 0 ? cf.lower_interior(k, mv.interior_s) : cf.raise_interior(k, mv.interior_s);
                        c = c * labels.params().slot_value(n - k + 1);
                    } else {
                        c = dir < 0 ? cf.lower_outer(k, mv.outer_first) : cf.raise_outer(k, mv.outer_first);
                    }
                    g.add(i, target, c);
                }
        }
        out.gens[{n - k - 1, n - k}] = std::move(lower);
        out.gens[{n - k, n - k - 1}] = std::move(raise);
    }

    for (int d = 2; d <= n - 1; ++d)
        for (int k = 0; k + d <= n - 1; ++k) {
            int q = k + d;
            auto low = commutator(out.at(k, q - 1), out.at(q - 1, q));
            low.k = k;
            low.r = q;
            out.gens[{k, q}] = std::move(low);
            auto high = commutator(out.at(q, k + 1), out.at(k + 1, k));
            high.k = q;
            high.r = k;
            out.gens[{q, k}] = std::move(high);
        }
    return out;
}

// ---------------------------------------------------------------------
// Engine B: n = 3 with a dual middle row. Exact lattice side channel plus
// canonical matrices on the derivative-index basis.
// ---------------------------------------------------------------------

struct SeriesEnv {
    std::vector<int> dims_to_slots;
    int dim_of_slot(int slot) const {
        for (int d = 0; d < static_cast<int>(dims_to_slots.size()); ++d)
            if (dims_to_slots[d] == slot) return d;
        throw std::logic_error("no series dimension for slot");
    }
    LaurentSeries jval(const CkParameterVector& j, int slot) const {
        switch (j.slot(slot)) {
            case SlotKind::unit: return LaurentSeries::one();
            case SlotKind::imaginary: return LaurentSeries(Complex(0.0, 1.0));
            case SlotKind::dual: return LaurentSeries::eps(dim_of_slot(slot));
        }
        return LaurentSeries::one();
    }
};

using JetS = Jet<LaurentSeries>;

// Component values for the n=3 dual-middle-row case. `su`,`sv` are whole
// offsets of the middle-row slots; jet directions 0/1 are the slot
// displacement directions (real step normalization).
struct EngineBComponents {
    const CkLabelSet* labels;
    const SeriesEnv* env;
    int m23 = 0, m11 = 0, su = 0, sv = 0;
    int jet_order = 0;
    bool with_jets = false;

    LaurentSeries eps2() const { return env->jval(labels->params(), 2); }

    JetS operator()(Pos pos) const {
        const auto& j = labels->params();
        int Q = with_jets ? jet_order : 0;
        auto plain = [&](LaurentSeries v) { return JetS(std::move(v), Q); };
        switch (pos.k) {
            case 3: {
                LaurentSeries J3 = env->jval(j, 1) * env->jval(j, 2);
                double kk = labels->amp(3), xi = labels->phase(3);
                if (pos.p == 1) return plain(LaurentSeries(kk) + J3 * LaurentSeries(xi / 2.0));
                if (pos.p == 3) return plain(LaurentSeries(-kk) + J3 * LaurentSeries(xi / 2.0));
                return plain(LaurentSeries(static_cast<double>(m23)));
            }
            case 2: {
                double rr = labels->amp(2), zeta = labels->phase(2);
                bool first = pos.p == 1;
                LaurentSeries base = LaurentSeries(first ? rr : -rr) +
                                     eps2() * LaurentSeries(zeta / 2.0 + static_cast<double>(first ? su : sv));
                JetS out = plain(base);
                if (with_jets && jet_order >= 1) {
                    JetIdx e{};
                    e[first ? 0 : 1] = 1;
                    out.set(e, eps2());  // d(component)/d(slot displacement)
                }
                return out;
            }
            default:
                return plain(LaurentSeries(static_cast<double>(m11)));
        }
    }
};

struct EmissionJet {
    // target deltas on the discrete axes and slot offsets
    int dm11 = 0, dsu = 0, dsv = 0;
    JetS coeff;          // without the structural 1/J prefactor
    LaurentSeries pref;  // multiplied in after assembly (1/J as exponent shift)
    bool shifts_su = false, shifts_sv = false;
};

// All emissions of one generator (adjacent or diagonal) at the given point.
std::vector<EmissionJet> engine_b_terms(const CkLabelSet& labels, const SeriesEnv& env,
                                        const EngineBComponents& comp, int gk, int gr) {
    const auto& j = labels.params();
    GzCoeffs<JetS> cf{3, [&](int l) { return JetS(env.jval(j, l), comp.with_jets ? comp.jet_order : 0); },
                      [&](Pos p) { return comp(p); }};
    std::vector<EmissionJet> out;
    int Q = comp.with_jets ? comp.jet_order : 0;
    auto one = LaurentSeries::one();
    if (gk == gr) {
        int k = 3 - gk;
        out.push_back({0, 0, 0, cf.diag(k), one, false, false});
        return out;
    }
    if (gk == 1 && gr == 2) {  // row-1 lowering
        out.push_back({-1, 0, 0, cf.lower_outer(1, true), one, false, false});
        return out;
    }
    if (gk == 2 && gr == 1) {  // row-1 raising
        out.push_back({+1, 0, 0, cf.raise_outer(1, true), one, false, false});
        return out;
    }
    if (gk == 0 && gr == 1) {  // lowers the middle row slots
        LaurentSeries inv_eps = mono_div(one, comp.eps2());
        out.push_back({0, -1, 0, cf.lower_outer(2, true), inv_eps, true, false});
        out.push_back({0, 0, -1, cf.lower_outer(2, false), inv_eps, false, true});
        return out;
    }
    if (gk == 1 && gr == 0) {
        LaurentSeries inv_eps = mono_div(one, comp.eps2());
        out.push_back({0, +1, 0, cf.raise_outer(2, true), inv_eps, true, false});
        out.push_back({0, 0, +1, cf.raise_outer(2, false), inv_eps, false, true});
        return out;
    }
    (void)Q;
    throw std::logic_error("engine_b_terms: not an adjacent generator");
}

GeneratorSet build_engine_b(const CkLabelSet& labels, const GenericOptions& opt) {
    const auto& j = labels.params();
    SeriesEnv env;
    for (int l = 1; l <= 2; ++l)
        if (j.slot(l) == SlotKind::dual) env.dims_to_slots.push_back(l);

    const int W23 = 3, W11 = 4, F = std::min(opt.offset_halfwidth, 4);
    const int jet_order = opt.jet_order;

    GeneratorSet out;
    out.labels = labels;
    out.route = "generic";

    // ----- exact lattice channel -----
    auto exact = std::make_shared<ExactChannel>();
    exact->dims_to_slots = env.dims_to_slots;
    {
        std::vector<Axis> axes = {
            {"m23", AxisKind::discrete, -W23, W23, false, false, {2, 3}, 0, true},
            {"m11", AxisKind::discrete, -W11, W11, false, false, {1, 1}, 0, true},
            {"s2u", AxisKind::offset, -F, F, false, false, {1, 2}, 2, true},
            {"s2v", AxisKind::offset, -F, F, false, false, {2, 2}, 2, false},
        };
        std::vector<std::vector<int>> entries;
        for (int a = -W23; a <= W23; ++a)
            for (int b = -W11; b <= W11; ++b)
                for (int u = -F; u <= F; ++u)
                    for (int v = -F; v <= F; ++v) entries.push_back({a, b, u, v});
        exact->window = BasisWindow(axes, entries, 0);

        const int N = exact->window.size();
        for (auto [gk, gr] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {2, 1}, {1, 2}, {0, 1}, {1, 0}}) {
            SeriesMatrix g(gk, gr, N);
            for (int i = 0; i < N; ++i) {
                const auto& c = exact->window.coords(i);
                EngineBComponents comp{&labels, &env, c[0], c[1], c[2], c[3], 0, false};
                for (const auto& em : engine_b_terms(labels, env, comp, gk, gr)) {
                    std::vector<int> t = {c[0], c[1] + em.dm11, c[2] + em.dsu, c[3] + em.dsv};
                    int target = exact->window.find(t);
                    if (target < 0) {
                        g.boundary_loss[i] = true;
                        continue;
                    }
                    g.add(i, target, em.coeff.value() * em.pref);
                }
            }
            exact->gens[{gk, gr}] = std::move(g);
        }
        auto a02 = commutator(exact->gens[{0, 1}], exact->gens[{1, 2}]);
        a02.k = 0;
        a02.r = 2;
        exact->gens[{0, 2}] = std::move(a02);
        auto a20 = commutator(exact->gens[{2, 1}], exact->gens[{1, 0}]);
        a20.k = 2;
        a20.r = 0;
        exact->gens[{2, 0}] = std::move(a20);
    }
    out.exact = exact;

    // ----- canonical matrices on the derivative-index basis -----
    {
        std::vector<Axis> axes = {
            {"m23", AxisKind::discrete, -W23, W23, false, false, {2, 3}, 0, true},
            {"m11", AxisKind::discrete, -W11, W11, false, false, {1, 1}, 0, true},
            {"j2u", AxisKind::jet, 0, jet_order, true, false, {1, 2}, 2, true},
            {"j2v", AxisKind::jet, 0, jet_order, true, false, {2, 2}, 2, false},
        };
        std::vector<std::vector<int>> entries;
        for (int a = -W23; a <= W23; ++a)
            for (int b = -W11; b <= W11; ++b)
                for (int du = 0; du <= jet_order; ++du)
                    for (int dv = 0; du + dv <= jet_order; ++dv) entries.push_back({a, b, du, dv});
        out.window = BasisWindow(axes, entries, jet_order);

        const int N = out.window.size();
        LaurentSeries eps2;
        {
            EngineBComponents c0{&labels, &env, 0, 0, 0, 0, 0, false};
            eps2 = c0.eps2();
        }

        std::map<std::pair<int, int>, SeriesMatrix> jet_series;
        for (auto [gk, gr] : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}, {2, 1}, {1, 2}, {0, 1}, {1, 0}}) {
            SeriesMatrix g(gk, gr, N);
            std::vector<bool> overflow(N, false);
            for (int i = 0; i < N; ++i) {
                const auto& c = out.window.coords(i);
                const int ga = c[2], gb = c[3];  // derivative orders of the source symbol
                EngineBComponents comp{&labels, &env, c[0], c[1], 0, 0, jet_order, true};
                for (const auto& em : engine_b_terms(labels, env, comp, gk, gr)) {
                    // Leibniz over the coefficient jet, then expand the slot
                    // shift factor exp(sigma * eps * d) in derivative orders.
                    for (const auto& [beta, cbeta] : em.coeff.terms()) {
                        int bu = beta[0], bv = beta[1];
                        if (bu > ga || bv > gb) continue;
                        // binomials and factorials: Taylor coeff -> derivative
                        double lead = 1.0;
                        // C(ga,bu)*bu! * C(gb,bv)*bv! = ga!/(ga-bu)! * gb!/(gb-bv)!
                        for (int t = 0; t < bu; ++t) lead *= double(ga - t);
                        for (int t = 0; t < bv; ++t) lead *= double(gb - t);
                        // paper normalization: each slot derivative carries 1/eps
                        LaurentSeries cc = cbeta * LaurentSeries(lead);
                        for (int t = 0; t < bu + bv; ++t) cc = mono_div(cc, eps2);
                        int ru = ga - bu, rv = gb - bv;
                        // shift factor: identity for plain moves, else
                        // sum_q (sigma eps)^q / q! raising the slot derivative
                        auto emit = [&](int du, int dv, const LaurentSeries& w) {
                            if (du + dv > jet_order) {
                                if (!w.is_zero()) overflow[i] = true;
                                return;
                            }
                            std::vector<int> t2 = {c[0], c[1] + em.dm11, du, dv};
                            int target = out.window.find(t2);
                            if (target < 0) {
                                g.boundary_loss[i] = true;
                                return;
                            }
                            g.add(i, target, w * em.pref);
                        };
                        if (!em.shifts_su && !em.shifts_sv) {
                            emit(ru, rv, cc);
                        } else {
                            int sigma = em.shifts_su ? (em.dsu) : (em.dsv);
                            LaurentSeries w = cc;
                            double fact = 1.0;
                            for (int q = 0; ru + rv + q <= jet_order + 1; ++q) {
                                if (q > 0) {
                                    fact *= q;
                                    LaurentSeries step = eps2 * LaurentSeries(static_cast<double>(sigma));
                                    w = w * step;
                                }
                                LaurentSeries term = w * LaurentSeries(1.0 / fact);
                                if (em.shifts_su)
                                    emit(ru + q, rv, term);
                                else
                                    emit(ru, rv + q, term);
                            }
                        }
                    }
                }
            }
            jet_series[{gk, gr}] = std::move(g);
            GeneratorMatrix gm(gk, gr, N);
            gm.jet_overflow = overflow;
            out.gens[{gk, gr}] = std::move(gm);
        }
        {
            auto a02 = commutator(jet_series[{0, 1}], jet_series[{1, 2}]);
            a02.k = 0;
            a02.r = 2;
            jet_series[{0, 2}] = std::move(a02);
            auto a20 = commutator(jet_series[{2, 1}], jet_series[{1, 0}]);
            a20.k = 2;
            a20.r = 0;
            jet_series[{2, 0}] = std::move(a20);
            out.gens[{0, 2}] = GeneratorMatrix(0, 2, N);
            out.gens[{2, 0}] = GeneratorMatrix(2, 0, N);
        }
        // Dual-number projection of every generator: exponents beyond the
        // first order in each contraction parameter are dropped, negative
        // grades are the omitted singular parts.
        for (auto& [key, gs] : jet_series) {
            GeneratorMatrix& gm = out.gens[key];
            gm.cols.assign(N, {});
            if (gm.boundary_loss.empty()) gm.boundary_loss.assign(N, false);
            if (gm.jet_overflow.empty()) gm.jet_overflow.assign(N, false);
            for (int i = 0; i < N; ++i) {
                if (gs.boundary_loss[i]) gm.boundary_loss[i] = true;
                for (const auto& [row, v] : gs.cols[i]) {
                    PimenovScalar p;
                    for (const auto& [ek, cc] : v.terms()) {
                        DualSupport s;
                        bool keep = true;
                        for (int d = 0; d < kMaxSeriesSlots; ++d) {
                            int e = ek.get(d);
                            if (e == 0) continue;
                            if (e != 1 || d >= static_cast<int>(env.dims_to_slots.size())) {
                                keep = false;
                                break;
                            }
                            s = s.united(DualSupport::unit(env.dims_to_slots[d]));
                        }
                        if (keep) p.set_term(s, p.coeff(s) + cc);
                    }
                    if (!p.is_zero()) gm.add(i, row, p);
                }
            }
        }
    }

    // Semidirect structure of the contracted algebra.
    bool j1_dual = j.slot(1) == SlotKind::dual;
    SubalgebraStructure st;
    if (j1_dual) {
        st.summary = "T6 nilradical + three commuting diagonal directions";
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) st.roles[{a, b}] = GeneratorRole::nilradical;
        for (int a = 0; a < 3; ++a) st.roles[{a, a}] = GeneratorRole::cartan;
    } else {
        st.summary = "T4 nilradical + u(2;j1) + u(1)";
        for (auto p : {std::pair{1, 2}, {2, 1}, {0, 2}, {2, 0}}) st.roles[p] = GeneratorRole::nilradical;
        for (auto p : {std::pair{0, 0}, {1, 1}, {0, 1}, {1, 0}}) st.roles[p] = GeneratorRole::reductive;
        st.roles[{2, 2}] = GeneratorRole::cartan;
    }
    out.structure = std::move(st);
    return out;
}

}  // namespace

GeneratorSet build_generic(const CkLabelSet& labels, const GenericOptions& opt) {
    const int n = labels.n();
    {
        auto violations = validate(labels);
        if (!violations.empty())
            throw ValidationError("invalid labels: " + violations.front().inequality + " (" +
                                  violations.front().detail + ")");
    }
    bool below_top_all_integer = true;
    bool dual_middle = false;
    for (int row = 2; row <= n - 1; ++row) {
        if (labels.row_kind(row) == RowKind::dual) dual_middle = true;
        if (labels.row_kind(row) != RowKind::integer) below_top_all_integer = false;
    }
    if (below_top_all_integer) {
        auto out = build_engine_a(labels, opt);
        if (n == 3 && labels.row_kind(3) == RowKind::dual) {
            SubalgebraStructure st;
            st.summary = "T4 nilradical + u(1) + u(2;j2)";
            for (auto p : {std::pair{0, 1}, {1, 0}, {0, 2}, {2, 0}}) st.roles[p] = GeneratorRole::nilradical;
            for (auto p : {std::pair{1, 1}, {2, 2}, {1, 2}, {2, 1}}) st.roles[p] = GeneratorRole::reductive;
            st.roles[{0, 0}] = GeneratorRole::cartan;
            out.structure = std::move(st);
        }
        return out;
    }
    if (n == 3 && dual_middle && labels.row_kind(2) == RowKind::dual) return build_engine_b(labels, opt);
    throw UnsupportedCase("window build not supported for this parameter shape: " + labels.describe());
}

WeightActionReport weight_vector_action(const CkLabelSet& labels) {
    const int n = labels.n();
    if (n != 2 && n != 3) throw UnsupportedCase("weight action analysis is for ranks 2 and 3");
    WeightActionReport rep;
    const double tol = 1e-9;

    auto jv = [&](int l) { return labels.params().slot_value(l); };

    // Formal extreme substitutions on the component callback.
    auto top_sub = [&](Pos p) -> PimenovScalar {
        if (n == 2) {
            if (p == Pos{1, 1}) return labels.component({1, 2});
            return labels.component(p);
        }
        if (p == Pos{1, 2} || p == Pos{1, 1}) return labels.component({1, 3});
        if (p == Pos{2, 2}) return labels.component({2, 3});
        return labels.component(p);
    };
    auto bottom_sub = [&](Pos p) -> PimenovScalar {
        if (n == 2) {
            if (p == Pos{1, 1}) return labels.component({2, 2});
            return labels.component(p);
        }
        if (p == Pos{2, 2} || p == Pos{1, 1}) return labels.component({3, 3});
        if (p == Pos{1, 2}) return labels.component({2, 3});
        return labels.component(p);
    };

    GzCoeffs<PimenovScalar> top{n, jv, top_sub};
    GzCoeffs<PimenovScalar> bottom{n, jv, bottom_sub};

    bool all_zero = true;
    for (int k = 1; k <= n - 1; ++k) {
        double raise_norm = std::max(top.raise_outer(k, true).norm(), k >= 2 ? top.raise_outer(k, false).norm() : 0.0);
        double lower_norm =
            std::max(bottom.lower_outer(k, true).norm(), k >= 2 ? bottom.lower_outer(k, false).norm() : 0.0);
        bool raise_zero = raise_norm < tol, lower_zero = lower_norm < tol;
        rep.annihilates[{n - k, n - k - 1}] = raise_zero;
        rep.annihilates[{n - k - 1, n - k}] = lower_zero;
        if (!raise_zero || !lower_zero) all_zero = false;
    }
    rep.finite_dimensional = all_zero;
    rep.detail = all_zero ? "every extreme action vanishes: finite-dimensional scheme"
                          : "an extreme action survives: the ladder is unbounded";
    return rep;
}

}  // namespace ckgz
