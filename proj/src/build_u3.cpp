#include <cmath>
#include <functional>

#include "ckgz/build.hpp"
#include "ckgz/jet.hpp"

namespace ckgz {

namespace {

double safe_sqrt(double x) {
    if (x < 0.0 && x > -1e-9) x = 0.0;
    return std::sqrt(x);
}

// ----- first contraction: integer basis (m12, m22, m11), j2 = 1 -----

GeneratorSet build_first_contraction(const CkLabelSet& labels, const GenericOptions& opt) {
    if (labels.params().slot(1) != SlotKind::dual || labels.params().slot(2) != SlotKind::unit)
        throw InvalidSeriesParameters("first-contraction closed form needs j = (iota, 1)");
    const double k = labels.amp(3), xi = labels.phase(3);
    const int m23 = labels.discrete({2, 3}).value();
    if (k < 0.0) throw InvalidSeriesParameters("k >= 0 required");

    const int W = std::min(opt.window_halfwidth, 8);
    std::vector<Axis> axes = {
        {"m12", AxisKind::discrete, m23, m23 + W, true, false, {1, 2}, 0, true},
        {"m22", AxisKind::discrete, m23 - W, m23, false, true, {2, 2}, 0, true},
        {"m11", AxisKind::discrete, m23 - W, m23 + W, true, true, {1, 1}, 0, true},
    };
    std::vector<std::vector<int>> entries;
    for (int m12 = m23; m12 <= m23 + W; ++m12)
        for (int m22 = m23 - W; m22 <= m23; ++m22)
            for (int m11 = m22; m11 <= m12; ++m11) entries.push_back({m12, m22, m11});
    BasisWindow window(axes, entries, 0);
    const int N = window.size();

    GeneratorSet out;
    out.labels = labels;
    out.window = window;
    out.route = "specialized-u3-first-contraction";

    GeneratorMatrix a00(0, 0, N), a11(1, 1, N), a22(2, 2, N), a01(0, 1, N), a10(1, 0, N), a12(1, 2, N), a21(2, 1, N);

    auto valid = [&](int m12, int m22, int m11) { return m12 >= m23 && m23 >= m22 && m12 >= m11 && m11 >= m22; };
    auto emit = [&](GeneratorMatrix& g, int i, int m12, int m22, int m11, double c) {
        if (!valid(m12, m22, m11)) return;  // vanishing edge
        int t = window.find({m12, m22, m11});
        if (t < 0) {
            if (std::fabs(c) > 1e-12) g.boundary_loss[i] = true;
            return;
        }
        g.add(i, t, PimenovScalar(c));
    };

    for (int i = 0; i < N; ++i) {
        auto c = window.coords(i);
        int m12 = c[0], m22 = c[1], m11 = c[2];
        a00.add(i, i, PimenovScalar(xi + m23 - m12 - m22));
        a11.add(i, i, PimenovScalar(double(m12 + m22 - m11)));
        a22.add(i, i, PimenovScalar(double(m11)));
        // u(2) subalgebra on m11
        emit(a12, i, m12, m22, m11 - 1, safe_sqrt(double(m12 - m11 + 1) * double(m11 - m22)));
        emit(a21, i, m12, m22, m11 + 1, safe_sqrt(double(m12 - m11) * double(m11 + 1 - m22)));
        // nilradical partners scaled by the contracted top row
        if (valid(m12 - 1, m22, m11))
            emit(a01, i, m12 - 1, m22, m11,
                 k * safe_sqrt(double(m23 - m12) * double(m11 - m12) /
                               (double(m22 - m12) * double(m22 - m12 - 1))));
        if (valid(m12, m22 - 1, m11))
            emit(a01, i, m12, m22 - 1, m11,
                 k * safe_sqrt(double(m23 + 1 - m22) * double(m11 + 1 - m22) /
                               (double(m12 - m22 + 2) * double(m12 - m22 + 1))));
        if (valid(m12 + 1, m22, m11))
            emit(a10, i, m12 + 1, m22, m11,
                 k * safe_sqrt(double(m23 - 1 - m12) * double(m11 - 1 - m12) /
                               (double(m22 - m12 - 1) * double(m22 - m12 - 2))));
        if (valid(m12, m22 + 1, m11))
            emit(a10, i, m12, m22 + 1, m11,
                 k * safe_sqrt(double(m23 - m22) * double(m11 - m22) /
                               (double(m12 - m22 + 1) * double(m12 - m22))));
    }

    out.gens[{0, 0}] = std::move(a00);
    out.gens[{1, 1}] = std::move(a11);
    out.gens[{2, 2}] = std::move(a22);
    out.gens[{0, 1}] = std::move(a01);
    out.gens[{1, 0}] = std::move(a10);
    out.gens[{1, 2}] = std::move(a12);
    out.gens[{2, 1}] = std::move(a21);
    {
        auto a02 = commutator(out.at(0, 1), out.at(1, 2));
        a02.k = 0;
        a02.r = 2;
        out.gens[{0, 2}] = std::move(a02);
        auto a20 = commutator(out.at(2, 1), out.at(1, 0));
        a20.k = 2;
        a20.r = 0;
        out.gens[{2, 0}] = std::move(a20);
    }

    SubalgebraStructure st;
    st.summary = "T4 nilradical + u(1) + u(2)";
    for (auto p : {std::pair{0, 1}, {1, 0}, {0, 2}, {2, 0}}) st.roles[p] = GeneratorRole::nilradical;
    for (auto p : {std::pair{1, 1}, {2, 2}, {1, 2}, {2, 1}}) st.roles[p] = GeneratorRole::reductive;
    st.roles[{0, 0}] = GeneratorRole::cartan;
    out.structure = std::move(st);
    return out;
}

// Printed forms of the derived movers of the first contraction; used by the
// tests to confirm the commutator-built ones.
}  // namespace

// ----- second/double contraction: derivative-index basis over m11 -----

namespace {

using RJet = Jet<double>;

struct U3JetCoeffs {
    double k, xi, r, zeta, j1sq;
    int m23, jet_order;

    RJet rj() const { return RJet::variable(r, 0, jet_order); }
    RJet S() const {
        RJet t = rj();
        return sqrt(RJet(k * k, jet_order) - RJet(j1sq, jet_order) * t * t);
    }
    RJet f(int m11, int dir) const {  // diagonal part of the row-2 movers
        RJet t = rj();
        RJet s = S();
        RJet half(dir < 0 ? -0.5 : 0.5, jet_order);
        RJet c1 = s * inverse(RJet(2.0, jet_order) * t) *
                  (RJet(zeta - m11 - m23, jet_order) + half);
        RJet c2 = RJet(j1sq, jet_order) * t *
                  inverse(RJet(2.0, jet_order) * s) * RJet(xi - zeta + (dir < 0 ? 1.0 : -1.0), jet_order);
        return c1 + c2;
    }
    RJet g(int dir) const {  // derivative-emission weight on (d_u - d_v)
        RJet s = S();
        return RJet(dir < 0 ? -0.5 : 0.5, jet_order) * s;
    }
    RJet ladder_r() const { return rj(); }
    RJet ladder_S() const { return S(); }
};

GeneratorSet build_contracted_jets(const CkLabelSet& labels, const GenericOptions& opt, bool double_contraction) {
    const auto& j = labels.params();
    if (j.slot(2) != SlotKind::dual) throw InvalidSeriesParameters("second parameter must be dual for this route");
    double j1sq = 1.0;
    if (double_contraction) {
        if (j.slot(1) != SlotKind::dual) throw InvalidSeriesParameters("double contraction needs j = (iota, iota)");
        j1sq = 0.0;
    } else {
        if (j.slot(1) == SlotKind::dual) throw InvalidSeriesParameters("use the double-contraction route");
        j1sq = j.slot(1) == SlotKind::imaginary ? -1.0 : 1.0;
    }

    const double k = labels.amp(3), xi = labels.phase(3);
    const double r = labels.amp(2), zeta = labels.phase(2);
    const int m23 = labels.discrete({2, 3}).value();
    if (k < 0.0 || r < 0.0) throw InvalidSeriesParameters("k, r >= 0 required");
    if (r == 0.0) throw InvalidSeriesParameters("vanishing denominator: r must be positive");
    if (k * k - j1sq * r * r <= 0.0) throw InvalidSeriesParameters("radicand k^2 - j1^2 r^2 must be positive");

    const int W = std::min(opt.window_halfwidth, 20);
    const int Q = opt.jet_order;
    std::vector<Axis> axes = {
        {"m11", AxisKind::discrete, -W, W, false, false, {1, 1}, 0, true},
        {"j2u", AxisKind::jet, 0, Q, true, false, {1, 2}, 2, true},
        {"j2v", AxisKind::jet, 0, Q, true, false, {2, 2}, 2, false},
    };
    std::vector<std::vector<int>> entries;
    for (int m = -W; m <= W; ++m)
        for (int du = 0; du <= Q; ++du)
            for (int dv = 0; du + dv <= Q; ++dv) entries.push_back({m, du, dv});
    BasisWindow window(axes, entries, Q);
    const int N = window.size();

    GeneratorSet out;
    out.labels = labels;
    out.window = window;
    out.route = double_contraction ? "specialized-u3-double-contraction" : "specialized-u3-second-contraction";

    U3JetCoeffs cf{k, xi, r, zeta, j1sq, m23, Q};

    // One operator term: coefficient jet (in the r-displacement direction),
    // an m11 shift, and optionally the (d_u - d_v) emission pattern.
    struct Term {
        RJet coeff;
        int dm11 = 0;
        bool demit = false;  // emits the antisymmetric derivative pair
    };
    auto assemble = [&](int gk, int gr, const std::function<std::vector<Term>(int)>& terms_at) {
        GeneratorMatrix g(gk, gr, N);
        for (int i = 0; i < N; ++i) {
            auto c = window.coords(i);
            int m11 = c[0], ga = c[1], gb = c[2];
            for (const auto& t : terms_at(m11)) {
                // Leibniz: derivative orders (bu,bv) act on the coefficient,
                // d/du = +1/2 d/dr, d/dv = -1/2 d/dr on the label closures.
                for (int bu = 0; bu <= ga; ++bu)
                    for (int bv = 0; bv <= gb; ++bv) {
                        JetIdx idx{};
                        idx[0] = static_cast<std::uint8_t>(bu + bv);
                        double taylor = t.coeff.coeff(idx);
                        if (taylor == 0.0) continue;
                        double lead = taylor;
                        for (int q = 0; q < bu + bv; ++q) lead *= double(q + 1);  // Taylor -> derivative
                        double binom = 1.0;
                        for (int q = 0; q < bu; ++q) binom *= double(ga - q) / double(q + 1);
                        for (int q = 0; q < bv; ++q) binom *= double(gb - q) / double(q + 1);
                        double w = lead * binom * std::pow(0.5, bu) * std::pow(-0.5, bv);
                        int ru = ga - bu, rv = gb - bv;
                        int m2 = m11 + t.dm11;
                        auto place = [&](int du, int dv, double val) {
                            if (val == 0.0) return;
                            if (du + dv > Q) {
                                g.jet_overflow[i] = true;
                                return;
                            }
                            int tix = window.find({m2, du, dv});
                            if (tix < 0) {
                                g.boundary_loss[i] = true;
                                return;
                            }
                            g.add(i, tix, PimenovScalar(val));
                        };
                        if (t.demit) {
                            place(ru + 1, rv, w);
                            place(ru, rv + 1, -w);
                        } else {
                            place(ru, rv, w);
                        }
                    }
            }
        }
        return g;
    };

    auto diag = [&](int gk, double base, double slope_m11) {
        GeneratorMatrix g(gk, gk, N);
        for (int i = 0; i < N; ++i) g.add(i, i, PimenovScalar(base + slope_m11 * window.coords(i)[0]));
        return g;
    };

    out.gens[{0, 0}] = diag(0, m23 + xi - zeta, 0.0);
    out.gens[{1, 1}] = diag(1, zeta, -1.0);
    out.gens[{2, 2}] = diag(2, 0.0, 1.0);
    out.gens[{1, 2}] = assemble(1, 2, [&](int) { return std::vector<Term>{{cf.ladder_r(), -1, false}}; });
    out.gens[{2, 1}] = assemble(2, 1, [&](int) { return std::vector<Term>{{cf.ladder_r(), +1, false}}; });
    out.gens[{0, 1}] = assemble(0, 1, [&](int m11) {
        return std::vector<Term>{{cf.f(m11, -1), 0, false}, {cf.g(-1), 0, true}};
    });
    out.gens[{1, 0}] = assemble(1, 0, [&](int m11) {
        return std::vector<Term>{{cf.f(m11, +1), 0, false}, {cf.g(+1), 0, true}};
    });
    {
        auto a02 = commutator(out.at(0, 1), out.at(1, 2));
        a02.k = 0;
        a02.r = 2;
        out.gens[{0, 2}] = std::move(a02);
        auto a20 = commutator(out.at(2, 1), out.at(1, 0));
        a20.k = 2;
        a20.r = 0;
        out.gens[{2, 0}] = std::move(a20);
    }

    SubalgebraStructure st;
    if (double_contraction) {
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

GeneratorSet build_u3_specialized(U3Route route, const CkLabelSet& labels, const GenericOptions& opt) {
    if (labels.n() != 3) throw UnsupportedCase("closed-form builder is for rank 3");
    switch (route) {
        case U3Route::first_contraction: return build_first_contraction(labels, opt);
        case U3Route::second_contraction: return build_contracted_jets(labels, opt, false);
        case U3Route::double_contraction: return build_contracted_jets(labels, opt, true);
    }
    throw UnsupportedCase("unknown route");
}

}  // namespace ckgz
