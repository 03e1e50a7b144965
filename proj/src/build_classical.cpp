#include <cmath>

#include "ckgz/build.hpp"

namespace ckgz {

namespace {

double lval(const ClassicalPattern& m, int p, int k) { return m.m(p, k) - p; }

// Coefficient of |m_{sk} - 1> in the action of the lowering generator on row k.
double lowering_coeff(const ClassicalPattern& m, int k, int s) {
    double num = 1.0, den = 1.0;
    double ls = lval(m, s, k);
    for (int p = 1; p <= k + 1; ++p) num *= lval(m, p, k + 1) - ls + 1.0;
    for (int p = 1; p <= k - 1; ++p) num *= lval(m, p, k - 1) - ls;
    for (int p = 1; p <= k; ++p) {
        if (p == s) continue;
        den *= (lval(m, p, k) - ls + 1.0) * (lval(m, p, k) - ls);
    }
    double rad = -num / den;
    if (rad < 0.0 && rad > -1e-9) rad = 0.0;
    return std::sqrt(rad);
}

// Coefficient of |m_{sk} + 1>.
double raising_coeff(const ClassicalPattern& m, int k, int s) {
    double num = 1.0, den = 1.0;
    double ls = lval(m, s, k);
    for (int p = 1; p <= k + 1; ++p) num *= lval(m, p, k + 1) - ls;
    for (int p = 1; p <= k - 1; ++p) num *= lval(m, p, k - 1) - ls - 1.0;
    for (int p = 1; p <= k; ++p) {
        if (p == s) continue;
        den *= (lval(m, p, k) - ls) * (lval(m, p, k) - ls - 1.0);
    }
    double rad = -num / den;
    if (rad < 0.0 && rad > -1e-9) rad = 0.0;
    return std::sqrt(rad);
}

double row_sum(const ClassicalPattern& m, int k) {
    if (k == 0) return 0.0;
    double s = 0.0;
    for (int p = 1; p <= k; ++p) s += m.m(p, k);
    return s;
}

ClassicalPattern shifted(const ClassicalPattern& m, int p, int k, int delta) {
    auto rows = m.rows();
    rows[k - 1][p - 1] += delta;
    return ClassicalPattern(rows);
}

}  // namespace

GeneratorSet build_classical(const HighestWeight& hw) {
    const int n = hw.n();
    auto patterns = enumerate_classical(hw);

    std::vector<Axis> axes;
    for (int k = 1; k <= n - 1; ++k)
        for (int p = 1; p <= k; ++p)
            axes.push_back({pos_name({p, k}), AxisKind::discrete, 0, 0, true, true, {p, k}, 0, true});
    std::vector<std::vector<int>> entries;
    entries.reserve(patterns.size());
    for (const auto& m : patterns) {
        std::vector<int> c;
        for (int k = 1; k <= n - 1; ++k)
            for (int p = 1; p <= k; ++p) c.push_back(m.m(p, k));
        entries.push_back(std::move(c));
    }
    // The pattern basis is complete: betweenness edges are natural, nothing
    // is truncated.
    BasisWindow window(axes, entries, 0);

    auto index_of = [&](const ClassicalPattern& m) {
        std::vector<int> c;
        for (int k = 1; k <= n - 1; ++k)
            for (int p = 1; p <= k; ++p) c.push_back(m.m(p, k));
        return window.find(c);
    };

    GeneratorSet out;
    out.labels = classical_labels(hw);
    out.window = window;
    out.route = "classical";

    const int N = window.size();
    // Diagonal generators A_{n-k,n-k}, k = 1..n.
    for (int k = 1; k <= n; ++k) {
        GeneratorMatrix g(n - k, n - k, N);
        for (int i = 0; i < N; ++i) g.add(i, i, PimenovScalar(row_sum(patterns[i], k) - row_sum(patterns[i], k - 1)));
        out.gens[{n - k, n - k}] = std::move(g);
    }
    // Adjacent lowering/raising, k = 1..n-1.
    for (int k = 1; k <= n - 1; ++k) {
        GeneratorMatrix lower(n - k - 1, n - k, N);
        GeneratorMatrix raise(n - k, n - k - 1, N);
        for (int i = 0; i < N; ++i) {
            const auto& m = patterns[i];
            for (int s = 1; s <= k; ++s) {
                ClassicalPattern down = shifted(m, s, k, -1);
                if (down.satisfies_betweenness()) {
                    double c = lowering_coeff(m, k, s);
                    if (c != 0.0) lower.add(i, index_of(down), PimenovScalar(c));
                }
                ClassicalPattern up = shifted(m, s, k, +1);
                if (up.satisfies_betweenness()) {
                    double c = raising_coeff(m, k, s);
                    if (c != 0.0) raise.add(i, index_of(up), PimenovScalar(c));
                }
            }
        }
        out.gens[{n - k - 1, n - k}] = std::move(lower);
        out.gens[{n - k, n - k - 1}] = std::move(raise);
    }
    // Remaining generators from commutators of adjacent ones, growing |k-r|.
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

}  // namespace ckgz
