#include "ckgz/casimir.hpp"

#include <cmath>
#include <sstream>

namespace ckgz {

WeightMatrix WeightMatrix::multiply(const WeightMatrix& o) const {
    WeightMatrix out(n_);
    for (int p = 1; p <= n_; ++p)
        for (int s = 1; s <= n_; ++s) {
            PimenovScalar acc;
            for (int t = 1; t <= n_; ++t) acc += at(p, t) * o.at(t, s);
            out.at(p, s) = acc;
        }
    return out;
}

PimenovScalar WeightMatrix::grand_sum() const {
    PimenovScalar acc;
    for (int p = 1; p <= n_; ++p)
        for (int s = 1; s <= n_; ++s) acc += at(p, s);
    return acc;
}

namespace {

// Scaled weight matrix a(j): finite entries for every parameter kind.
WeightMatrix scaled_weight_matrix(const CkLabelSet& labels) {
    const int n = labels.n();
    PimenovScalar J = row_scale(labels.params(), n).value;
    WeightMatrix a(n);
    for (int p = 1; p <= n; ++p) {
        for (int s = 1; s <= n; ++s) {
            if (p == s) continue;
            if (s < p) a.at(p, s) = -J;  // theta tail
        }
    }
    a.at(1, 1) = labels.component({1, n}) + J * PimenovScalar(double(n - 1));
    a.at(n, n) = labels.component({n, n});
    for (int p = 2; p <= n - 1; ++p)
        a.at(p, p) = J * (labels.component({p, n}) + PimenovScalar(double(n - p)));
    return a;
}

}  // namespace

CasimirSpectrum spectrum_general(const CkLabelSet& labels) {
    const int n = labels.n();
    PimenovScalar J = row_scale(labels.params(), n).value;
    WeightMatrix a = scaled_weight_matrix(labels);

    CasimirSpectrum out;
    out.provenance = "weight-matrix";
    WeightMatrix apow(n);  // a(j)^{q-1}, starts at identity
    for (int p = 1; p <= n; ++p) apow.at(p, p) = PimenovScalar::one();

    PimenovScalar m1n = labels.component({1, n});
    PimenovScalar mnn = labels.component({n, n});

    for (int q = 1; q <= n; ++q) {
        if (q % 2 == 0) {
            apow = apow.multiply(a);  // now a^q
            out.values.push_back(apow.grand_sum());
            continue;
        }
        // Odd order: Tr a*(->) a(j)^{q-1} E with the two singular corner
        // entries of a*(->) grouped into one divisible combination.
        // Row sums of a^{q-1}:
        std::vector<PimenovScalar> w(n + 1);
        for (int p = 1; p <= n; ++p) {
            PimenovScalar acc;
            for (int s = 1; s <= n; ++s) acc += apow.at(p, s);
            w[p] = acc;
        }
        PimenovScalar acc;
        // finite part of a*(->): diagonal shifts and the theta tail
        acc += PimenovScalar(double(n - 1)) * w[1];
        for (int p = 2; p <= n - 1; ++p)
            acc += (labels.component({p, n}) + PimenovScalar(double(n - p))) * w[p];
        for (int p = 1; p <= n; ++p)
            for (int s = 1; s < p; ++s) acc -= w[s];
        // singular part: (m_1n w_1 + m_nn w_n) / J
        acc += div(m1n * w[1] + mnn * w[n], J);
        out.values.push_back(acc);
        apow = apow.multiply(a);  // advance to a^q for the next round
    }
    return out;
}

CasimirSpectrum spectrum_specialized(const CkLabelSet& labels, bool su_constraint) {
    const int n = labels.n();
    CasimirSpectrum out;
    if (n == 2) {
        switch (labels.tag()) {
            case SeriesTag::classical: {
                double m12 = labels.discrete({1, 2}).value(), m22 = labels.discrete({2, 2}).value();
                out.values = {PimenovScalar(m12 + m22), PimenovScalar(m12 * m12 + m22 * m22 + m12 - m22)};
                out.provenance = "closed-form-classical";
                return out;
            }
            case SeriesTag::contracted: {
                double k = labels.amp(2), zeta = labels.phase(2);
                out.values = {PimenovScalar(zeta), PimenovScalar(2.0 * k * k)};
                out.provenance = "closed-form-contracted";
                return out;
            }
            case SeriesTag::continuous_series: {
                double a = labels.continuous("a").value(), zeta = labels.continuous("zeta").value();
                out.values = {PimenovScalar(zeta), PimenovScalar(2.0 * a * a + (1.0 - zeta * zeta) / 2.0)};
                out.provenance = "closed-form-continuous";
                return out;
            }
            case SeriesTag::additional_continuous: {
                double b = labels.continuous("b").value(), zeta = labels.continuous("zeta").value();
                out.values = {PimenovScalar(zeta), PimenovScalar(-2.0 * (b * (b + 1.0) + zeta * zeta / 4.0))};
                out.provenance = "closed-form-additional";
                return out;
            }
            case SeriesTag::continued_general: {
                double a = labels.continuous("a").value(), b = labels.continuous("b").value();
                double zeta = labels.continuous("zeta").value();
                Complex c2 = 2.0 * Complex(a * a - b * (b + 1.0) - zeta * zeta / 4.0, a * (2.0 * b + 1.0));
                out.values = {PimenovScalar(zeta), PimenovScalar(c2)};
                out.provenance = "closed-form-continued";
                return out;
            }
            case SeriesTag::discrete_upper:
            case SeriesTag::discrete_lower: {
                double mt12 = labels.discrete({1, 2}).value(), mt22 = labels.discrete({2, 2}).value();
                out.values = {PimenovScalar(mt12 + mt22),
                              PimenovScalar(-(mt12 * mt12 + mt22 * mt22 + mt12 - mt22))};
                out.provenance = "closed-form-discrete";
                return out;
            }
            default: break;
        }
        throw InvalidSeriesParameters("no closed-form spectrum for this rank-2 case");
    }
    if (n == 3 && labels.row_kind(3) == RowKind::dual) {
        double k = labels.amp(3), xi = labels.phase(3);
        double m23 = double(labels.discrete({2, 3}).value());
        if (su_constraint) xi = -m23;
        out.values = {PimenovScalar(xi + m23), PimenovScalar(2.0 * k * k), PimenovScalar(3.0 * k * k * (xi + 1.0))};
        out.provenance = su_constraint ? "closed-form-contracted-su" : "closed-form-contracted";
        return out;
    }
    if (n == 3 && labels.tag() == SeriesTag::classical) {
        double m13 = labels.discrete({1, 3}).value();
        double m23 = labels.discrete({2, 3}).value();
        double m33 = labels.discrete({3, 3}).value();
        out.values = {PimenovScalar(m13 + m23 + m33),
                      PimenovScalar(m13 * m13 + m33 * m33 + m23 * m23 + 2.0 * (m13 - m33)),
                      PimenovScalar(0.0)};
        // cubic invariant: see compare_cubic_invariant
        out.values[2] = spectrum_general(labels).values[2];
        out.provenance = "closed-form-classical";
        return out;
    }
    throw InvalidSeriesParameters("no closed-form spectrum for " + labels.describe());
}

CubicComparison compare_cubic_invariant(const CkLabelSet& labels) {
    if (labels.n() != 3 || !labels.params().all_unit())
        throw InvalidSeriesParameters("cubic comparison is for rank 3 at unit parameters");
    double m13 = labels.discrete({1, 3}).value();
    double m23 = labels.discrete({2, 3}).value();
    double m33 = labels.discrete({3, 3}).value();
    CubicComparison out;
    out.from_weight_matrix = spectrum_general(labels).real(3);
    // Printed transcription of the cubic spectrum at unit parameters.
    out.from_printed_form = (m13 * m13 * m13 + m33 * m33 * m33) + 2.0 * (2.0 * m13 * m13 - m33 * m33) -
                            m13 * m33 + (m23 * m23 * m23 + 2.0 * m23 * m23 - 2.0 * m23) +
                            (2.0 * (2.0 * m13 - m33) - m23 * (m13 + m33));
    out.match = std::fabs(out.from_weight_matrix - out.from_printed_form) < 1e-9;
    return out;
}

GeneratorMatrix operator_casimir(const GeneratorSet& g, int q) {
    const int n = g.n();
    const int N = g.window.size();
    if (q == 1) {
        GeneratorMatrix out(0, 0, N);
        for (int a = 0; a < n; ++a) out = matrix_sum(out, g.at(a, a), PimenovScalar::one(), PimenovScalar::one());
        return out;
    }
    if (q != 2) throw CasimirUnsupported("operator form implemented for orders 1 and 2 only");
    if (g.labels.params().all_unit()) {
        GeneratorMatrix out(0, 0, N);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out = matrix_sum(out, matrix_product(g.at(a, b), g.at(b, a)), PimenovScalar::one(),
                                 PimenovScalar::one());
        return out;
    }
    if (n == 2) {
        PimenovScalar j1 = g.labels.params().slot_value(1);
        GeneratorMatrix out = matrix_sum(matrix_product(g.at(0, 1), g.at(1, 0)),
                                         matrix_product(g.at(1, 0), g.at(0, 1)), PimenovScalar::one(),
                                         PimenovScalar::one());
        GeneratorMatrix diag = matrix_sum(matrix_product(g.at(0, 0), g.at(0, 0)),
                                          matrix_product(g.at(1, 1), g.at(1, 1)), PimenovScalar::one(),
                                          PimenovScalar::one());
        return matrix_sum(out, diag, PimenovScalar::one(), j1 * j1);
    }
    throw CasimirUnsupported("operator form beyond rank 2 needs unit parameters");
}

}  // namespace ckgz
