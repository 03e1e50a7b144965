#include <cmath>

#include "ckgz/build.hpp"

namespace ckgz {

namespace {

Complex continued_radicand(double a, double b, double zeta, int m11, int dir) {
    // dir = -1 for the lowering coefficient at m11, +1 for raising.
    double x = zeta / 2.0 - m11;
    double re = a * a - b * (b + 1.0) + x * (x + (dir < 0 ? 1.0 : -1.0));
    double im = a * (2.0 * b + 1.0);
    return Complex(re, im);
}

}  // namespace

GeneratorSet build_u2_specialized(const CkLabelSet& labels, int m11_lo, int m11_hi) {
    if (labels.n() != 2) throw UnsupportedCase("closed-form builder is for rank 2");
    const SeriesTag tag = labels.tag();
    {
        auto v = validate(labels);
        if (!v.empty()) throw InvalidSeriesParameters("invalid labels: " + v.front().inequality);
    }

    bool lo_natural = false, hi_natural = false;
    if (tag == SeriesTag::discrete_upper) {
        int mt12 = labels.discrete({1, 2}).value();
        m11_lo = std::max(m11_lo, mt12 + 1);
        lo_natural = m11_lo == mt12 + 1;
    }
    if (tag == SeriesTag::discrete_lower) {
        int mt22 = labels.discrete({2, 2}).value();
        m11_hi = std::min(m11_hi, mt22 - 1);
        hi_natural = m11_hi == mt22 - 1;
    }
    if (m11_lo > m11_hi) throw InvalidSeriesParameters("empty basis window");

    std::vector<Axis> axes = {{"m11", AxisKind::discrete, m11_lo, m11_hi, lo_natural, hi_natural, {1, 1}, 0, true}};
    std::vector<std::vector<int>> entries;
    for (int m = m11_lo; m <= m11_hi; ++m) entries.push_back({m});
    BasisWindow window(axes, entries, 0);
    const int N = window.size();

    GeneratorSet out;
    out.labels = labels;
    out.window = window;

    GeneratorMatrix a00(0, 0, N), a11(1, 1, N), a01(0, 1, N), a10(1, 0, N);

    auto add_ladder = [&](int i, int m, Complex down, Complex up) {
        if (m - 1 >= m11_lo)
            a01.add(i, window.find({m - 1}), PimenovScalar(down));
        else if (std::abs(down) > 1e-12)
            a01.boundary_loss[i] = true;
        if (m + 1 <= m11_hi)
            a10.add(i, window.find({m + 1}), PimenovScalar(up));
        else if (std::abs(up) > 1e-12)
            a10.boundary_loss[i] = true;
    };

    switch (tag) {
        case SeriesTag::contracted: {
            double k = labels.amp(2), zeta = labels.phase(2);
            out.route = "specialized-u2-contracted";
            for (int i = 0; i < N; ++i) {
                int m = window.coords(i)[0];
                a00.add(i, i, PimenovScalar(zeta - m));
                a11.add(i, i, PimenovScalar(double(m)));
                add_ladder(i, m, Complex(k, 0.0), Complex(k, 0.0));
            }
            break;
        }
        case SeriesTag::continuous_series: {
            double a = labels.continuous("a").value();
            double zeta = labels.continuous("zeta").value();
            out.route = "specialized-u2-continuous";
            for (int i = 0; i < N; ++i) {
                int m = window.coords(i)[0];
                a00.add(i, i, PimenovScalar(zeta - m));
                a11.add(i, i, PimenovScalar(double(m)));
                // Hermitian closed form of the continuous series.
                double down = std::sqrt(a * a + std::pow(m - (1.0 + zeta) / 2.0, 2));
                double up = std::sqrt(a * a + std::pow(m + (1.0 - zeta) / 2.0, 2));
                add_ladder(i, m, down, up);
            }
            break;
        }
        case SeriesTag::additional_continuous: {
            double b = labels.continuous("b").value();
            double zeta = labels.continuous("zeta").value();
            out.route = "specialized-u2-additional";
            for (int i = 0; i < N; ++i) {
                int m = window.coords(i)[0];
                a00.add(i, i, PimenovScalar(zeta - m));
                a11.add(i, i, PimenovScalar(double(m)));
                double rd = std::pow(m - (zeta + 1.0) / 2.0, 2) - std::pow(b + 0.5, 2);
                double ru = std::pow(m - (zeta - 1.0) / 2.0, 2) - std::pow(b + 0.5, 2);
                add_ladder(i, m, std::sqrt(Complex(rd, 0.0)), std::sqrt(Complex(ru, 0.0)));
            }
            break;
        }
        case SeriesTag::continued_general: {
            double a = labels.continuous("a").value();
            double b = labels.continuous("b").value();
            double zeta = labels.continuous("zeta").value();
            out.route = "specialized-u2-continued";
            for (int i = 0; i < N; ++i) {
                int m = window.coords(i)[0];
                a00.add(i, i, PimenovScalar(zeta - m));
                a11.add(i, i, PimenovScalar(double(m)));
                add_ladder(i, m, std::sqrt(continued_radicand(a, b, zeta, m, -1)),
                           std::sqrt(continued_radicand(a, b, zeta, m, +1)));
            }
            break;
        }
        case SeriesTag::discrete_upper:
        case SeriesTag::discrete_lower: {
            int mt12 = labels.discrete({1, 2}).value();
            int mt22 = labels.discrete({2, 2}).value();
            out.route = "specialized-u2-discrete";
            for (int i = 0; i < N; ++i) {
                int m = window.coords(i)[0];
                a00.add(i, i, PimenovScalar(double(mt12 + mt22 - m)));
                a11.add(i, i, PimenovScalar(double(m)));
                double rd = -double(mt12 - m + 1) * double(m - mt22);
                double ru = -double(mt12 - m) * double(m + 1 - mt22);
                Complex down = std::sqrt(Complex(rd, 0.0));
                Complex up = std::sqrt(Complex(ru, 0.0));
                if (std::abs(rd) < 1e-12) down = 0.0;  // ladder end
                if (std::abs(ru) < 1e-12) up = 0.0;
                add_ladder(i, m, down, up);
            }
            break;
        }
        default:
            throw UnsupportedCase("no closed-form transcription for " + to_string(tag));
    }

    out.gens[{0, 0}] = std::move(a00);
    out.gens[{1, 1}] = std::move(a11);
    out.gens[{0, 1}] = std::move(a01);
    out.gens[{1, 0}] = std::move(a10);
    return out;
}

}  // namespace ckgz
