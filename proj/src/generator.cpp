#include "ckgz/generator.hpp"

#include <algorithm>

namespace ckgz {

void GeneratorMatrix::add(int col, int row, const PimenovScalar& v) {
    if (v.is_zero()) return;
    auto& c = cols.at(col);
    for (auto& [r0, v0] : c)
        if (r0 == row) {
            v0 += v;
            return;
        }
    c.emplace_back(row, v);
}

PimenovScalar GeneratorMatrix::entry(int row, int col) const {
    for (const auto& [r0, v0] : cols.at(col))
        if (r0 == row) return v0;
    return PimenovScalar::zero();
}

ApplyResult apply(const GeneratorMatrix& g, const State& state) {
    ApplyResult out;
    for (const auto& [idx, coeff] : state) {
        if (g.boundary_loss.at(idx)) out.boundary_loss = true;
        if (g.jet_overflow.at(idx)) out.jet_overflow = true;
        for (const auto& [row, v] : g.cols.at(idx)) {
            PimenovScalar acc = out.state.count(row) ? out.state[row] : PimenovScalar::zero();
            acc += v * coeff;
            if (acc.is_zero())
                out.state.erase(row);
            else
                out.state[row] = acc;
        }
    }
    return out;
}

namespace {

template <typename M, typename S>
M product_impl(const M& a, const M& b) {
    M out(0, 0, static_cast<int>(b.cols.size()));
    out.boundary_loss.assign(b.cols.size(), false);
    for (int col = 0; col < static_cast<int>(b.cols.size()); ++col) {
        bool loss = b.boundary_loss[col];
        for (const auto& [mid, vb] : b.cols[col]) {
            if (a.boundary_loss[mid]) loss = true;
            for (const auto& [row, va] : a.cols[mid]) out.add(col, row, va * vb);
        }
        out.boundary_loss[col] = loss;
    }
    return out;
}

}  // namespace

GeneratorMatrix matrix_product(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    GeneratorMatrix out = product_impl<GeneratorMatrix, PimenovScalar>(a, b);
    for (int col = 0; col < out.ncols(); ++col) {
        bool jet = b.jet_overflow[col];
        for (const auto& [mid, vb] : b.cols[col])
            if (a.jet_overflow[mid]) jet = true;
        out.jet_overflow[col] = jet;
    }
    return out;
}

GeneratorMatrix matrix_sum(const GeneratorMatrix& a, const GeneratorMatrix& b, const PimenovScalar& ca,
                           const PimenovScalar& cb) {
    GeneratorMatrix out(a.k, a.r, a.ncols());
    for (int col = 0; col < a.ncols(); ++col) {
        for (const auto& [row, v] : a.cols[col]) out.add(col, row, v * ca);
        for (const auto& [row, v] : b.cols[col]) out.add(col, row, v * cb);
        out.boundary_loss[col] = a.boundary_loss[col] || b.boundary_loss[col];
        out.jet_overflow[col] = a.jet_overflow[col] || b.jet_overflow[col];
    }
    return out;
}

GeneratorMatrix matrix_scale(const GeneratorMatrix& a, const PimenovScalar& c) {
    GeneratorMatrix out(a.k, a.r, a.ncols());
    for (int col = 0; col < a.ncols(); ++col)
        for (const auto& [row, v] : a.cols[col]) out.add(col, row, v * c);
    out.boundary_loss = a.boundary_loss;
    out.jet_overflow = a.jet_overflow;
    return out;
}

GeneratorMatrix commutator(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    GeneratorMatrix ab = matrix_product(a, b);
    GeneratorMatrix ba = matrix_product(b, a);
    GeneratorMatrix out = matrix_sum(ab, ba, PimenovScalar::one(), PimenovScalar(-1.0));
    out.k = a.k;
    out.r = b.r;
    return out;
}

void SeriesMatrix::add(int col, int row, const LaurentSeries& v) {
    if (v.is_zero()) return;
    auto& c = cols.at(col);
    for (auto& [r0, v0] : c)
        if (r0 == row) {
            v0 += v;
            return;
        }
    c.emplace_back(row, v);
}

LaurentSeries SeriesMatrix::entry(int row, int col) const {
    for (const auto& [r0, v0] : cols.at(col))
        if (r0 == row) return v0;
    return LaurentSeries::zero();
}

SeriesMatrix commutator(const SeriesMatrix& a, const SeriesMatrix& b) {
    SeriesMatrix ab = product_impl<SeriesMatrix, LaurentSeries>(a, b);
    SeriesMatrix ba = product_impl<SeriesMatrix, LaurentSeries>(b, a);
    SeriesMatrix out = matrix_sum(ab, ba, LaurentSeries::one(), LaurentSeries(-1.0));
    out.k = a.k;
    out.r = b.r;
    return out;
}

SeriesMatrix matrix_sum(const SeriesMatrix& a, const SeriesMatrix& b, const LaurentSeries& ca,
                        const LaurentSeries& cb) {
    SeriesMatrix out(a.k, a.r, static_cast<int>(a.cols.size()));
    for (int col = 0; col < static_cast<int>(a.cols.size()); ++col) {
        for (const auto& [row, v] : a.cols[col]) out.add(col, row, v * ca);
        for (const auto& [row, v] : b.cols[col]) out.add(col, row, v * cb);
        out.boundary_loss[col] = a.boundary_loss[col] || b.boundary_loss[col];
    }
    return out;
}

const GeneratorMatrix& GeneratorSet::at(int k, int r) const {
    auto it = gens.find({k, r});
    if (it == gens.end()) throw std::out_of_range("no generator A_" + std::to_string(k) + std::to_string(r));
    return it->second;
}

PimenovScalar generator_parameter(const CkParameterVector& j, int k, int r) {
    int lo = std::min(k, r) + 1, hi = std::max(k, r);
    PimenovScalar out = PimenovScalar::one();
    for (int l = lo; l <= hi; ++l) out *= j.slot_value(l);
    return out;
}

}  // namespace ckgz
