#include <doctest.h>

#include <random>

#include "ckgz/pimenov.hpp"

using namespace ckgz;

namespace {

PimenovScalar ps(double re) { return PimenovScalar(re); }

PimenovScalar random_scalar(std::mt19937_64& rng, int slots = 3) {
    std::uniform_real_distribution<double> dr(-2.0, 2.0);
    std::uniform_int_distribution<int> flip(0, 1);
    PimenovScalar out;
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask)
        if (flip(rng)) out.set_term(DualSupport(mask), Complex(dr(rng), dr(rng)));
    return out;
}

}  // namespace

TEST_CASE("addition merges supports and prunes cancellations") {
    PimenovScalar a = ps(1.0) + PimenovScalar::iota(1) * ps(2.0);
    PimenovScalar b = ps(3.0) - PimenovScalar::iota(1) * ps(2.0);
    PimenovScalar sum = a + b;
    CHECK(sum == ps(4.0));
    CHECK(sum.terms().size() == 1);

    PimenovScalar two = PimenovScalar::iota(1) + PimenovScalar::iota(2);
    CHECK(two.terms().size() == 2);

    PimenovScalar x = random_scalar(*new std::mt19937_64(7));
    CHECK((PimenovScalar::zero() + x) == x);
}

TEST_CASE("multiplication is nilpotent per unit and keeps distinct units") {
    CHECK((PimenovScalar::iota(1) * PimenovScalar::iota(1)).is_zero());
    PimenovScalar mixed = PimenovScalar::iota(1) * PimenovScalar::iota(2);
    CHECK(mixed.terms().size() == 1);
    CHECK(mixed.coeff(DualSupport::unit(1).united(DualSupport::unit(2))) == Complex(1.0, 0.0));

    // (k + i1 xi/2)(-k + i1 xi/2) at k=2, xi=1: dual parts cancel, square dies
    PimenovScalar k = ps(2.0), half = ps(0.5);
    PimenovScalar m13 = k + PimenovScalar::iota(1) * half;
    PimenovScalar m33 = -k + PimenovScalar::iota(1) * half;
    CHECK(distance(m13 * m33, ps(-4.0)) < 1e-15);
}

TEST_CASE("division by a monomial is strict") {
    PimenovScalar num = PimenovScalar::iota(1) * ps(0.7);
    CHECK(distance(div(num, PimenovScalar::iota(1)), ps(0.7)) < 1e-15);
    CHECK_THROWS_AS(div(ps(2.0) + PimenovScalar::iota(1), PimenovScalar::iota(1)), IndeterminateDivision);
    CHECK(distance(div(ps(6.0), ps(2.0)), ps(3.0)) < 1e-15);
}

TEST_CASE("square root expands to first order") {
    PimenovScalar a = ps(4.0) + PimenovScalar::iota(1) * ps(2.0);
    PimenovScalar r = sqrt(a);
    CHECK(distance(r, ps(2.0) + PimenovScalar::iota(1) * ps(0.5)) < 1e-15);
    CHECK(distance(sqrt(ps(9.0)), ps(3.0)) < 1e-15);
    CHECK_THROWS_AS(sqrt(PimenovScalar::iota(1)), SqrtUndefined);
    // principal imaginary root for negative real scalars
    CHECK(distance(sqrt(ps(-4.0)), PimenovScalar(Complex(0.0, 2.0))) < 1e-15);
}

TEST_CASE("parameter products") {
    CkParameterVector j(3, {SlotKind::dual, SlotKind::unit});
    auto p = parameter_product(j, 1, 2);
    CHECK(p.value == PimenovScalar::iota(1));
    CHECK(p.factor_set == std::vector<int>{1, 2});

    CkParameterVector ju(4, {SlotKind::unit, SlotKind::unit, SlotKind::unit});
    CHECK(parameter_product(ju, 1, 3).value == PimenovScalar::one());

    CkParameterVector ji(3, {SlotKind::imaginary, SlotKind::imaginary});
    CHECK(distance(parameter_product(ji, 1, 2).value, ps(-1.0)) < 1e-15);
}

TEST_CASE("real part extraction") {
    PimenovScalar a = ps(3.0) + PimenovScalar::iota(1) * ps(5.0);
    CHECK(a.real_part() == Complex(3.0, 0.0));
    CHECK((PimenovScalar::iota(1) * PimenovScalar::iota(2)).real_part() == Complex{});
    CHECK(PimenovScalar(Complex(2.0, -1.0)).real_part() == Complex(2.0, -1.0));
}

TEST_CASE("ring axioms on random values") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        PimenovScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        double scale = 1.0 + a.norm() * b.norm() * c.norm();
        CHECK(distance((a * b) * c, a * (b * c)) / scale < 1e-12);
        CHECK(distance(a * (b + c), a * b + a * c) / scale < 1e-12);
        CHECK(distance((a + b) + c, a + (b + c)) / scale < 1e-12);
        CHECK(distance(a * b, b * a) / scale < 1e-12);
    }
}

TEST_CASE("monomials with nonempty support square to zero") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> dr(-3.0, 3.0);
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
        PimenovScalar x = PimenovScalar::monomial(DualSupport(mask), Complex(dr(rng), dr(rng)));
        CHECK((x * x).is_zero());
    }
}

TEST_CASE("division undoes multiplication where defined") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> dr(0.5, 2.0);
    for (int it = 0; it < 100; ++it) {
        PimenovScalar a = random_scalar(rng);
        PimenovScalar d = PimenovScalar::monomial(DualSupport(it % 4), Complex(dr(rng), 0.0));
        PimenovScalar prod = a * d;
        // drop the part of `a` that the divisor's nilpotency kills
        PimenovScalar recovered = div(prod, d);
        CHECK(distance(recovered * d, prod) / (1.0 + prod.norm()) < 1e-12);
    }
}

TEST_CASE("sqrt squares back") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> dr(0.5, 4.0);
    for (int it = 0; it < 100; ++it) {
        PimenovScalar a = ps(dr(rng));
        for (int s = 1; s <= 3; ++s)
            a += PimenovScalar::monomial(DualSupport::unit(s), Complex(dr(rng) - 2.0, dr(rng) - 2.0));
        PimenovScalar r = sqrt(a);
        CHECK(distance(r * r, a) / (1.0 + a.norm()) < 1e-10);
    }
}

TEST_CASE("parameter product respects range nesting") {
    std::mt19937_64 rng(46);
    std::vector<SlotKind> kinds = {SlotKind::dual, SlotKind::imaginary, SlotKind::unit, SlotKind::dual};
    CkParameterVector j(5, kinds);
    for (int lo = 1; lo <= 4; ++lo)
        for (int hi = lo; hi <= 4; ++hi)
            for (int mid = lo; mid < hi; ++mid) {
                auto whole = parameter_product(j, lo, hi).value;
                auto split = parameter_product(j, lo, mid).value * parameter_product(j, mid + 1, hi).value;
                CHECK(distance(whole, split) < 1e-15);
            }
    (void)rng;
}

TEST_CASE("inverse of invertible values") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 50; ++it) {
        PimenovScalar a = random_scalar(rng) + ps(3.0);  // push the scalar part away from zero
        PimenovScalar inv = inverse(a);
        CHECK(distance(a * inv, PimenovScalar::one()) < 1e-10);
    }
    CHECK_THROWS_AS(inverse(PimenovScalar::iota(1)), IndeterminateDivision);
}
