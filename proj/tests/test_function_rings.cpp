#include <catch2/catch_amalgamated.hpp>

#include "fedosov/function_ring.hpp"
#include "test_helpers.hpp"

using namespace fedosov;
using namespace fedosov::testing;

TEST_CASE("jet product truncates at the trust horizon") {
    // (1 + x0)(1 - x0) at J = 2  ->  1 - x0^2
    FunctionElement a = jet_const(2, q(1)).add(jet_term(2, {1, 0}, fv(1), 2));
    a.jet().set_budgets(2, 2);
    FunctionElement b = jet_const(2, q(1)).add(jet_term(2, {1, 0}, fv(-1), 2));
    b.jet().set_budgets(2, 2);
    FunctionElement expect = jet_const(2, q(1)).add(jet_term(2, {2, 0}, fv(-1)));
    CHECK(a.mul(b) == expect);
}

TEST_CASE("budget bookkeeping flags exhausted products") {
    // x0 * x1 with usable budgets 1 and 1: the order-2 term survives but the
    // derivative meter hits zero
    FunctionElement a = jet_term(2, {1, 0}, fv(1), 1);
    FunctionElement b = jet_term(2, {0, 1}, fv(1), 1);
    FunctionElement p = a.mul(b);
    CHECK(p == jet_term(2, {1, 1}, fv(1)));
    CHECK(p.jet().usable() == 0);
    CHECK_THROWS_AS(p.partial(0), InsufficientJetOrder);
}

TEST_CASE("torus product and inverse mode") {
    FunctionElement e = torus_term(2, {1, 0}, fv(1));
    FunctionElement einv = torus_term(2, {-1, 0}, fv(1));
    CHECK(e.mul(einv) == FunctionElement::one(Backend::Torus, 2));
}

TEST_CASE("jet partial derivative") {
    FunctionElement x0sq = jet_term(2, {2, 0}, fv(1), 5);
    CHECK(x0sq.partial(0) == jet_term(2, {1, 0}, fv(2)));
    CHECK(x0sq.partial(0).jet().usable() == 4);
}

TEST_CASE("torus partial derivative brings down i k") {
    FunctionElement e = torus_term(2, {1, 0}, fv(1));
    CHECK(e.partial(0) == torus_term(2, {1, 0}, FiberValue(GaussRat::i())));
    CHECK(e.partial(1).is_zero());
}

TEST_CASE("partial of a constant is exactly zero even at budget zero") {
    FunctionElement c = jet_const(2, q(7, 2));
    c.jet().set_budgets(0, 0);
    CHECK(c.partial(0).is_zero());
}

TEST_CASE("fn_integrate extracts the constant mode") {
    CHECK(fn_integrate(FunctionElement::one(Backend::Torus, 2)) == fv(1));
    CHECK(fn_integrate(torus_term(2, {1, 0}, fv(1))) == fv(0));
    FunctionElement f = jet_const(2, q(3)); // jets cannot be integrated
    CHECK_THROWS_AS(fn_integrate(f), UnsupportedBackend);
    FunctionElement g =
        FunctionElement::constant(Backend::Torus, 2, fv(3)).add(torus_term(2, {0, 2}, fv(1)));
    CHECK(fn_integrate(g) == fv(3));
}

TEST_CASE("partials commute and satisfy Leibniz on both backends") {
    FunctionElement j = jet_term(2, {2, 1}, fv(1, 2), 6)
                            .add(jet_term(2, {0, 2}, fv(-2), 6))
                            .add(jet_const(2, q(1, 3)));
    FunctionElement k = jet_term(2, {1, 1}, fv(3), 6).add(jet_term(2, {1, 0}, fv(1, 4), 6));
    CHECK(j.partial(0).partial(1) == j.partial(1).partial(0));
    CHECK(j.mul(k).partial(0) == j.partial(0).mul(k).add(j.mul(k.partial(0))));

    FunctionElement t = torus_term(2, {1, -1}, fv(1, 2)).add(torus_term(2, {0, 2}, fv(1)));
    FunctionElement u = torus_term(2, {-1, 0}, fv(2)).add(torus_term(2, {1, 1}, fv(1, 3)));
    CHECK(t.partial(0).partial(1) == t.partial(1).partial(0));
    CHECK(t.mul(u).partial(1) == t.partial(1).mul(u).add(t.mul(u.partial(1))));
}

TEST_CASE("integral of a torus derivative vanishes") {
    FunctionElement t = torus_term(2, {1, -1}, fv(1, 2)).add(torus_term(2, {0, 2}, fv(5, 3)));
    CHECK(fn_integrate(t.partial(0)) == fv(0));
    CHECK(fn_integrate(t.partial(1)) == fv(0));
}

TEST_CASE("backend mixing is rejected") {
    FunctionElement j = jet_const(2, q(1));
    FunctionElement t = FunctionElement::one(Backend::Torus, 2);
    CHECK_THROWS_AS(j.mul(t), BackendMismatch);
    CHECK_THROWS_AS(j.add(t), BackendMismatch);
}
