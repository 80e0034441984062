#include <catch2/catch_amalgamated.hpp>

#include "fedosov/fiber.hpp"
#include "fedosov/rational.hpp"
#include "test_helpers.hpp"

using namespace fedosov;
using namespace fedosov::testing;

TEST_CASE("gaussian rational arithmetic is exact") {
    GaussRat a = qi(1, 3, 2, 5);
    GaussRat b = qi(-2, 7, 1, 1);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a * (GaussRat(1) / a) == GaussRat(1));
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK(a.conj() * a == GaussRat(mpq_class(1, 9) + mpq_class(4, 25)));
}

TEST_CASE("randomized field axioms") {
    // small deterministic sweep standing in for a fuzz pass
    std::vector<GaussRat> pool;
    for (long n = -3; n <= 3; ++n)
        for (long d = 1; d <= 3; ++d) pool.push_back(qi(n, d, d - 2, 2));
    for (std::size_t i = 0; i < pool.size(); i += 3)
        for (std::size_t j = 1; j < pool.size(); j += 5)
            for (std::size_t k = 2; k < pool.size(); k += 7) {
                const auto &a = pool[i], &b = pool[j], &c = pool[k];
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
}

TEST_CASE("fiber_mul pairing table") {
    // Scalar(2) * Scalar(3+i) = 6+2i
    FiberValue s2 = fv(2);
    FiberValue s3i(qi(3, 1, 1, 1));
    CHECK(fiber_mul(s2, s3i) == FiberValue(qi(6, 1, 2, 1)));

    FiberValue id2 = FiberValue::matrix(2, {q(1), q(0), q(0), q(1)});
    FiberValue e10 = FiberValue::vector({q(1), q(0)});
    CHECK(fiber_mul(id2, e10) == e10);

    FiberValue n1 = FiberValue::matrix(2, {q(0), q(1), q(0), q(0)});
    FiberValue n2 = FiberValue::matrix(2, {q(0), q(0), q(1), q(0)});
    CHECK(fiber_mul(n1, n2) == FiberValue::matrix(2, {q(1), q(0), q(0), q(0)}));

    CHECK_THROWS_AS(fiber_mul(e10, e10), IncompatiblePairing);
    CHECK_THROWS_AS(fiber_mul(e10, n1), IncompatiblePairing);
}

TEST_CASE("fiber_trace") {
    FiberValue id2 = FiberValue::matrix(2, {q(1), q(0), q(0), q(1)}); // normalizes to Scalar(1)
    CHECK(fiber_trace(id2, 2) == q(2));
    FiberValue n1 = FiberValue::matrix(2, {q(0), q(1), q(0), q(0)});
    CHECK(fiber_trace(n1, 2) == q(0));
    CHECK(fiber_trace(FiberValue(qi(1, 1, 1, 1)), 3) == qi(3, 1, 3, 1));
    CHECK_THROWS_AS(fiber_trace(FiberValue::vector({q(1)}), 1), NotTraceable);
}

TEST_CASE("trace is cyclic on matrix pairs") {
    auto m = [](long a, long b, long c, long d) {
        return FiberValue::matrix(2, {q(a), q(b), q(c), q(d)});
    };
    std::vector<FiberValue> pool = {m(1, 2, 3, 4), m(0, 1, -1, 0), m(2, 0, 5, -3), m(1, 1, 1, 1)};
    for (const auto& a : pool)
        for (const auto& b : pool)
            CHECK(fiber_trace(fiber_mul(a, b), 2) == fiber_trace(fiber_mul(b, a), 2));
}

TEST_CASE("central matrices normalize to scalars") {
    FiberValue c = FiberValue::matrix(2, {q(5, 3), q(0), q(0), q(5, 3)});
    CHECK(c.is_scalar());
    CHECK(c.is_central());
    FiberValue nc = FiberValue::matrix(2, {q(5, 3), q(1), q(0), q(5, 3)});
    CHECK(!nc.is_central());
}
