#include <doctest.h>

#include <random>

#include <pmat/poly.hpp>

using namespace pmat;

namespace {

PolyFp random_poly(std::mt19937& rng, const FpDomain& dom, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long long> coeff(0, dom.p - 1);
    std::vector<long long> cs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = coeff(rng);
    return PolyFp(dom, std::move(cs));
}

} // namespace

TEST_CASE("construction and basic queries") {
    ZDomain z;
    PolyZ f = PolyZ::from_ints(z, {1, 0, -3, 2});
    CHECK(f.degree() == 3);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(2) == -3);
    CHECK(f.coeff(7) == 0); // past the degree
    CHECK(f.lc() == 2);
    CHECK_FALSE(f.is_monic());
    CHECK(PolyZ::zero(z).degree() == -1);
    CHECK(PolyZ::one(z).is_one());
    CHECK(PolyZ::t_power(z, 4).degree() == 4);

    // trailing zeros are normalized away
    PolyZ g(z, {mpz_class(5), mpz_class(0), mpz_class(0)});
    CHECK(g.degree() == 0);
}

TEST_CASE("arithmetic identities on random field polynomials") {
    FpDomain dom(101);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        PolyFp a = random_poly(rng, dom, 9);
        PolyFp b = random_poly(rng, dom, 9);
        PolyFp c = random_poly(rng, dom, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == PolyFp::zero(dom));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("divrem round-trips") {
    FpDomain dom(13);
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        PolyFp a = random_poly(rng, dom, 12);
        PolyFp b = random_poly(rng, dom, 6);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("integer division requires a monic divisor") {
    ZDomain z;
    PolyZ f = PolyZ::from_ints(z, {-1, 0, 1});     // t^2 - 1
    PolyZ monic = PolyZ::from_ints(z, {1, 1});     // t + 1
    PolyZ nonmonic = PolyZ::from_ints(z, {1, 2}); // 2t + 1
    auto [q, r] = f.divrem(monic);
    CHECK(q == PolyZ::from_ints(z, {-1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(f.divrem(nonmonic), nonmonic_divisor_error);
}

TEST_CASE("divexact enforces exactness") {
    ZDomain z;
    PolyZ f = PolyZ::from_ints(z, {1, 2, 1});  // (t+1)^2
    PolyZ g = PolyZ::from_ints(z, {1, 1});
    CHECK(f.divexact(g) == g);
    CHECK_THROWS_AS(f.divexact(PolyZ::from_ints(z, {2, 1})), division_error); // t + 2 leaves a remainder
    CHECK_THROWS_AS(f.divexact(PolyZ::from_ints(z, {1, 3})), nonmonic_divisor_error);
    CHECK_THROWS_AS(f.divexact(PolyZ::zero(z)), division_error);
}

TEST_CASE("pow, eval, derivative, composition") {
    ZDomain z;
    PolyZ t1 = PolyZ::from_ints(z, {1, 1});
    PolyZ f = t1.pow(5);
    CHECK(f.degree() == 5);
    CHECK(f.coeff(2) == 10);
    CHECK(f.eval(mpz_class(1)) == 32);
    CHECK(f.derivative() == PolyZ::constant(z, 5) * t1.pow(4));

    // f(-t) and f(t^2)
    PolyZ g = PolyZ::from_ints(z, {1, -2, 3});
    CHECK(g.compose_neg_t() == PolyZ::from_ints(z, {1, 2, 3}));
    CHECK(g.compose_t_power(2) == PolyZ::from_ints(z, {1, 0, -2, 0, 3}));
}

TEST_CASE("powmod matches pow reduced") {
    FpDomain dom(7);
    PolyFp base = PolyFp::from_ints(dom, {3, 1});
    PolyFp mod = PolyFp::from_ints(dom, {1, 0, 0, 1}); // t^3 + 1
    PolyFp direct = base.pow(12).divrem(mod).second;
    CHECK(base.powmod(12, mod) == direct);
}

TEST_CASE("multiplicity extraction") {
    ZDomain z;
    PolyZ t1 = PolyZ::from_ints(z, {1, 1});
    PolyZ t2 = PolyZ::from_ints(z, {1, 1, 1});
    for (long long m = 0; m <= 30; ++m) {
        PolyZ f = t1.pow(m) * t2;
        auto [mult, cof] = f.extract_multiplicity(t1);
        CHECK(mult == m);
        CHECK(cof == t2);
    }
    CHECK_THROWS_AS(t1.extract_multiplicity(PolyZ::one(z)), parameter_error);
}

TEST_CASE("palindromic predicates") {
    ZDomain z;
    CHECK(PolyZ::from_ints(z, {1, -2, 0, -2, 1}).is_palindromic(1));
    CHECK_FALSE(PolyZ::from_ints(z, {1, -2, 0, 2, 1}).is_palindromic(1));
    CHECK(PolyZ::from_ints(z, {1, 0, -1}).is_palindromic(-1)); // t^2 - 1
    CHECK(PolyZ::from_ints(z, {-1, 3, -3, 1}).is_palindromic(-1));
}

TEST_CASE("gcd of field polynomials is monic and divides both") {
    FpDomain dom(5);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        PolyFp a = random_poly(rng, dom, 8);
        PolyFp b = random_poly(rng, dom, 8);
        if (a.is_zero() || b.is_zero()) continue;
        PolyFp g = poly_gcd(a, b);
        CHECK(g.is_monic());
        CHECK(a.divrem(g).second.is_zero());
        CHECK(b.divrem(g).second.is_zero());
    }
}

TEST_CASE("radical strips all multiplicities, including p-fold ones") {
    FpDomain d3(3);
    PolyFp t1 = PolyFp::from_ints(d3, {1, 1});
    PolyFp tm1 = PolyFp::from_ints(d3, {-1, 1});
    // (t+1)^9 (t-1)^2: the first factor disappears from the derivative entirely
    PolyFp f = t1.pow(9) * tm1.pow(2);
    CHECK(radical(f) == (t1 * tm1).monic());

    FpDomain d2(2);
    PolyFp g = PolyFp::from_ints(d2, {1, 1}).pow(8);
    CHECK(radical(g) == PolyFp::from_ints(d2, {1, 1}));
}

TEST_CASE("reduce_mod wraps coefficients into [0, p)") {
    ZDomain z;
    FpDomain d7(7);
    PolyZ f = PolyZ::from_ints(z, {-1, 15, -9, 7});
    PolyFp r = reduce_mod(f, d7);
    CHECK(r == PolyFp::from_ints(d7, {6, 1, 5}));
}

TEST_CASE("crt lifting") {
    ZDomain z;
    PolyZ target = PolyZ::from_ints(z, {-12, 0, 30, 1});
    std::vector<std::pair<PolyFp, long long>> residues;
    for (long long p : {37LL, 41LL, 43LL})
        residues.emplace_back(reduce_mod(target, FpDomain(p)), p);
    CHECK(crt_lift(residues, 3) == target);

    // symmetric range: a negative coefficient near the bound survives
    PolyZ big = PolyZ::from_ints(z, {-30000, 1});
    std::vector<std::pair<PolyFp, long long>> r2;
    for (long long p : {251LL, 257LL})
        r2.emplace_back(reduce_mod(big, FpDomain(p)), p);
    CHECK(crt_lift(r2, 1) == big);

    CHECK_THROWS_AS(crt_lift({}, 2), parameter_error);
    std::vector<std::pair<PolyFp, long long>> dup = {
        {reduce_mod(target, FpDomain(37)), 37},
        {reduce_mod(target, FpDomain(37)), 37},
    };
    CHECK_THROWS_AS(crt_lift(dup, 3), parameter_error);
    CHECK_THROWS_AS(crt_lift(residues, 5), degree_mismatch_error);
}

TEST_CASE("roots of two-power order") {
    FpDomain d3(3);
    PolyFp t1 = PolyFp::from_ints(d3, {1, 1});
    PolyFp tm1 = PolyFp::from_ints(d3, {-1, 1});
    CHECK(roots_have_two_power_order(t1 * tm1));
    CHECK(roots_have_two_power_order(t1.pow(5) * tm1.pow(2)));

    // t^2 + t + 1 over F_2 has roots of order 3
    FpDomain d2(2);
    CHECK_FALSE(roots_have_two_power_order(PolyFp::from_ints(d2, {1, 1, 1})));

    CHECK_THROWS_AS(roots_have_two_power_order(PolyFp::from_ints(d2, {0, 1})),
                    zero_root_error);
    CHECK_THROWS_AS(roots_have_two_power_order(PolyFp::zero(d2)), zero_root_error);
}
