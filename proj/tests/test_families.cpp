#include <doctest.h>

#include <random>

#include <pmat/families.hpp>
#include <pmat/numtheory.hpp>

using namespace pmat;

TEST_CASE("symmetric Pascal matrix entries") {
    MatZ p = pascal_symmetric(4);
    CHECK(p.at(0, 0) == 1);
    CHECK(p.at(3, 3) == 20);
    for (long long i = 0; i < 4; ++i)
        for (long long j = 0; j < 4; ++j) {
            CHECK(p.at(i, j) == binomial_z(i + j, i));
            CHECK(p.at(i, j) == p.at(j, i));
        }
    CHECK(pascal_symmetric(0).rows() == 0);
    CHECK_THROWS_AS(pascal_symmetric(-1), shape_error);
}

TEST_CASE("mod-p Pascal builder agrees with reduction") {
    for (long long p : {2LL, 3LL, 5LL, 13LL}) {
        FpDomain dom(p);
        for (long long n : {1LL, 7LL, 30LL})
            CHECK(pascal_symmetric_fp(n, dom) == reduce_mod(pascal_symmetric(n), dom));
    }
}

TEST_CASE("reduced Pascal matrices use balanced residues") {
    MatZ r2 = pascal_reduced(4, 2);
    for (long long i = 0; i < 4; ++i)
        for (long long j = 0; j < 4; ++j) {
            mpz_class v = r2.at(i, j);
            CHECK((v == 0 || v == 1));
            CHECK(v == binomial_z(i + j, i) % 2);
        }
    MatZ r3 = pascal_reduced(5, 3);
    for (long long i = 0; i < 5; ++i)
        for (long long j = 0; j < 5; ++j) {
            mpz_class v = r3.at(i, j);
            CHECK(v >= -1);
            CHECK(v <= 1);
            CHECK((pascal_symmetric(5).at(i, j) - v) % 3 == 0);
        }
    CHECK_THROWS_AS(pascal_reduced(4, 5), unsupported_reduction_error);
}

TEST_CASE("triangular families and their signs") {
    MatZ t = triangular(TriKind::T, 4);
    CHECK(t.at(3, 1) == 3);
    CHECK(t.at(1, 3) == 0);

    // L carries row signs, Ltilde column signs
    MatZ l = triangular(TriKind::L, 4);
    MatZ lt = triangular(TriKind::Ltilde, 4);
    for (long long i = 0; i < 4; ++i)
        for (long long j = 0; j <= i; ++j) {
            mpz_class c = binomial_z(i, j);
            CHECK(l.at(i, j) == (i % 2 == 0 ? c : -c));
            CHECK(lt.at(i, j) == (j % 2 == 0 ? c : -c));
        }

    // Ltilde is an involution
    for (long long n : {1LL, 4LL, 9LL})
        CHECK(triangular(TriKind::Ltilde, n) * triangular(TriKind::Ltilde, n) ==
              MatZ::identity(n, ZDomain{}));

    FpDomain d7(7);
    CHECK(triangular_fp(TriKind::L, 4, d7) == reduce_mod(l, d7));
    CHECK(triangular_fp(TriKind::Ltilde, 4, d7) == reduce_mod(lt, d7));
}

TEST_CASE("shifted Pascal families") {
    // k = 0 recovers the plain symmetric matrix
    CHECK(shifted_pascal(5, 0) == pascal_symmetric(5));
    MatZ s = shifted_pascal(3, 2);
    for (long long i = 0; i < 3; ++i)
        for (long long j = 0; j < 3; ++j)
            CHECK(s.at(i, j) == binomial_z(i + j + 4, i + 2));

    FpDomain d5(5);
    CHECK(shifted_pascal_fp(4, 3, d5) == reduce_mod(shifted_pascal(4, 3), d5));

    // the unit-determinant rectangle-shift family
    for (long long r = 1; r <= 10; ++r)
        for (long long k = 0; k <= 10; ++k)
            CHECK(shifted_unit_pascal(r, k).det_exact() == 1);
}

TEST_CASE("symmetric powers of 2x2 matrices") {
    FpDomain d5(5);
    // pinned 3x3 example
    MatFp sa = sympower(1, 1, 0, 1, 3, d5);
    MatFp sb = sympower(1, 0, 1, 1, 3, d5);
    MatFp sab = sympower(2, 1, 1, 1, 3, d5); // product of the two generators
    MatFp want(3, 3, d5);
    long long rows[3][3] = {{4, 4, 1}, {2, 3, 1}, {1, 2, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) want.at(i, j) = rows[i][j];
    CHECK(sa * sb == want);
    CHECK(sab == want);

    CHECK_THROWS_AS(sympower(1, 1, 0, 1, 0, d5), parameter_error);
    CHECK_THROWS_AS(sympower(1, 2, 2, 4, 3, d5), singular_generator_error);

    // multiplicativity on random nonsingular pairs
    std::mt19937 rng(4242);
    FpDomain d13(13);
    std::uniform_int_distribution<long long> e(0, 12);
    int done = 0;
    while (done < 50) {
        long long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        long long a2 = e(rng), b2 = e(rng), c2 = e(rng), d2 = e(rng);
        if ((a * d - b * c) % 13 == 0 || (a2 * d2 - b2 * c2) % 13 == 0) continue;
        long long n = 2 + static_cast<long long>(rng() % 11);
        MatFp lhs = sympower(a, b, c, d, n, d13) * sympower(a2, b2, c2, d2, n, d13);
        long long pa = (a * a2 + b * c2) % 13, pb = (a * b2 + b * d2) % 13;
        long long pc = (c * a2 + d * c2) % 13, pd = (c * b2 + d * d2) % 13;
        CHECK(lhs == sympower(pa, pb, pc, pd, n, d13));
        ++done;
    }
}

TEST_CASE("sympower of the order-3 rotation has order 3") {
    const std::pair<long long, long long> cases[] = {
        {2, 2}, {4, 2}, {8, 2}, {3, 3}, {9, 3}, {5, 5}, {7, 7}};
    for (auto [q, p] : cases) {
        FpDomain dom(p);
        MatFp s = sympower(1, -1, 1, 0, q, dom);
        CHECK(s.power(3) == MatFp::identity(q, dom));
    }
}

TEST_CASE("Pascal matrices mod 2 tile as Kronecker squares") {
    // the 2n x 2n reduction contains the n x n one in each quadrant pattern
    FpDomain d2(2);
    for (long long m = 1; m <= 4; ++m) {
        long long n = 1LL << m;
        MatFp big = pascal_symmetric_fp(n, d2);
        MatFp half = pascal_symmetric_fp(n / 2, d2);
        for (long long i = 0; i < n / 2; ++i)
            for (long long j = 0; j < n / 2; ++j) {
                CHECK(big.at(i, j) == half.at(i, j));                    // C(i+j, i)
                CHECK(big.at(i + n / 2, j + n / 2) == 0);                // middle digit carries
            }
    }
}
