#include <doctest.h>

#include <random>

#include <pmat/families.hpp>
#include <pmat/matrix.hpp>

using namespace pmat;

namespace {

MatZ random_mat(std::mt19937& rng, long long n) {
    std::uniform_int_distribution<long> entry(-4, 4);
    MatZ m(n, n, ZDomain{});
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

} // namespace

TEST_CASE("shape bookkeeping and equality") {
    ZDomain z;
    MatZ a(2, 3, z);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 3);
    CHECK_FALSE(a.is_square());
    CHECK(a == MatZ(2, 3, z));
    a.at(1, 2) = 5;
    CHECK(a != MatZ(2, 3, z));
    CHECK(a.transpose().at(2, 1) == 5);
    CHECK_THROWS_AS(a.det_exact(), shape_error);
    CHECK_THROWS_AS(a * MatZ(2, 2, z), shape_error);

    // degenerate but legal
    MatZ empty(0, 0, z);
    CHECK(empty.det_exact() == 1);
    CHECK(empty.charpoly().is_one());
}

TEST_CASE("determinant pins") {
    ZDomain z;
    MatZ m(2, 2, z);
    m.at(0, 0) = 3; m.at(0, 1) = 7;
    m.at(1, 0) = 1; m.at(1, 1) = 4;
    CHECK(m.det_exact() == 5);
    CHECK(pascal_symmetric(8).det_exact() == 1);

    // needs the pivoting path: leading entry is zero
    MatZ s(2, 2, z);
    s.at(0, 1) = 1; s.at(1, 0) = 1;
    CHECK(s.det_exact() == -1);

    FpDomain d5(5);
    MatFp f = reduce_mod(m, d5);
    CHECK(f.det_exact() == 0); // 5 mod 5
}

TEST_CASE("determinant is multiplicative on random integer matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        long long n = 1 + static_cast<long long>(rng() % 8);
        MatZ a = random_mat(rng, n);
        MatZ b = random_mat(rng, n);
        CHECK((a * b).det_exact() == a.det_exact() * b.det_exact());
    }
}

TEST_CASE("leading principal minors") {
    // every leading minor of the symmetric Pascal matrix is 1
    MatZ p = pascal_symmetric(9);
    for (const auto& d : p.leading_principal_minors()) CHECK(d == 1);

    ZDomain z;
    MatZ s(2, 2, z);
    s.at(0, 1) = 1; s.at(1, 0) = 1;
    CHECK_THROWS_AS(s.leading_principal_minors(), zero_pivot_error);
}

TEST_CASE("charpoly of the 3x3 Pascal matrix") {
    PolyZ chi = pascal_symmetric(3).charpoly();
    CHECK(chi == PolyZ::from_ints(ZDomain{}, {-1, 9, -9, 1}));
    // trace and determinant sit in the expected coefficients
    CHECK(pascal_symmetric(3).trace() == 9);
}

TEST_CASE("charpoly: division-free and field paths agree") {
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        FpDomain dom(p);
        for (long long n = 0; n <= 12; ++n) {
            MatZ a = pascal_symmetric(n);
            PolyZ chi_z = a.charpoly();
            PolyFp chi_p = reduce_mod(a, dom).charpoly();
            CHECK(reduce_mod(chi_z, dom) == chi_p);
        }
    }
    // same cross-check on a matrix with zero pivots along the way
    std::mt19937 rng(31337);
    FpDomain d7(7);
    for (int trial = 0; trial < 25; ++trial) {
        MatZ a = random_mat(rng, 6);
        CHECK(reduce_mod(a.charpoly(), d7) == reduce_mod(a, d7).charpoly());
    }
}

TEST_CASE("characteristic polynomial symmetry of Pascal matrices") {
    // chi_n(t) = (-t)^n chi_n(1/t), i.e. palindromic with sign (-1)^n
    for (long long n = 1; n <= 20; ++n) {
        PolyZ chi = pascal_symmetric(n).charpoly();
        CHECK(chi.is_palindromic(n % 2 == 0 ? 1 : -1));
    }
    // odd sizes force the eigenvalue 1
    for (long long n = 1; n <= 19; n += 2) {
        PolyZ chi = pascal_symmetric(n).charpoly();
        CHECK(chi.eval(mpz_class(1)) == 0);
    }
}

TEST_CASE("Cholesky-style factorization P = T T^t") {
    for (long long n : {0LL, 1LL, 2LL, 5LL, 16LL, 32LL}) {
        MatZ t = triangular(TriKind::T, n);
        CHECK(t * t.transpose() == pascal_symmetric(n));
    }
}

TEST_CASE("inverse") {
    // unimodular integer matrix: lower Pascal triangle
    MatZ t = triangular(TriKind::T, 3);
    MatZ inv = t.inverse();
    for (long long i = 0; i < 3; ++i)
        for (long long j = 0; j < 3; ++j) {
            mpz_class want = binomial_z(i, j);
            if ((i + j) % 2 == 1) want = -want;
            CHECK(inv.at(i, j) == want);
        }
    CHECK(t * inv == MatZ::identity(3, ZDomain{}));

    ZDomain z;
    MatZ d(2, 2, z);
    d.at(0, 0) = 2; d.at(1, 1) = 1;
    CHECK_THROWS_AS(d.inverse(), non_unimodular_error); // det = 2

    FpDomain d5(5);
    MatFp zero(3, 3, d5);
    CHECK_THROWS_AS(zero.inverse(), singular_matrix_error);
    MatFp f = reduce_mod(t, d5);
    CHECK(f * f.inverse() == MatFp::identity(3, d5));
}

TEST_CASE("rank over fields; unsupported over Z") {
    FpDomain d2(2);
    MatFp a(2, 2, d2);
    a.at(0, 0) = 1; a.at(0, 1) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = 1;
    CHECK(a.rank() == 1);
    CHECK(MatFp::identity(4, d2).rank() == 4);
    CHECK(MatFp(3, 3, d2).rank() == 0);
    CHECK_THROWS_AS(pascal_symmetric(3).rank(), unsupported_domain_error);
}

TEST_CASE("kron and power") {
    ZDomain z;
    MatZ p = pascal_symmetric(2);
    MatZ k = p.kron(MatZ::identity(2, z));
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(0, 2) == 1);
    CHECK(k.at(0, 1) == 0);
    CHECK(k.at(2, 2) == 2);

    std::mt19937 rng(55);
    MatZ a = random_mat(rng, 4);
    MatZ b = random_mat(rng, 4);
    mpz_class da = a.det_exact(), db = b.det_exact();
    mpz_class want;
    mpz_pow_ui(want.get_mpz_t(), da.get_mpz_t(), 4);
    mpz_class db4;
    mpz_pow_ui(db4.get_mpz_t(), db.get_mpz_t(), 4);
    want *= db4;
    CHECK(a.kron(b).det_exact() == want);
    CHECK((a * a * a) == a.power(3));
    CHECK(a.power(0) == MatZ::identity(4, z));
    CHECK(a.power(1) == a);
}

TEST_CASE("rational round trips") {
    MatZ p = pascal_symmetric(4);
    MatQ q = to_rational(p);
    CHECK(q.det_exact() == 1);
    MatQ qi = q.inverse();
    CHECK(q * qi == MatQ::identity(4, QDomain{}));
}
