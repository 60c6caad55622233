#include <doctest.h>

#include <pmat/families.hpp>
#include <pmat/spectra.hpp>

using namespace pmat;

namespace {

// gamma and gamma2 for n = 1..32, computed independently by factoring the
// characteristic polynomial of P(n) over F_2.
const long long kGamma[32] = {1, 0, 3,  2, 5,  0, 3,  2, 5,  0, 11, 6, 9, 4, 7, 6,
                              9, 4, 15, 10, 21, 0, 11, 6, 9, 4, 15, 10, 13, 8, 11, 10};
const long long kGamma2[32] = {0, 1, 0, 1, 0, 3, 2, 3, 2, 5, 0, 3, 2, 5, 4, 5,
                               4, 7, 2, 5, 0, 11, 6, 9, 8, 11, 6, 9, 8, 11, 10, 11};

} // namespace

TEST_CASE("gamma recursion against the table") {
    for (long long n = 1; n <= 32; ++n) {
        GammaPair g = gamma_pair(n);
        CHECK(g.gamma == kGamma[n - 1]);
        CHECK(g.gamma2 == kGamma2[n - 1]);
        CHECK(g.gamma + 2 * g.gamma2 == n);
    }
    CHECK(gamma_pair(0).gamma == 0);
    CHECK(gamma_pair(21).gamma == 21); // chi is a pure (t+1) power here
    CHECK_THROWS_AS(gamma_pair(-3), parameter_error);
}

TEST_CASE("chi_mod2 equals the actual characteristic polynomial") {
    FpDomain d2(2);
    for (long long n = 0; n <= 64; ++n)
        CHECK(chi_mod2(n) == pascal_symmetric_fp(n, d2).charpoly());
}

TEST_CASE("the alternative gamma identities agree where defined") {
    auto gamma = [](long long n) { return gamma_pair(n).gamma; };

    // spot values, one per branch
    CHECK(gamma_alt(12, GammaVariant::i) == gamma(12));  // 2^3 + 4
    CHECK(gamma_alt(3, GammaVariant::ii) == gamma(3));   // 2^2 - 1
    CHECK(gamma_alt(5, GammaVariant::iii) == 5);         // 1 + 2 + 6 - 4
    CHECK(gamma_alt(20, GammaVariant::iv) == gamma(20)); // even branch
    CHECK(gamma_alt(21, GammaVariant::iv) == 21);        // odd: both forms agree

    // validity windows
    CHECK_THROWS_AS(gamma_alt(7, GammaVariant::ii), range_error);  // k out of window
    CHECK_THROWS_AS(gamma_alt(13, GammaVariant::i), range_error);  // 2k > 2^l
    CHECK_THROWS_AS(gamma_alt(1, GammaVariant::iii), range_error);

    for (long long n = 2; n <= 4096; ++n) {
        for (GammaVariant v :
             {GammaVariant::i, GammaVariant::ii, GammaVariant::iii, GammaVariant::iv}) {
            long long got;
            try {
                got = gamma_alt(n, v);
            } catch (const range_error&) {
                continue; // n outside this identity's window
            }
            CHECK(got == gamma(n));
        }
    }
}

TEST_CASE("prime power splitting") {
    CHECK(prime_power_split(8) == std::pair<long long, long long>{2, 3});
    CHECK(prime_power_split(27) == std::pair<long long, long long>{3, 3});
    CHECK(prime_power_split(13) == std::pair<long long, long long>{13, 1});
    CHECK_THROWS_AS(prime_power_split(12), parameter_error);
    CHECK_THROWS_AS(prime_power_split(1), parameter_error);
    CHECK_THROWS_AS(prime_power_split(0), parameter_error);
}

TEST_CASE("chi_q formula matches the characteristic polynomial at q") {
    for (long long q : {2LL, 4LL, 8LL, 16LL, 3LL, 9LL, 27LL, 5LL, 25LL, 7LL, 13LL}) {
        auto [p, l] = prime_power_split(q);
        FpDomain dom(p);
        CHECK(chi_q_formula(q, p) == pascal_symmetric_fp(q, dom).charpoly());
    }
}

TEST_CASE("chi_{q-k} formula, including the negative-exponent regime") {
    for (long long q : {4LL, 16LL, 9LL, 25LL, 7LL}) {
        auto [p, l] = prime_power_split(q);
        FpDomain dom(p);
        for (long long k = 0; k <= q / 2; ++k)
            CHECK(chi_qmk_formula(q, k, p) ==
                  pascal_symmetric_fp(q - k, dom).charpoly());
    }
    // q = 16, k in {6,7,8} drives the (t-1) exponent negative; q = 2, k = 1
    // does the same for the quadratic factor
    FpDomain d2(2);
    CHECK(chi_qmk_formula(16, 7, 2) == pascal_symmetric_fp(9, d2).charpoly());
    CHECK(chi_qmk_formula(2, 1, 2) == pascal_symmetric_fp(1, d2).charpoly());

    CHECK_THROWS_AS(chi_qmk_formula(16, 9, 2), parameter_error); // k > q/2
    CHECK_THROWS_AS(chi_qmk_formula(16, -1, 2), parameter_error);
    CHECK_THROWS_AS(chi_qmk_formula(12, 1, 2), parameter_error); // not a prime power
}

TEST_CASE("det(tI + P) and det(t^2 I + P) transforms") {
    FpDomain d3(3);
    // k = 1: P = [1], det(tI + P) = t + 1
    CHECK(det_tI_plus_P(1, d3) == PolyFp::from_ints(d3, {1, 1}));
    CHECK(det_t2I_plus_P(1, d3) == PolyFp::from_ints(d3, {1, 0, 1}));
    CHECK(det_tI_plus_P(0, d3).is_one());
    // degree sanity at k = 4
    CHECK(det_tI_plus_P(4, d3).degree() == 4);
    CHECK(det_t2I_plus_P(4, d3).degree() == 8);
}

TEST_CASE("conjectural mod-3 recursion reproduces actual charpolys") {
    FpDomain d3(3);
    CHECK(chi_mod3_conjectural(0).is_one());
    CHECK(chi_mod3_conjectural(1) == PolyFp::from_ints(d3, {-1, 1}));
    for (long long n = 0; n <= 121; ++n)
        CHECK(chi_mod3_conjectural(n) == pascal_symmetric_fp(n, d3).charpoly());
}

TEST_CASE("factor shape extraction") {
    FpDomain d2(2);
    PolyFp f = PolyFp::from_ints(d2, {1, 1}).pow(3) *
               PolyFp::from_ints(d2, {1, 1, 1}).pow(2);
    FactorizationReport r = factor_shape(f);
    CHECK(r.mult_t_minus_1 == 3); // t - 1 = t + 1 over F_2, counted here first
    CHECK(r.mult_t_plus_1 == 0);
    CHECK(r.mult_t2_t_1 == 2);
    CHECK(r.cofactor.is_one());

    FpDomain d7(7);
    PolyFp g = PolyFp::from_ints(d7, {-1, 1}).pow(2) * PolyFp::from_ints(d7, {3, 1});
    FactorizationReport s = factor_shape(g);
    CHECK(s.mult_t_minus_1 == 2);
    CHECK(s.mult_t_plus_1 == 0);
    CHECK(s.cofactor == PolyFp::from_ints(d7, {3, 1}));
}

TEST_CASE("cofactor extraction and its certificates") {
    CkResult c0 = extract_ck(0, default_ck_prime_powers(0));
    CHECK(c0.ck.is_one());
    CHECK(c0.stable);
    CHECK(c0.degree_ok);

    CkResult c1 = extract_ck(1, default_ck_prime_powers(1));
    CHECK(c1.ck == PolyZ::from_ints(ZDomain{}, {1, -2, 0, -2, 1}));
    CHECK(c1.stable);
    CHECK(c1.monic);
    CHECK(c1.palindromic);

    CkResult c2 = extract_ck(2, default_ck_prime_powers(2));
    CHECK(c2.ck == PolyZ::from_ints(ZDomain{}, {1, -6, 4, -4, 15, -4, 4, -6, 1}));

    CHECK_THROWS_AS(extract_ck(-1, default_ck_prime_powers(0)), parameter_error);
    CHECK_THROWS_AS(extract_ck(2, {{2, 1}}), parameter_error); // q < 2k
    CHECK_THROWS_AS(extract_ck(1, {}), parameter_error);
}

TEST_CASE("congruence checks for the lifted cofactors") {
    for (long long k = 0; k <= 4; ++k) {
        CHECK(check_ck_mod3(k).verdict == Verdict::pass);
        CHECK(check_ck_mod2(k).verdict == Verdict::pass);
    }
}

TEST_CASE("final conjecture and its remarks") {
    CHECK(check_final_conjecture(5).verdict == Verdict::pass);
    CHECK(check_final_conjecture(8).verdict == Verdict::pass);
    CHECK(check_final_conjecture(7).verdict == Verdict::not_applicable);

    CHECK(check_selfdual_code(5).verdict == Verdict::pass);
    CHECK(check_selfdual_code(11).verdict == Verdict::pass);
    CHECK(check_selfdual_code(8).verdict == Verdict::not_applicable); // even q
    CHECK(check_selfdual_code(7).verdict == Verdict::not_applicable);

    CHECK(check_shifted_conjecture(5).verdict == Verdict::pass);
    CHECK(check_shifted_conjecture(8).verdict == Verdict::pass);
    CHECK(check_shifted_conjecture(4).verdict == Verdict::not_applicable);
}
