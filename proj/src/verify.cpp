#include "pmat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "pmat/autosimilar.hpp"
#include "pmat/families.hpp"
#include "pmat/groups.hpp"
#include "pmat/io.hpp"
#include "pmat/numtheory.hpp"
#include "pmat/spectra.hpp"

namespace pmat {

namespace {

// Runs fn(0..count-1) on a small thread pool and returns the per-index
// report chunks in index order, so parallel runs emit identical output.
template <typename Fn>
std::vector<std::vector<CheckReport>> run_indexed(long long count, int jobs, Fn&& fn) {
    std::vector<std::vector<CheckReport>> out(static_cast<size_t>(std::max<long long>(count, 0)));
    long long workers = std::min<long long>(std::max(jobs, 1), count);
    if (workers <= 1) {
        for (long long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<long long> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (long long t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    long long i = next.fetch_add(1);
                    if (i >= count) break;
                    out[static_cast<size_t>(i)] = fn(i);
                }
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

void flatten(std::vector<std::vector<CheckReport>>&& chunks, std::vector<CheckReport>& into) {
    for (auto& chunk : chunks)
        for (auto& rep : chunk) into.push_back(std::move(rep));
}

bool any_fail(const std::vector<CheckReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.verdict == Verdict::fail; });
}

std::vector<long long> filtered(std::vector<long long> vals, const std::optional<long long>& cap) {
    if (cap)
        vals.erase(std::remove_if(vals.begin(), vals.end(), [&](long long v) { return v > *cap; }),
                   vals.end());
    return vals;
}

// ---------------------------------------------------------------- thm1

VerifyResult verify_thm1(const VerifyOptions& opts) {
    long long max_n = opts.max_n.value_or(512);
    VerifyResult res;
    std::vector<mpz_class> minors;
    bool have_minors = false;
    try {
        minors = pascal_reduced(max_n, 2).leading_principal_minors();
        have_minors = true;
    } catch (const zero_pivot_error&) {
        // fall back to one pivoted determinant per size
    }
    mpz_class expected = 1;
    for (long long n = 1; n <= max_n; ++n) {
        if (thue_morse(n - 1) == 1) expected = -expected;
        mpz_class det = have_minors ? minors[static_cast<size_t>(n - 1)]
                                    : pascal_reduced(n, 2).det_exact();
        nlohmann::ordered_json params{{"n", n}};
        if (det == expected)
            res.reports.push_back(CheckReport::passed("thm1-det", params));
        else
            res.reports.push_back(CheckReport::failed(
                "thm1-det", params, {{"det", det.get_str()}, {"expected", expected.get_str()}}));
    }
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// ------------------------------------------------------------- mod3-det

VerifyResult verify_mod3_det(const VerifyOptions& opts) {
    long long max_n = opts.max_n.value_or(120);
    VerifyResult res;
    std::vector<mpz_class> minors;
    bool have_minors = false;
    try {
        minors = pascal_reduced(max_n, 3).leading_principal_minors();
        have_minors = true;
    } catch (const zero_pivot_error&) {
    }
    long long ones = 0, twos = 0;
    for (long long n = 1; n <= max_n; ++n) {
        for (long long d : digits(n - 1, 3).digits) {
            if (d == 1) ++ones;
            if (d == 2) ++twos;
        }
        mpz_class det = have_minors ? minors[static_cast<size_t>(n - 1)]
                                    : pascal_reduced(n, 3).det_exact();
        nlohmann::ordered_json params{{"n", n}, {"ones", ones}, {"twos", twos}};
        long long e = ones - twos;
        if (e < 0) {
            res.reports.push_back(CheckReport::failed(
                "mod3-det", params, {{"reason", "digit-one count fell below digit-two count"}}));
            continue;
        }
        mpz_class want;
        mpz_ui_pow_ui(want.get_mpz_t(), 2, static_cast<unsigned long>(e));
        if (e % 2 == 1) want = -want;
        if (det == want)
            res.reports.push_back(CheckReport::passed("mod3-det", params));
        else
            res.reports.push_back(CheckReport::failed(
                "mod3-det", params, {{"det", det.get_str()}, {"expected", want.get_str()}}));
    }
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// ---------------------------------------------------------------- prop2

VerifyResult verify_prop2(const VerifyOptions& opts) {
    std::vector<long long> qs = opts.primes.empty()
        ? std::vector<long long>{2, 4, 8, 16, 32, 3, 9, 27, 5, 25, 7, 49, 11, 13}
        : opts.primes;
    qs = filtered(std::move(qs), opts.max_q);
    for (long long q : qs) prime_power_split(q); // reject bad lists up front
    VerifyResult res;
    auto chunks = run_indexed(static_cast<long long>(qs.size()), opts.jobs, [&](long long i) {
        long long q = qs[static_cast<size_t>(i)];
        auto [p, l] = prime_power_split(q);
        (void)l;
        FpDomain dom(p);
        nlohmann::ordered_json params{{"q", q}, {"p", p}};
        std::vector<CheckReport> reps;
        MatFp pas = pascal_symmetric_fp(q, dom);
        if (pas.power(3) == MatFp::identity(q, dom))
            reps.push_back(CheckReport::passed("prop2-order3", params));
        else
            reps.push_back(CheckReport::failed("prop2-order3", params, {{"reason", "P(q)^3 != I"}}));
        PolyFp chi = pas.charpoly();
        PolyFp want = chi_q_formula(q, p);
        if (chi == want)
            reps.push_back(CheckReport::passed("prop2-chi-formula", params));
        else
            reps.push_back(CheckReport::failed(
                "prop2-chi-formula", params,
                {{"charpoly", poly_to_json(chi)}, {"expected", poly_to_json(want)}}));
        return reps;
    });
    flatten(std::move(chunks), res.reports);
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// ---------------------------------------------------------------- thm3

VerifyResult verify_thm3(const VerifyOptions& opts) {
    long long max_q = opts.max_q.value_or(64);
    std::vector<long long> ps =
        opts.primes.empty() ? std::vector<long long>{2, 3, 5, 7} : opts.primes;
    std::vector<long long> qs;
    for (long long p : ps)
        for (long long q = p; q <= max_q; q *= p) qs.push_back(q);
    for (long long q : qs) prime_power_split(q);
    VerifyResult res;
    auto chunks = run_indexed(static_cast<long long>(qs.size()), opts.jobs, [&](long long i) {
        long long q = qs[static_cast<size_t>(i)];
        auto [p, l] = prime_power_split(q);
        (void)l;
        FpDomain dom(p);
        std::vector<CheckReport> reps;
        for (long long k = 0; 2 * k <= q; ++k) {
            nlohmann::ordered_json params{{"p", p}, {"q", q}, {"k", k}};
            try {
                PolyFp chi = pascal_symmetric_fp(q - k, dom).charpoly();
                PolyFp want = chi_qmk_formula(q, k, p);
                if (chi == want)
                    reps.push_back(CheckReport::passed("thm3-product-formula", params));
                else
                    reps.push_back(CheckReport::failed(
                        "thm3-product-formula", params,
                        {{"charpoly", poly_to_json(chi)}, {"expected", poly_to_json(want)}}));
            } catch (const error& e) {
                reps.push_back(
                    CheckReport::failed("thm3-product-formula", params, {{"reason", e.what()}}));
            }
        }
        return reps;
    });
    flatten(std::move(chunks), res.reports);
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// ---------------------------------------------------------------- thm4

VerifyResult verify_thm4(const VerifyOptions& opts) {
    long long max_n = opts.max_n.value_or(256);
    VerifyResult res;
    FpDomain dom(2);
    auto chunks = run_indexed(max_n, opts.jobs, [&](long long i) {
        long long n = i + 1;
        GammaPair g = gamma_pair(n);
        nlohmann::ordered_json params{{"n", n}, {"gamma", g.gamma}, {"gamma2", g.gamma2}};
        std::vector<CheckReport> reps;
        PolyFp chi = pascal_symmetric_fp(n, dom).charpoly();
        PolyFp want = chi_mod2(n);
        if (chi == want)
            reps.push_back(CheckReport::passed("thm4-chi-mod2", params));
        else
            reps.push_back(CheckReport::failed(
                "thm4-chi-mod2", params,
                {{"charpoly", poly_to_json(chi)}, {"expected", poly_to_json(want)}}));
        return reps;
    });
    flatten(std::move(chunks), res.reports);
    // the multiplicity table for n = 1..32
    static const long long table_gamma[32] = {1, 0, 3,  2, 5,  0,  3,  2, 5,  0, 11,
                                              6, 9, 4,  7, 6,  9,  4,  15, 10, 21, 0,
                                              11, 6, 9, 4, 15, 10, 13, 8, 11, 10};
    static const long long table_gamma2[32] = {0, 1, 0, 1, 0,  3, 2, 3,  2, 5,  0,
                                               3, 2, 5, 4, 5,  4, 7, 2,  5, 0,  11,
                                               6, 9, 8, 11, 6, 9, 8, 11, 10, 11};
    for (long long n = 1; n <= std::min<long long>(32, max_n); ++n) {
        GammaPair g = gamma_pair(n);
        nlohmann::ordered_json params{{"n", n}};
        if (g.gamma == table_gamma[n - 1] && g.gamma2 == table_gamma2[n - 1])
            res.reports.push_back(CheckReport::passed("thm4-table", params));
        else
            res.reports.push_back(CheckReport::failed("thm4-table", params,
                                                      {{"gamma", g.gamma},
                                                       {"gamma2", g.gamma2},
                                                       {"expected_gamma", table_gamma[n - 1]},
                                                       {"expected_gamma2", table_gamma2[n - 1]}}));
    }
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// ---------------------------------------------------------------- thm5

VerifyResult verify_thm5(const VerifyOptions& opts) {
    long long max_n = opts.max_n.value_or(1LL << 14);
    VerifyResult res;
    struct VariantDef {
        GammaVariant v;
        const char* name;
    };
    const VariantDef defs[] = {{GammaVariant::i, "thm5-i"},
                               {GammaVariant::ii, "thm5-ii"},
                               {GammaVariant::iii, "thm5-iii"},
                               {GammaVariant::iv, "thm5-iv"}};
    for (const auto& def : defs) {
        auto chunks = run_indexed(max_n, opts.jobs, [&](long long i) {
            long long n = i + 1;
            std::vector<CheckReport> reps;
            nlohmann::ordered_json params{{"n", n}};
            try {
                long long alt = gamma_alt(n, def.v);
                long long ref = gamma_pair(n).gamma;
                if (alt == ref)
                    reps.push_back(CheckReport::passed(def.name, params));
                else
                    reps.push_back(CheckReport::failed(def.name, params,
                                                       {{"value", alt}, {"expected", ref}}));
            } catch (const range_error&) {
                // n outside this identity's validity range
            } catch (const error& e) {
                reps.push_back(CheckReport::failed(def.name, params, {{"reason", e.what()}}));
            }
            return reps;
        });
        flatten(std::move(chunks), res.reports);
    }
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// ---------------------------------------------------------------- conj6

std::vector<long long> mirrored(std::vector<long long> half) {
    std::vector<long long> full = half;
    for (size_t i = half.size() - 1; i-- > 0;) full.push_back(half[i]);
    return full;
}

std::vector<PolyZ> reference_ck() {
    ZDomain dom;
    auto zp = [&](std::vector<long long> cs) { return PolyZ::from_ints(dom, std::move(cs)); };
    std::vector<PolyZ> cs;
    PolyZ c1 = zp({1, -2, 0, -2, 1});
    cs.push_back(PolyZ::one(dom));
    cs.push_back(c1);
    cs.push_back(zp({1, -6, 4, -4, 15, -4, 4, -6, 1}));
    cs.push_back(c1 * zp({1, -16, 4, -4, 40, -4, 4, -16, 1}));
    cs.push_back(zp(mirrored({1, -58, 288, -240, 393, -1440, 836, -902, 2376})));
    cs.push_back(c1 * zp(mirrored({1, -196, 2112, -792, 1290, -10560, 2768, -2972, 17424})));
    return cs;
}

VerifyResult verify_conj6(const VerifyOptions& opts) {
    long long max_k = opts.max_k.value_or(8);
    VerifyResult res;
    std::vector<PolyZ> reference = reference_ck();
    auto chunks = run_indexed(max_k + 1, opts.jobs, [&](long long k) {
        std::vector<CheckReport> reps;
        nlohmann::ordered_json params{{"k", k}};
        try {
            CkResult r = extract_ck(k, default_ck_prime_powers(k));
            nlohmann::ordered_json cert = params;
            cert["stable"] = r.stable;
            cert["monic"] = r.monic;
            cert["degree"] = r.ck.degree();
            cert["palindromic"] = r.palindromic;
            cert["ck"] = poly_to_json(r.ck);
            bool ok = r.stable && r.monic && r.degree_ok && r.palindromic;
            if (ok)
                reps.push_back(CheckReport::passed("conj6-ck", cert));
            else
                reps.push_back(CheckReport::failed("conj6-ck", cert,
                                                   {{"reason", "certificate bits incomplete"}}));
            if (k < static_cast<long long>(reference.size())) {
                if (r.ck == reference[static_cast<size_t>(k)])
                    reps.push_back(CheckReport::passed("conj6-ck-published", params));
                else
                    reps.push_back(CheckReport::failed(
                        "conj6-ck-published", params,
                        {{"ck", poly_to_json(r.ck)},
                         {"expected", poly_to_json(reference[static_cast<size_t>(k)])}}));
            }
        } catch (const error& e) {
            reps.push_back(CheckReport::failed("conj6-ck", params, {{"reason", e.what()}}));
        }
        try {
            CheckReport rep = check_ck_mod2(k);
            rep.check = "conj6-ck-mod2";
            reps.push_back(std::move(rep));
        } catch (const error& e) {
            reps.push_back(CheckReport::failed("conj6-ck-mod2", params, {{"reason", e.what()}}));
        }
        return reps;
    });
    flatten(std::move(chunks), res.reports);
    return res; // conjecture target: failures never raise theorem_failure
}

// ---------------------------------------------------------------- conj7

VerifyResult verify_conj7(const VerifyOptions& opts) {
    long long max_k = opts.max_k.value_or(8);
    long long max_n = opts.max_n.value_or(243);
    VerifyResult res;
    auto kchunks = run_indexed(max_k + 1, opts.jobs, [&](long long k) {
        std::vector<CheckReport> reps;
        try {
            CheckReport rep = check_ck_mod3(k);
            rep.check = "conj7-ck-mod3";
            reps.push_back(std::move(rep));
        } catch (const error& e) {
            reps.push_back(CheckReport::failed("conj7-ck-mod3", nlohmann::ordered_json{{"k", k}},
                                               {{"reason", e.what()}}));
        }
        return reps;
    });
    flatten(std::move(kchunks), res.reports);
    FpDomain dom(3);
    auto nchunks = run_indexed(max_n, opts.jobs, [&](long long i) {
        long long n = i + 1;
        nlohmann::ordered_json params{{"n", n}};
        std::vector<CheckReport> reps;
        PolyFp chi = pascal_symmetric_fp(n, dom).charpoly();
        try {
            PolyFp want = chi_mod3_conjectural(n);
            if (chi == want)
                reps.push_back(CheckReport::passed("conj7-chi3-recursion", params));
            else
                reps.push_back(CheckReport::failed(
                    "conj7-chi3-recursion", params,
                    {{"charpoly", poly_to_json(chi)}, {"recursion", poly_to_json(want)}}));
        } catch (const error& e) {
            reps.push_back(
                CheckReport::failed("conj7-chi3-recursion", params, {{"reason", e.what()}}));
        }
        try {
            if (roots_have_two_power_order(chi))
                reps.push_back(CheckReport::passed("conj7-root-orders", params));
            else
                reps.push_back(CheckReport::failed("conj7-root-orders", params,
                                                   {{"reason", "root of order not a power of two"}}));
        } catch (const error& e) {
            reps.push_back(CheckReport::failed("conj7-root-orders", params, {{"reason", e.what()}}));
        }
        return reps;
    });
    flatten(std::move(nchunks), res.reports);
    return res;
}

// ------------------------------------------------- conj8 and the remarks

std::vector<long long> conj8_default_qs() { return {2, 5, 8, 11, 17, 23, 29, 32, 41, 47, 53, 59}; }

template <typename CheckFn>
VerifyResult verify_q_sweep(const VerifyOptions& opts, const char* name, CheckFn&& fn) {
    std::vector<long long> qs = opts.primes.empty() ? conj8_default_qs() : opts.primes;
    qs = filtered(std::move(qs), opts.max_q);
    for (long long q : qs) prime_power_split(q);
    VerifyResult res;
    auto chunks = run_indexed(static_cast<long long>(qs.size()), opts.jobs, [&](long long i) {
        long long q = qs[static_cast<size_t>(i)];
        std::vector<CheckReport> reps;
        try {
            reps.push_back(fn(q));
        } catch (const error& e) {
            reps.push_back(
                CheckReport::failed(name, nlohmann::ordered_json{{"q", q}}, {{"reason", e.what()}}));
        }
        return reps;
    });
    flatten(std::move(chunks), res.reports);
    return res;
}

VerifyResult verify_conj8(const VerifyOptions& opts) {
    return verify_q_sweep(opts, "final-conjecture", [](long long q) { return check_final_conjecture(q); });
}

VerifyResult verify_remark_selfdual(const VerifyOptions& opts) {
    return verify_q_sweep(opts, "selfdual-code", [](long long q) { return check_selfdual_code(q); });
}

VerifyResult verify_remark_shifted(const VerifyOptions& opts) {
    return verify_q_sweep(opts, "shifted-charpoly", [](long long q) { return check_shifted_conjecture(q); });
}

// ------------------------------------------------------- autosimilar-ldu

void seed_factor_check(long long base, std::vector<CheckReport>& into) {
    nlohmann::ordered_json params{{"base", base}};
    AutosimilarSpec spec = base == 2 ? pascal_mod2_spec() : pascal_mod3_spec();
    QDomain qd;
    MatQ expl(base, base, qd), expd(base, base, qd), expu(base, base, qd);
    if (base == 2) {
        expl.at(0, 0) = 1; expl.at(1, 0) = 1; expl.at(1, 1) = 1;
        expd.at(0, 0) = 1; expd.at(1, 1) = -1;
    } else {
        expl.at(0, 0) = 1; expl.at(1, 0) = 1; expl.at(1, 1) = 1;
        expl.at(2, 0) = 1; expl.at(2, 1) = mpq_class(1, 2); expl.at(2, 2) = 1;
        expd.at(0, 0) = 1; expd.at(1, 1) = -2; expd.at(2, 2) = mpq_class(-1, 2);
    }
    expu = expl.transpose();
    try {
        SeedLDU f = ldu_seed(spec);
        bool factors_ok = f.L == expl && f.D == expd && f.U == expu;
        bool recombines = (f.L * f.D * f.U) == spec.seed;
        if (factors_ok && recombines) {
            into.push_back(CheckReport::passed("autosimilar-ldu-seed", params));
        } else {
            into.push_back(CheckReport::failed("autosimilar-ldu-seed", params,
                                               {{"L", matrix_to_json(f.L)},
                                                {"D", matrix_to_json(f.D)},
                                                {"U", matrix_to_json(f.U)},
                                                {"recombines", recombines}}));
        }
    } catch (const error& e) {
        into.push_back(CheckReport::failed("autosimilar-ldu-seed", params, {{"reason", e.what()}}));
    }
}

void det_digit_sweep(const VerifyOptions& opts, long long base, std::vector<CheckReport>& into) {
    long long max_n = opts.max_n.value_or(243);
    AutosimilarSpec spec = base == 2 ? pascal_mod2_spec() : pascal_mod3_spec();
    MatQ big = materialize(spec, max_n);
    MatZ zbig(max_n, max_n, ZDomain{});
    bool integral = true;
    for (long long i = 0; i < max_n && integral; ++i)
        for (long long j = 0; j < max_n; ++j) {
            const mpq_class& v = big.at(i, j);
            if (v.get_den() != 1) {
                integral = false;
                break;
            }
            zbig.at(i, j) = v.get_num();
        }
    std::vector<mpz_class> minors;
    bool have_minors = false;
    if (integral) {
        try {
            minors = zbig.leading_principal_minors();
            have_minors = true;
        } catch (const zero_pivot_error&) {
        }
    }
    for (long long n = 1; n <= max_n; ++n) {
        nlohmann::ordered_json params{{"base", base}, {"n", n}};
        mpq_class want = det_by_digits(spec, n);
        mpq_class det = have_minors ? mpq_class(minors[static_cast<size_t>(n - 1)])
                                    : materialize(spec, n).det_exact();
        if (det == want)
            into.push_back(CheckReport::passed("autosimilar-det-digits", params));
        else
            into.push_back(CheckReport::failed(
                "autosimilar-det-digits", params,
                {{"det", det.get_str()}, {"digit_product", want.get_str()}}));
    }
}

VerifyResult verify_autosimilar(const VerifyOptions& opts) {
    VerifyResult res;
    seed_factor_check(2, res.reports);
    seed_factor_check(3, res.reports);
    det_digit_sweep(opts, 2, res.reports);
    det_digit_sweep(opts, 3, res.reports);
    long long inv_max = std::min<long long>(opts.max_n.value_or(128), 128);
    auto chunks = run_indexed(inv_max, opts.jobs, [&](long long i) {
        long long n = i + 1;
        nlohmann::ordered_json params{{"n", n}};
        std::vector<CheckReport> reps;
        try {
            MatZ inv = pascal_reduced(n, 2).inverse();
            bool ok = true;
            nlohmann::ordered_json bad;
            for (long long r = 0; r < n && ok; ++r)
                for (long long c = 0; c < n; ++c) {
                    const mpz_class& v = inv.at(r, c);
                    if (v < -1 || v > 1) {
                        ok = false;
                        bad = {{"i", r}, {"j", c}, {"entry", v.get_str()}};
                        break;
                    }
                }
            if (ok)
                reps.push_back(CheckReport::passed("reduced2-inverse-entries", params));
            else
                reps.push_back(CheckReport::failed("reduced2-inverse-entries", params, bad));
        } catch (const error& e) {
            reps.push_back(
                CheckReport::failed("reduced2-inverse-entries", params, {{"reason", e.what()}}));
        }
        return reps;
    });
    flatten(std::move(chunks), res.reports);
    res.theorem_failure = any_fail(res.reports);
    return res;
}

// --------------------------------------------------------------- groups

VerifyResult verify_groups(const VerifyOptions& opts) {
    VerifyResult res;
    std::vector<long long> plist = opts.primes.empty()
        ? std::vector<long long>{3, 5, 7, 11, 13, 17, 19, 23, 29, 31}
        : opts.primes;
    std::vector<long long> asserted, recorded, image_ps, symp_ps, trace_ps;
    for (long long p : plist) {
        if (!is_prime(p)) throw parameter_error("groups: " + std::to_string(p) + " is not prime");
        if (p >= 5) {
            if (p == 5 || p == 7 || p == 29)
                asserted.push_back(p);
            else
                recorded.push_back(p);
            image_ps.push_back(p);
            if (p == 5 || p == 7 || p == 11 || p == 13 || p == 29) symp_ps.push_back(p);
        }
        if (p % 2 == 1) trace_ps.push_back(p);
    }
    const long long cap = 2000000;

    auto mod_sign_order = [&](long long p) {
        FpDomain dom(p);
        auto [a, b] = small_generators(dom);
        return closure({a, b}, cap, ClosureKey::mod_sign);
    };
    auto projective_order = [&](long long p) {
        FpDomain dom(p);
        auto [a, b] = small_generators(dom);
        return closure({a, b}, cap, ClosureKey::projective);
    };

    auto c1 = run_indexed(static_cast<long long>(asserted.size()), opts.jobs, [&](long long i) {
        long long p = asserted[static_cast<size_t>(i)];
        GroupClosure c = mod_sign_order(p);
        long long want = p == 5 ? 24 : p == 7 ? 42 : 120;
        nlohmann::ordered_json params{{"p", p}, {"order", c.order}};
        std::vector<CheckReport> reps;
        if (!c.truncated && c.order == want)
            reps.push_back(CheckReport::passed("gp-order", params));
        else
            reps.push_back(CheckReport::failed("gp-order", params, {{"expected", want}}));
        return reps;
    });
    flatten(std::move(c1), res.reports);

    auto c2 = run_indexed(static_cast<long long>(recorded.size()), opts.jobs, [&](long long i) {
        long long p = recorded[static_cast<size_t>(i)];
        GroupClosure c = mod_sign_order(p);
        nlohmann::ordered_json params{{"p", p}, {"order", c.order}};
        std::vector<CheckReport> reps;
        if (c.truncated)
            reps.push_back(
                CheckReport::failed("gp-order-recorded", params, {{"reason", "closure truncated"}}));
        else
            reps.push_back(CheckReport::passed("gp-order-recorded", params));
        return reps;
    });
    flatten(std::move(c2), res.reports);

    auto c3 = run_indexed(static_cast<long long>(image_ps.size()), opts.jobs, [&](long long i) {
        long long p = image_ps[static_cast<size_t>(i)];
        GroupClosure c = projective_order(p);
        long long want = predicted_image_order(p);
        nlohmann::ordered_json params{{"p", p}, {"order", c.order}, {"predicted", want}};
        std::vector<CheckReport> reps;
        if (!c.truncated && c.order == want)
            reps.push_back(CheckReport::passed("gp-image-order", params));
        else
            reps.push_back(CheckReport::failed("gp-image-order", params,
                                               {{"reason", "projective order differs from prediction"}}));
        return reps;
    });
    flatten(std::move(c3), res.reports);

    auto c4 = run_indexed(static_cast<long long>(symp_ps.size()), opts.jobs, [&](long long i) {
        long long p = symp_ps[static_cast<size_t>(i)];
        FpDomain dom(p);
        GroupClosure big =
            closure({pascal_symmetric_fp(p, dom), triangular_fp(TriKind::L, p, dom)}, cap,
                    ClosureKey::plain);
        GroupClosure proj = projective_order(p);
        nlohmann::ordered_json params{{"p", p}, {"order", big.order}, {"image_order", proj.order}};
        std::vector<CheckReport> reps;
        if (!big.truncated && !proj.truncated && big.order == proj.order)
            reps.push_back(CheckReport::passed("sympower-image-order", params));
        else
            reps.push_back(CheckReport::failed(
                "sympower-image-order", params,
                {{"reason", "p x p closure does not match the projective image"}}));
        return reps;
    });
    flatten(std::move(c4), res.reports);

    std::vector<long long> dq = filtered({2, 4, 8, 3, 9, 5, 7}, opts.max_q);
    auto c5 = run_indexed(static_cast<long long>(dq.size()), opts.jobs, [&](long long i) {
        return std::vector<CheckReport>{dihedral6_check(dq[static_cast<size_t>(i)])};
    });
    flatten(std::move(c5), res.reports);

    auto c6 = run_indexed(static_cast<long long>(trace_ps.size()), opts.jobs, [&](long long i) {
        return std::vector<CheckReport>{trace_check(trace_ps[static_cast<size_t>(i)])};
    });
    flatten(std::move(c6), res.reports);

    for (const auto& rep : res.reports) {
        if (rep.verdict != Verdict::fail) continue;
        if (rep.check == "gp-order-recorded" || rep.check == "gp-image-order") continue;
        res.theorem_failure = true;
    }
    return res;
}

// ------------------------------------------------------------- dispatch

using TargetFn = VerifyResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, TargetFn>>& target_table() {
    static const std::vector<std::pair<std::string, TargetFn>> table = {
        {"thm1", &verify_thm1},
        {"prop2", &verify_prop2},
        {"thm3", &verify_thm3},
        {"thm4", &verify_thm4},
        {"thm5", &verify_thm5},
        {"conj6", &verify_conj6},
        {"conj7", &verify_conj7},
        {"conj8", &verify_conj8},
        {"remark-selfdual", &verify_remark_selfdual},
        {"remark-shifted", &verify_remark_shifted},
        {"autosimilar-ldu", &verify_autosimilar},
        {"mod3-det", &verify_mod3_det},
        {"groups", &verify_groups},
    };
    return table;
}

} // namespace

VerifyResult verify_target(const std::string& target, const VerifyOptions& opts) {
    if (target == "all") {
        VerifyResult all;
        for (const auto& [name, fn] : target_table()) {
            VerifyResult one = fn(opts);
            all.theorem_failure = all.theorem_failure || one.theorem_failure;
            for (auto& rep : one.reports) all.reports.push_back(std::move(rep));
        }
        return all;
    }
    for (const auto& [name, fn] : target_table())
        if (name == target) return fn(opts);
    throw parameter_error("unknown verify target: " + target);
}

const std::vector<std::string>& verify_target_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : target_table()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

} // namespace pmat
