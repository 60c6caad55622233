#include "pmat/autosimilar.hpp"

#include "pmat/families.hpp"
#include "pmat/numtheory.hpp"

namespace pmat {

AutosimilarSpec make_autosimilar(long long base, MatQ seed) {
    if (base < 2) throw invalid_base_error("make_autosimilar: base must be >= 2");
    if (seed.rows() != base || seed.cols() != base)
        throw shape_error("make_autosimilar: seed must be base x base");
    if (seed.at(0, 0) != 1)
        throw parameter_error("make_autosimilar: seed must have top-left entry 1");
    AutosimilarSpec spec;
    spec.base = base;
    spec.seed = std::move(seed);
    spec.nondegenerate = true;
    for (long long n = 2; n <= base; ++n) {
        MatQ minor(n, n, QDomain{});
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) minor.at(i, j) = spec.seed.at(i, j);
        if (sgn(minor.det_exact()) == 0) {
            spec.nondegenerate = false;
            break;
        }
    }
    return spec;
}

mpq_class as_entry(const AutosimilarSpec& spec, long long s, long long t) {
    if (s < 0 || t < 0) throw parameter_error("as_entry: indices must be >= 0");
    mpq_class v(1);
    while (s > 0 || t > 0) {
        v *= spec.seed.at(s % spec.base, t % spec.base);
        if (sgn(v) == 0) return v;
        s /= spec.base;
        t /= spec.base;
    }
    return v;
}

MatQ materialize(const AutosimilarSpec& spec, long long n) {
    MatQ m(n, n, QDomain{});
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) m.at(i, j) = as_entry(spec, i, j);
    return m;
}

SeedLDU ldu_seed(const AutosimilarSpec& spec) {
    long long b = spec.base;
    MatQ work = spec.seed;
    SeedLDU f{MatQ::identity(b, QDomain{}), MatQ(b, b, QDomain{}), MatQ::identity(b, QDomain{})};
    for (long long k = 0; k < b; ++k) {
        mpq_class piv = work.at(k, k);
        if (sgn(piv) == 0)
            throw degeneracy_error("ldu_seed: leading minor of size " + std::to_string(k + 1) +
                                   " is singular");
        f.D.at(k, k) = piv;
        for (long long j = k + 1; j < b; ++j) f.U.at(k, j) = work.at(k, j) / piv;
        for (long long i = k + 1; i < b; ++i) {
            mpq_class factor = work.at(i, k) / piv;
            f.L.at(i, k) = factor;
            for (long long j = k; j < b; ++j) work.at(i, j) -= factor * work.at(k, j);
        }
    }
    return f;
}

mpq_class det_by_digits(const AutosimilarSpec& spec, long long n) {
    if (n < 0) throw parameter_error("det_by_digits: n must be >= 0");
    SeedLDU f = ldu_seed(spec);
    mpq_class det(1);
    for (long long i = 0; i < n; ++i)
        for (long long d : digits(i, spec.base).digits) det *= f.D.at(d, d);
    return det;
}

namespace {

AutosimilarSpec reduced_spec(long long p) {
    MatZ seed = pascal_reduced(p, p);
    MatQ q(p, p, QDomain{});
    for (long long i = 0; i < p; ++i)
        for (long long j = 0; j < p; ++j) q.at(i, j) = mpq_class(seed.at(i, j));
    return make_autosimilar(p, std::move(q));
}

} // namespace

AutosimilarSpec pascal_mod2_spec() { return reduced_spec(2); }
AutosimilarSpec pascal_mod3_spec() { return reduced_spec(3); }

} // namespace pmat
