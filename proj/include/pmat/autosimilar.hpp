#pragma once

#include "pmat/matrix.hpp"

namespace pmat {

// A base-b self-similar infinite matrix, determined by its b x b seed:
// the (s,t) entry is the product of seed entries over the base-b digit
// pairs of s and t (shorter expansion padded with zeros). Seeds live over
// the rationals so LDU factors with fractional entries stay exact.
struct AutosimilarSpec {
    long long base = 2;
    MatQ seed;
    bool nondegenerate = false; // every leading minor of the seed invertible
};

// Validates the shape and the seed[0][0] = 1 normalization, and computes
// the nondegeneracy flag.
AutosimilarSpec make_autosimilar(long long base, MatQ seed);

mpq_class as_entry(const AutosimilarSpec& spec, long long s, long long t);

MatQ materialize(const AutosimilarSpec& spec, long long n);

struct SeedLDU {
    MatQ L; // unipotent lower
    MatQ D; // diagonal, d_0 = 1
    MatQ U; // unipotent upper
};

// Doolittle factorization of the seed; throws degeneracy_error naming the
// first singular leading minor when the spec is degenerate.
SeedLDU ldu_seed(const AutosimilarSpec& spec);

// det of the n x n section as the product of d_digit over every base-b
// digit of every index below n.
mpq_class det_by_digits(const AutosimilarSpec& spec, long long n);

// The two Pascal reductions as autosimilar specs.
AutosimilarSpec pascal_mod2_spec();
AutosimilarSpec pascal_mod3_spec();

} // namespace pmat
