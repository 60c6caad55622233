#pragma once

#include <utility>
#include <vector>

#include "pmat/matrix.hpp"
#include "pmat/report.hpp"

namespace pmat {

// What counts as "the same element" during closure: the matrix itself, the
// pair {M, -M}, or the full projective class (first nonzero entry scaled
// to 1).
enum class ClosureKey { plain, mod_sign, projective };

struct GroupClosure {
    long long order = 0;
    bool truncated = false; // hit the element cap before closing
    std::vector<MatFp> elements;
};

// Breadth-first multiplicative closure of a set of invertible matrices over
// a prime field, with elements identified per `key`. Identification by a
// central subgroup keeps the induced multiplication well defined.
GroupClosure closure(const std::vector<MatFp>& gens, long long cap = 1000000,
                     ClosureKey key = ClosureKey::plain);

// The 2x2 generator pair [[1,-1],[1,0]], [[1,0],[-1,-1]] whose symmetric
// powers are the Pascal and signed-triangular families.
std::pair<MatFp, MatFp> small_generators(const FpDomain& dom);

// Order of the projective group generated by the small pair: the three
// exceptional primes 5, 7, 29 give 12, 42, 60; every other prime gives
// p(p^2-1)/2 when p = 1 mod 4 and p(p^2-1) otherwise.
long long predicted_image_order(long long p);

// P(q)^3 = I, Ltilde^2 = I, Ltilde P Ltilde = P^2, and the closure of the
// pair has order 6, all over F_p with q = p^l.
CheckReport dihedral6_check(long long q);

// trace(P(p)) = epsilon(p) over F_p.
CheckReport trace_check(long long p);

} // namespace pmat
