#pragma once

#include "pmat/matrix.hpp"

namespace pmat {

enum class TriKind { T, L, Ltilde };

// Symmetric Pascal matrix, entries C(i+j, i).
MatZ pascal_symmetric(long long n);
MatFp pascal_symmetric_fp(long long n, const FpDomain& dom);

// Integer matrix of canonical representatives of C(i+j,i) mod p:
// {0,1} for p = 2, {-1,0,1} for p = 3.
MatZ pascal_reduced(long long n, long long p);

// Lower-triangular families: T has entries C(i,j), L has (-1)^i C(i,j),
// Ltilde has (-1)^j C(i,j).
MatZ triangular(TriKind kind, long long n);
MatFp triangular_fp(TriKind kind, long long n, const FpDomain& dom);

// Entries C(i+j+2k, i+k).
MatZ shifted_pascal(long long n, long long k);
MatFp shifted_pascal_fp(long long n, long long k, const FpDomain& dom);

// r x r matrix with entries C(i+j+k, i); unimodular for every k.
MatZ shifted_unit_pascal(long long r, long long k);

// (n-1)-th symmetric power of [[a,b],[c,d]] acting on binary forms: row i
// holds the coefficients of (aX+bY)^{n-1-i} (cX+dY)^i in the basis
// X^{n-1}, X^{n-2}Y, ..., Y^{n-1}.
MatFp sympower(long long a, long long b, long long c, long long d, long long n, const FpDomain& dom);

} // namespace pmat
