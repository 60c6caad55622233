#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pmat/error.hpp"

namespace pmat {

// Base-b digit expansion, least-significant digit first. digits(0, b) is empty.
struct DigitVector {
    std::vector<long long> digits;
    long long base = 2;

    long long value() const;
};

DigitVector digits(long long n, long long base);

bool is_prime(long long p);

// C(n, k) mod p via the digit-wise product over base-p expansions.
long long binomial_mod_p(long long n, long long k, long long p);

// Exact integer binomial, used as an oracle and for small dense families.
mpz_class binomial_z(long long n, long long k);

// Parity of the binary digit sum of n.
int thue_morse(long long n);

// Number of maximal runs of ones in binary n, by direct bit scan.
long long block_count(long long n);

// Same quantity through b(2n) = b(n), b(2n+1) = b(n) + 1 - (n mod 2).
long long block_count_recursive(long long n);

// Representative of q mod 3 in {-1, 0, 1}.
int epsilon(long long q);

} // namespace pmat
