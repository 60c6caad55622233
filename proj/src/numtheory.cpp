#include "pmat/numtheory.hpp"

#include <map>
#include <mutex>

namespace pmat {

long long DigitVector::value() const {
    long long v = 0;
    long long scale = 1;
    for (long long d : digits) {
        v += d * scale;
        scale *= base;
    }
    return v;
}

DigitVector digits(long long n, long long base) {
    if (base < 2) throw invalid_base_error("digits: base must be >= 2");
    if (n < 0) throw parameter_error("digits: n must be >= 0");
    DigitVector dv;
    dv.base = base;
    while (n > 0) {
        dv.digits.push_back(n % base);
        n /= base;
    }
    return dv;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Rows 0..p-1 of the Pascal triangle reduced mod p, one cached table per prime.
const std::vector<std::vector<long long>>& small_triangle(long long p) {
    static std::mutex mu;
    static std::map<long long, std::vector<std::vector<long long>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<long long>> tri(p);
    for (long long i = 0; i < p; ++i) {
        tri[i].assign(i + 1, 1);
        for (long long j = 1; j < i; ++j)
            tri[i][j] = (tri[i - 1][j - 1] + tri[i - 1][j]) % p;
    }
    return cache.emplace(p, std::move(tri)).first->second;
}

} // namespace

long long binomial_mod_p(long long n, long long k, long long p) {
    if (!is_prime(p)) throw invalid_modulus_error("binomial_mod_p: modulus is not prime");
    if (n < 0 || k < 0) throw parameter_error("binomial_mod_p: negative argument");
    if (k > n) return 0;
    const auto& tri = small_triangle(p);
    long long r = 1;
    while (n > 0 || k > 0) {
        long long nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        r = (r * tri[nd][kd]) % p;
        n /= p;
        k /= p;
    }
    return r;
}

mpz_class binomial_z(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

int thue_morse(long long n) {
    if (n < 0) throw parameter_error("thue_morse: n must be >= 0");
    int s = 0;
    while (n > 0) {
        s ^= static_cast<int>(n & 1);
        n >>= 1;
    }
    return s;
}

long long block_count(long long n) {
    if (n < 0) throw parameter_error("block_count: n must be >= 0");
    long long b = 0;
    bool in_run = false;
    while (n > 0) {
        if (n & 1) {
            if (!in_run) ++b;
            in_run = true;
        } else {
            in_run = false;
        }
        n >>= 1;
    }
    return b;
}

long long block_count_recursive(long long n) {
    if (n < 0) throw parameter_error("block_count_recursive: n must be >= 0");
    if (n == 0) return 0;
    if (n % 2 == 0) return block_count_recursive(n / 2);
    long long half = n / 2;
    return block_count_recursive(half) + 1 - (half % 2);
}

int epsilon(long long q) {
    if (q < 1) throw parameter_error("epsilon: q must be >= 1");
    switch (q % 3) {
        case 0: return 0;
        case 1: return 1;
        default: return -1;
    }
}

} // namespace pmat
