#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace leibhom {

// Arithmetic mod a prime p with 2^30 < p < 2^31, elements in uint32_t.
struct Fp {
    uint32_t p;

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t)a * b % p);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t r = 1, base = a;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }
    uint32_t inv(uint32_t a) const { return pow(a, p - 2); }
};

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 32-bit range.
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint32_t a : {2u, 7u, 61u}) {
        uint64_t x = 1, base = a % n;
        uint32_t e = d;
        while (e) {
            if (e & 1) x = x * base % n;
            base = base * base % n;
            e >>= 1;
        }
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Distinct random primes in (2^30, 2^31), reproducible from the seed.
inline std::vector<uint32_t> random_primes(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> dist(1u << 30, (1u << 31) - 1);
    std::vector<uint32_t> out;
    while ((int)out.size() < count) {
        uint32_t c = dist(rng) | 1u;
        if (!is_prime_u32(c)) continue;
        bool dup = false;
        for (uint32_t q : out) dup |= (q == c);
        if (!dup) out.push_back(c);
    }
    return out;
}

} // namespace leibhom
