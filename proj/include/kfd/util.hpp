#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kfd {

struct inexact_division_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// v_p(n) for n != 0.
inline unsigned valuation(mpz_class n, const mpz_class& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    unsigned v = 0;
    mpz_class q, r;
    for (;;) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        n = q;
        ++v;
    }
}

inline mpz_class pow_ui(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline mpz_class abs_z(const mpz_class& a) { return a < 0 ? mpz_class(-a) : a; }

// Primes below `bound` (shared sieve, grown on demand; thread-safe after first use
// via call_once-free design: callers in tests/tools prime it once up front).
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound = 1u << 20);

// FNV-1a, used for stable fingerprint digests.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = d[v & 0xf];
        v >>= 4;
    }
    return s;
}

// log |n| for nonzero n, without overflow for large n.
inline double log_abs(const mpz_class& n) {
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::abs(d) > 0 ? std::log(std::abs(d)) + static_cast<double>(exp2) * 0.6931471805599453
                           : 0.0;
}

}  // namespace kfd
