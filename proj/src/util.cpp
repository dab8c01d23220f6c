#include "kfd/util.hpp"

#include <mutex>

namespace kfd {

namespace {
std::vector<std::uint32_t> sieve_upto(std::uint32_t bound) {
    std::vector<bool> comp(bound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i)
            comp[j] = true;
    }
    return out;
}
}  // namespace

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
    static std::mutex mu;
    static std::uint32_t have = 0;
    static std::vector<std::uint32_t> primes;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > have) {
        primes = sieve_upto(bound);
        have = bound;
    }
    return primes;
}

}  // namespace kfd
