#ifndef SELCOL_RNG_HPP
#define SELCOL_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace selcol {

// Deterministic RNG wrapper. Bounded draws are implemented by hand so that
// generated instances do not depend on the standard library's distribution
// internals; a (seed, platform-independent stream) pair always reproduces
// the same graph.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(bounded(span));
    }

    std::size_t uniform_index(std::size_t size) { return static_cast<std::size_t>(bounded(size)); }

    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derive an independent stream, e.g. one per parallel task.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    // Rejection-free bounded draw via 128-bit multiply (Lemire); unbiased
    // enough for instance generation, deterministic across platforms.
    std::uint64_t bounded(std::uint64_t span) {
        if (span <= 1) return 0;
        auto x = next_u64();
        return static_cast<std::uint64_t>((static_cast<__uint128_t>(x) * span) >> 64);
    }

    std::mt19937_64 engine_;
};

} // namespace selcol

#endif
