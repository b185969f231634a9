#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace erps {

/// SplitMix64 step. Used both as a standalone generator and as the mixing
/// function for deriving child seeds, so derived streams never depend on how
/// many draws a sibling consumed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministically derives a child seed from a root seed and a path of
/// integer labels (subject index, condition id, trial index, ...).
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = root;
    std::uint64_t h = splitmix64(s);
    for (std::uint64_t label : path) {
        s = h ^ (label + 0x9e3779b97f4a7c15ULL);
        h = splitmix64(s);
    }
    return h;
}

/// Small deterministic PRNG with a platform-independent draw sequence.
/// (std::shuffle and the std distributions are implementation-defined, so
/// every randomized artifact in this project draws through this class.)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform integer in [0, n). n must be > 0.
    int next_below(int n) {
        // 64-bit draws make the modulo bias immaterial for the small ranges
        // used here (n <= a few thousand).
        return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (polar-free, both values used).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = next_below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace erps
