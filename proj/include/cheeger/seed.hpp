#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace cheeger {

// Identifies one reproducible random stream. Distinct stream indices under
// the same master give statistically independent streams; the mapping to
// generator state is a pure function.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;

    friend bool operator==(const Seed&, const Seed&) = default;
};

namespace detail {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

// Folds b into a; chained calls hash tuples.
constexpr std::uint64_t derive(std::uint64_t a, std::uint64_t b) noexcept {
    return detail::mix64((a + detail::kGolden) ^ (b * 0xd6e8feb86659fd93ULL + 0x8bb84b93962eacc9ULL));
}

constexpr std::uint64_t seed_state(Seed s, std::uint64_t salt = 0) noexcept {
    return derive(derive(s.master, s.stream), salt);
}

constexpr Seed substream(Seed s, std::uint64_t index) noexcept {
    return Seed{s.master, derive(s.stream, index)};
}

// mt19937_64 raw output is pinned by the standard; bounded draws and shuffles
// are hand-rolled so streams stay identical across standard libraries.
class Rng {
public:
    explicit Rng(Seed s, std::uint64_t salt = 0) : engine_(seed_state(s, salt)) {}
    explicit Rng(std::uint64_t state) : engine_(state) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased uniform draw from [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double unit() { return double(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [-a, a].
    double symmetric(double a) { return a * (2.0 * unit() - 1.0); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cheeger
