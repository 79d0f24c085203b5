#pragma once

#include <cstdint>
#include <random>

namespace rcl {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Root seed with deterministic substream derivation: sub(i) mixes the trial
// index into the state so independent trials never share a stream.
struct Seed {
    uint64_t v = 0;
    Seed sub(uint64_t i) const { return Seed{splitmix64(v ^ splitmix64(i + 0x51ed2700))}; }
};

class Rng {
public:
    explicit Rng(Seed s) : eng_(s.v ? s.v : 0x2545f4914f6cdd1dULL) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
    // uniform integer in [0, bound)
    int below(int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(eng_); }
    uint64_t bits() { return eng_(); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = (int)v.size() - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace rcl
