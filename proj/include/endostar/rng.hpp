// Small deterministic generator (splitmix64); identical streams on every
// platform, which keeps seeded reports byte-identical.
#ifndef ENDOSTAR_RNG_HPP
#define ENDOSTAR_RNG_HPP

#include <cstdint>

namespace endostar {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    int64_t range(int64_t lo, int64_t hi) { return lo + static_cast<int64_t>(below(hi - lo + 1)); }
    bool coin() { return next() & 1; }

private:
    uint64_t state_;
};

}  // namespace endostar

#endif
