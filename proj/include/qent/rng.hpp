#pragma once

#include <complex>
#include <cstdint>

namespace qent {

// xoshiro256++ seeded through SplitMix64.
//
// Every random quantity in the library flows through this generator, so a run
// is reproducible bit-for-bit from its 64-bit seed. Independent substreams
// (per trial, per restart) use seeds derived with split_seed(); never reuse
// one Rng across logically independent trials.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    double uniform();       // [0, 1), 53-bit resolution
    double uniform_open();  // (0, 1], safe as a log() argument

    // Standard normal via Box-Muller; the second variate of each pair is
    // cached, so draws come in a fixed order for a fixed seed.
    double normal();

    // Re and Im each standard normal.
    std::complex<double> complex_normal();

  private:
    std::uint64_t s_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Stream-split rule: the seed of substream `index` under base seed `base` is
// split_seed(base, index). Used for per-trial states, per-trial unitaries and
// per-restart optimizer starts; documented so reports can be reproduced.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qent
