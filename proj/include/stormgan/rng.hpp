#pragma once

#include <cstdint>
#include <cmath>
#include <initializer_list>
#include <vector>

namespace stormgan::rng {

// SplitMix64 step. All randomness in the project goes through this so that
// runs are bit-reproducible; standard-library distributions are
// implementation-defined and would break the determinism contract.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derive an independent substream seed from a root seed and a tag path,
// e.g. derive(seed, {kTagNoise, epoch, task, step}).
inline uint64_t derive(uint64_t seed, std::initializer_list<uint64_t> tags) {
  uint64_t h = seed ^ 0x2545f4914f6cdd1dULL;
  for (uint64_t t : tags) {
    h ^= t + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    uint64_t s = h;
    h = splitmix64(s);
  }
  return h;
}

class Stream {
 public:
  explicit Stream(uint64_t seed) : state_(seed ^ 0x6a09e667f3bcc908ULL) {}

  uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), Lemire reduction (n > 0).
  int uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<uint64_t>(n)) >> 64);
  }

  // Standard normal via Box-Muller; pairs cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  void fill_normal(double* p, int n) {
    for (int i = 0; i < n; ++i) p[i] = normal();
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = uniform_int(i + 1);
      std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
    }
  }

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fixed tags for substream derivation. Values are arbitrary but frozen:
// changing them changes every seeded run.
enum Tag : uint64_t {
  kTagSynthField = 1,
  kTagSynthCoef = 2,
  kTagSynthNoise = 3,
  kTagTaskSplit = 4,
  kTagTaskBatch = 5,
  kTagInnerBatch = 6,
  kTagNoiseU = 7,
  kTagNoiseEta = 8,
  kTagDerangement = 9,
  kTagInit = 10,
  kTagQueryBatch = 11,
  kTagEvalNoise = 12,
  kTagAdapt = 13,
  kTagSynthWorld = 14,
};

}  // namespace stormgan::rng
