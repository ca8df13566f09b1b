#pragma once

#include <cstdint>
#include <vector>

namespace hyperroute {

/// Counter-style deterministic RNG built on the splitmix64 finalizer.
///
/// Streams are identical on every platform (no library distributions are
/// used anywhere). Substreams are derived by hashing (seed, id, id, ...),
/// so trial-parallel experiments reproduce bit-identically regardless of
/// thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ kPhi)) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Derive an independent substream from (seed, ids...).
  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t s = mix(seed ^ kPhi);
    for (std::uint64_t id : ids) s = mix(s ^ mix(id + 0x632be59bd9b4e019ull));
    Rng r(0);
    r.state_ = s;
    return r;
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Uniformly random permutation of [0, n).
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    shuffle(p);
    return p;
  }

 private:
  static constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ull;
  std::uint64_t state_;
};

}  // namespace hyperroute
