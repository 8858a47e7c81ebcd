#ifndef CAPMSE_RNG_HPP
#define CAPMSE_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace capmse {

/// splitmix64 finalizer (Steele, Lea & Flood 2014). Used to mix stream keys
/// into seeds so that nearby keys give statistically independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// One independent random stream, addressed by a hierarchical key
/// (base_seed, scenario, population, sample). Streams with distinct keys are
/// independent, so replicates can be generated concurrently in any order
/// without changing the results.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  RngStream(std::uint64_t base_seed, std::uint64_t scenario, std::uint64_t population,
            std::uint64_t sample)
      : engine_(mix_key(base_seed, scenario, population, sample)) {}

  std::mt19937_64& engine() { return engine_; }

  /// Uniform on [0, 1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal(double mean, double sd) {
    return std::normal_distribution<double>(mean, sd)(engine_);
  }

  bool bernoulli(double p) { return uniform() < p; }

  std::int64_t poisson(double rate) {
    return std::poisson_distribution<std::int64_t>(rate)(engine_);
  }

  std::int64_t binomial(std::int64_t n, double p) {
    if (n <= 0) return 0;
    if (p <= 0.0) return 0;
    if (p >= 1.0) return n;
    return std::binomial_distribution<std::int64_t>(n, p)(engine_);
  }

  /// One draw of size n over the given cell probabilities (conditional
  /// binomial method). Probabilities need not be normalized.
  std::vector<std::int64_t> multinomial(std::int64_t n, std::span<const double> probs) {
    std::vector<std::int64_t> out(probs.size(), 0);
    double remaining_mass = 0.0;
    for (double p : probs) remaining_mass += p;
    std::int64_t remaining = n;
    for (std::size_t k = 0; k + 1 < probs.size() && remaining > 0; ++k) {
      const double p = remaining_mass > 0.0 ? probs[k] / remaining_mass : 0.0;
      out[k] = binomial(remaining, p);
      remaining -= out[k];
      remaining_mass -= probs[k];
    }
    if (!probs.empty()) out[probs.size() - 1] = remaining;
    return out;
  }

private:
  static std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                               std::uint64_t d) {
    std::uint64_t h = splitmix64(a);
    h = splitmix64(h ^ (b + 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ (c + 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ (d + 0x9e3779b97f4a7c15ULL));
    return h;
  }

  std::mt19937_64 engine_;
};

}  // namespace capmse

#endif
