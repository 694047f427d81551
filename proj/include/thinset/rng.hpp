#pragma once

#include <array>
#include <cstdint>

namespace thinset {

/// xoshiro256** stream keyed by (seed, stream_id, index). Each key is hashed
/// through splitmix64, so any (seed, stream, index) triple can be opened
/// directly and Monte Carlo results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

  std::uint64_t next();
  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Standard normal (Box-Muller, second value cached).
  double normal();
  /// Exp(1).
  double exponential();

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Seed resolution: explicit flag, else THINSET_SEED from the environment, else 0.
std::uint64_t resolve_seed(const std::uint64_t* flag_value);

}  // namespace thinset
