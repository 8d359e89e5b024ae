#pragma once

#include <array>
#include <cstdint>

namespace cojump {

// Stream spec. Identical (seed, stream_id) reproduces the identical variate
// sequence on every platform and under any degree of parallelism; callers
// that fan out work assign one stream_id per unit of work.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  RngStream substream(std::uint64_t offset) const {
    return RngStream{seed, stream_id + offset};
  }
};

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
// The key is the seed, the upper counter words are the stream id, and the
// lower counter words enumerate blocks, so streams never overlap.
class Rng {
 public:
  Rng() : Rng(RngStream{}) {}
  explicit Rng(RngStream s);
  Rng(std::uint64_t seed, std::uint64_t stream_id)
      : Rng(RngStream{seed, stream_id}) {}

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on the open interval (0,1), 53-bit resolution.
  double uniform();

  // Standard normal via the AS241 inverse CDF: one uniform per variate,
  // no rejection loop, so draw counts are data independent.
  double normal();

  double exponential(double mean);
  bool bernoulli(double p);

  // Marsaglia-Tsang for shape >= 1, boosted below 1.
  double gamma(double shape, double scale);
  double inverse_gamma(double shape, double scale);
  double beta(double a, double b);
  double chi_square(double dof);
  double student_t(double dof);

  // Normal(mean, sd^2) conditioned on the result being >= lower.
  double truncated_normal_lower(double mean, double sd, double lower);

  const RngStream& stream() const { return stream_; }

 private:
  void refill();

  RngStream stream_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> block_;
  int pos_;
};

}  // namespace cojump
