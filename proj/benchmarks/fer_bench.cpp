// Throughput comparison: serial vs OpenMP frame-parallel Monte Carlo, and
// the copy-on-write list decoder vs the naive full-copy reference.

#include <chrono>
#include <cstdio>

#include "polar/channel.hpp"
#include "polar/construction.hpp"
#include "polar/decode.hpp"
#include "polar/sim.hpp"

using namespace polar;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_monte_carlo() {
  const PolarCode code =
      build_code(1024, 512, 0, {ChannelKind::BAWGN, 2.0, 0.5});
  DecoderSpec dec;
  dec.kind = DecoderKind::SCL;
  dec.list_size = 8;
  const PartitionPlan plan = plan_for(code, dec);
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = 2.0;
  SimConfig sim;
  sim.min_frames = 2000;
  sim.max_frames = 2000;
  sim.min_errors = 1'000'000;
  sim.seed = 1;

  std::printf("Monte Carlo, P(1024,512), SCL(8), %llu frames, %d worker(s)\n",
              static_cast<unsigned long long>(sim.max_frames), worker_count());
  auto start = Clock::now();
  const FerEstimate serial = estimate_fer_serial(code, plan, dec, channel, sim);
  const double t_serial = seconds_since(start);
  start = Clock::now();
  const FerEstimate parallel = estimate_fer(code, plan, dec, channel, sim);
  const double t_parallel = seconds_since(start);
  std::printf("  serial   : %8.2f frames/s  (%llu errors)\n",
              serial.frames / t_serial,
              static_cast<unsigned long long>(serial.errors));
  std::printf("  parallel : %8.2f frames/s  (%llu errors)\n",
              parallel.frames / t_parallel,
              static_cast<unsigned long long>(parallel.errors));
  std::printf("  identical results: %s\n",
              serial.errors == parallel.errors &&
                      serial.frames == parallel.frames
                  ? "yes"
                  : "NO");
}

void bench_list_decoders() {
  const PolarCode code =
      build_code(256, 128, 0, {ChannelKind::BAWGN, 2.0, 0.5});
  const PartitionPlan plan = trivial_plan(code);
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = 1.0;
  const int frames = 400;

  std::printf("\nList decoders, P(256,128), %d frames\n", frames);
  for (std::size_t list : {2u, 8u, 32u}) {
    double t_fast = 0.0, t_ref = 0.0;
    std::size_t mismatches = 0;
    for (int frame = 0; frame < frames; ++frame) {
      FrameRng rng(17, frame);
      const BitVector payload = rng.bits(code.n_info);
      const BitVector u = message_to_input_vector(code, plan, payload);
      const LlrVector llr = transmit(channel, encode(code, u), rng);

      auto start = Clock::now();
      const DecodeResult fast = scl_decode(code, llr, list);
      t_fast += seconds_since(start);
      start = Clock::now();
      const DecodeResult ref = scl_decode_reference(code, llr, list);
      t_ref += seconds_since(start);
      if (fast.u_hat != ref.u_hat) ++mismatches;
    }
    std::printf(
        "  L=%-3zu  copy-on-write: %8.1f frames/s   full-copy: %8.1f "
        "frames/s   speedup %.2fx   mismatches %zu\n",
        list, frames / t_fast, frames / t_ref, t_ref / t_fast, mismatches);
  }
}

}  // namespace

int main() {
  bench_monte_carlo();
  bench_list_decoders();
  return 0;
}
