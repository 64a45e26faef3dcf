#ifndef POLAR_SIM_HPP
#define POLAR_SIM_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "polar/channel.hpp"
#include "polar/code.hpp"
#include "polar/construction.hpp"
#include "polar/crc.hpp"
#include "polar/decode.hpp"

namespace polar {

struct FerEstimate {
  double channel_param = 0.0;  // Eb/N0 in dB or epsilon
  std::uint64_t frames = 0;
  std::uint64_t errors = 0;
  std::uint64_t seed = 0;

  double fer() const { return frames ? double(errors) / double(frames) : 0.0; }
  double std_error() const;  // binomial sqrt(fer (1-fer) / frames)
};

enum class DecoderKind { SC, SCL, PSCL, MAP };

struct DecoderSpec {
  DecoderKind kind = DecoderKind::SC;
  std::size_t list_size = 1;
  std::size_t partitions = 1;
  std::vector<unsigned> crc_lengths;  // per partition; empty = no CRC
  DecodeOptions options;

  std::size_t total_crc() const;
  std::string label() const;  // "SC", "SCL(8)", "PSCL(2,8)", "MAP"
};

struct SimConfig {
  std::uint64_t min_frames = 10'000;
  std::uint64_t max_frames = 10'000'000;
  std::uint64_t min_errors = 100;
  std::uint64_t seed = 1;

  void validate() const;
};

/// POLAR_SIM_THREADS override, else hardware parallelism.
int worker_count();

/// Deterministic chunked Monte Carlo over an arbitrary per-frame error
/// predicate: frame i draws from stream (seed, i), so the count of errors
/// is independent of scheduling. Stops at the first chunk boundary with
/// >= min_errors errors (but never before min_frames), or at max_frames.
FerEstimate run_monte_carlo(const SimConfig& sim,
                            const std::function<bool(std::uint64_t)>& frame_error,
                            bool parallel = true);

/// One frame: random payload, encode, transmit, decode, compare payloads.
bool simulate_frame(const PolarCode& code, const PartitionPlan& plan,
                    const DecoderSpec& dec, const ChannelModel& channel,
                    std::uint64_t seed, std::uint64_t frame_index);

FerEstimate estimate_fer(const PolarCode& code, const PartitionPlan& plan,
                         const DecoderSpec& dec, const ChannelModel& channel,
                         const SimConfig& sim, bool parallel = true);

/// Serial reference loop, kept alongside the OpenMP path for testing and
/// benchmarking; results are bit-identical by construction.
FerEstimate estimate_fer_serial(const PolarCode& code,
                                const PartitionPlan& plan,
                                const DecoderSpec& dec,
                                const ChannelModel& channel,
                                const SimConfig& sim);

PartitionPlan plan_for(const PolarCode& code, const DecoderSpec& dec);

// --------------------------------------------------------------------------
// design-SNR sweep
// --------------------------------------------------------------------------

struct SweepPoint {
  double design_snr_db = 0.0;
  FerEstimate fer;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::size_t best_index = 0;  // argmin FER (tie: earlier candidate)
};

/// Fixes the transmission channel and re-constructs the code for each
/// candidate design SNR (Eb/N0 dB, rate (K+C)/N in the conversion).
SweepResult design_snr_sweep(std::size_t n_bits, std::size_t n_info,
                             std::size_t crc_budget,
                             double transmission_ebn0_db,
                             const std::vector<double>& candidate_design_snrs,
                             const DecoderSpec& dec, const SimConfig& sim);

// --------------------------------------------------------------------------
// successive CRC assignment
// --------------------------------------------------------------------------

struct CrcAssignCell {
  std::size_t partition = 0;  // 1-based in reports
  unsigned crc_len = 0;
  bool feasible = true;
  FerEstimate fer;
};

struct CrcAssignResult {
  std::vector<unsigned> chosen;
  std::vector<CrcAssignCell> table;
};

/// For each partition in order, sweeps the CRC length 0..c_max with the
/// earlier partitions genie-decoded and later partitions at CRC 0; the code
/// is reconstructed for every candidate (the non-frozen budget is
/// K + sum of CRC lengths so far + candidate). Picks the measured-FER
/// argmin, smaller length on ties.
CrcAssignResult successive_crc_assignment(std::size_t n_bits,
                                          std::size_t n_info,
                                          std::size_t partitions,
                                          std::size_t list_size,
                                          const ChannelModel& channel,
                                          const DesignSpec& design,
                                          unsigned c_max,
                                          const SimConfig& sim);

// --------------------------------------------------------------------------
// experiment configs ("key = value" lines under [section] headers)
// --------------------------------------------------------------------------

struct Experiment {
  std::size_t n_bits = 0;
  std::size_t n_info = 0;
  DesignSpec design;        // design_param only; rate filled per decoder
  ChannelKind channel_kind = ChannelKind::BAWGN;
  double channel_rate = 0.0;  // 0 = default K/N
  std::vector<double> channel_points;  // Eb/N0 dB or epsilon
  SimConfig sim;
  std::vector<DecoderSpec> decoders;
};

Experiment parse_experiment(std::istream& is);
Experiment parse_experiment_file(const std::string& path);

/// Cross-product of channel points and decoders; CSV with header
/// `decoder,ebno_db,frames,errors,fer,stderr,seed`.
void run_experiment(const Experiment& exp, std::ostream& csv_out,
                    bool parallel = true);

std::string format_double(double v);  // %.9g, '.' decimal separator

}  // namespace polar

#endif
