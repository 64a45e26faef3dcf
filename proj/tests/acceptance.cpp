// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runtime is dominated by the Monte Carlo criteria (4-6);
// expect 15-20 minutes on one core.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "polar/analysis.hpp"
#include "polar/channel.hpp"
#include "polar/construction.hpp"
#include "polar/crc.hpp"
#include "polar/decode.hpp"
#include "polar/sim.hpp"

using namespace polar;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool pass,
            const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", criterion,
              pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// ---------------------------------------------------------------------- 1
void criterion_memory() {
  const MemoryConfig cfg{6, 8};
  bool pass = mem_sc(1024, cfg) == 13305 && mem_scl(1024, 8, cfg) == 71688;
  const std::vector<std::pair<std::size_t, std::uint64_t>> pscl{
      {2, 41992}, {4, 27656}, {8, 20488}, {16, 16904}, {32, 15112}};
  std::ostringstream detail;
  detail << "sc=" << mem_sc(1024, cfg) << " scl=" << mem_scl(1024, 8, cfg);
  for (auto [p, bits] : pscl) {
    const std::uint64_t got = mem_pscl(1024, p, 8, cfg);
    pass = pass && got == bits;
    detail << " P" << p << "=" << got;
  }
  report(1, "memory model", pass, detail.str());
}

// ---------------------------------------------------------------------- 2
void criterion_theorem() {
  std::uint64_t patterns = 0, mismatches = 0, violations = 0;
  for (std::size_t n_bits : {4u, 8u, 16u}) {
    for (std::size_t k = 1; k < n_bits; ++k) {
      const PolarCode code =
          build_code(n_bits, k, 0, {ChannelKind::BEC, 0.5, 0.5});
      const TheoremReport rep =
          verify_theorem_bec(code, TheoremVerifyMode::kExhaustive);
      patterns += rep.patterns;
      mismatches += rep.mismatches;
      violations += rep.peak_violations;
    }
  }
  report(2, "list bound vs MAP on the BEC",
         mismatches == 0 && violations == 0,
         "patterns=" + std::to_string(patterns) +
             " mismatches=" + std::to_string(mismatches) +
             " peak_violations=" + std::to_string(violations));
}

// ---------------------------------------------------------------------- 3
LlrVector acc_frame(const PolarCode& code, const PartitionPlan& plan,
                    const ChannelModel& channel, std::uint64_t seed,
                    std::uint64_t frame) {
  FrameRng rng(seed, frame);
  const BitVector payload = rng.bits(code.n_info);
  const BitVector u = message_to_input_vector(code, plan, payload);
  return transmit(channel, encode(code, u), rng);
}

void criterion_equivalences() {
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = 1.0;
  const std::uint64_t frames = 10'000;
  std::uint64_t diffs = 0;
  std::ostringstream detail;

  for (std::size_t n_bits : {8u, 64u, 256u}) {
    const PolarCode code =
        build_code(n_bits, n_bits / 2, 0, {ChannelKind::BAWGN, 1.0, 0.5});
    const PartitionPlan one = build_partition_plan(code, 1, {0});
    const PartitionPlan quad =
        n_bits >= 8 ? build_partition_plan(code, 4, {0, 0, 0, 0}) : one;
    for (std::uint64_t f = 0; f < frames; ++f) {
      const LlrVector llr = acc_frame(code, one, channel, 1001, f);
      const DecodeResult sc = sc_decode(code, llr);
      if (scl_decode(code, llr, 1).u_hat != sc.u_hat) ++diffs;
      if (pscl_decode(code, one, llr, 4).u_hat !=
          scl_decode(code, llr, 4, &one).u_hat)
        ++diffs;
      if (pscl_decode(code, quad, llr, 1).u_hat != sc.u_hat) ++diffs;
    }
  }
  detail << "scl1/pscl diffs=" << diffs;

  // full-list SCL vs brute-force MAP where the optimum is unique
  DecodeOptions exact;
  exact.exact_arithmetic = true;
  std::uint64_t map_diffs = 0, uniques = 0;
  channel.ebn0_db = 0.0;
  for (std::size_t k : {4u, 6u, 8u}) {
    const PolarCode code =
        build_code(16, k, 0, {ChannelKind::BAWGN, 1.0, double(k) / 16.0});
    const PartitionPlan plan = trivial_plan(code);
    for (std::uint64_t f = 0; f < frames; ++f) {
      const LlrVector llr = acc_frame(code, plan, channel, 2002, f);
      const MapResult map = map_decode(code, llr, &plan);
      if (!map.unique) continue;
      ++uniques;
      if (scl_decode(code, llr, std::size_t{1} << k, nullptr, exact)
              .payload_hat != map.payload_hat)
        ++map_diffs;
    }
  }
  detail << " map_unique=" << uniques << " map_diffs=" << map_diffs;
  report(3, "oracle equivalences", diffs == 0 && map_diffs == 0,
         detail.str());
}

// ---------------------------------------------------------------------- 4
FerEstimate run_point(const PolarCode& code, const DecoderSpec& dec,
                      const ChannelModel& channel, const SimConfig& sim) {
  return estimate_fer(code, plan_for(code, dec), dec, channel, sim);
}

DecoderSpec make_dec(DecoderKind kind, std::size_t list, std::size_t parts,
                     std::vector<unsigned> crc = {}) {
  DecoderSpec dec;
  dec.kind = kind;
  dec.list_size = list;
  dec.partitions = parts;
  dec.crc_lengths = std::move(crc);
  return dec;
}

void criterion_waterfall() {
  const PolarCode code =
      build_code(1024, 512, 0, {ChannelKind::BAWGN, 2.0, 0.5});
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = 2.0;
  channel.rate = 0.5;
  SimConfig sim;
  sim.min_frames = 10'000;
  sim.max_frames = 400'000;
  sim.min_errors = 100;
  sim.seed = 404;

  struct Point {
    const char* name;
    DecoderSpec dec;
    double reference;
    FerEstimate est;
  };
  std::vector<Point> pts{
      {"SC", make_dec(DecoderKind::SC, 1, 1), 0.0795, {}},
      {"SCL(8)", make_dec(DecoderKind::SCL, 8, 1), 0.0094, {}},
      {"PSCL(2,8)", make_dec(DecoderKind::PSCL, 8, 2), 0.0143, {}},
      {"PSCL(4,8)", make_dec(DecoderKind::PSCL, 8, 4), 0.0211, {}},
      {"PSCL(8,8)", make_dec(DecoderKind::PSCL, 8, 8), 0.0388, {}},
  };
  bool pass = true;
  std::ostringstream detail;
  for (Point& p : pts) {
    p.est = run_point(code, p.dec, channel, sim);
    const double fer = p.est.fer();
    const bool in_band = fer >= p.reference / 2 && fer <= p.reference * 2;
    pass = pass && p.est.errors >= 100 && in_band;
    detail << p.name << "=" << fmt(fer) << (in_band ? "" : "(!)") << " ";
  }
  // ordering SC > PSCL(8,8) > PSCL(4,8) > PSCL(2,8) > SCL(8) within 3 sigma
  const int order[] = {0, 4, 3, 2, 1};
  for (int i = 0; i + 1 < 5; ++i) {
    const FerEstimate& hi = pts[order[i]].est;
    const FerEstimate& lo = pts[order[i + 1]].est;
    const double slack = 3 * std::sqrt(hi.std_error() * hi.std_error() +
                                       lo.std_error() * lo.std_error());
    if (hi.fer() - lo.fer() < -slack) {
      pass = false;
      detail << "order!" << pts[order[i]].name << "<" << pts[order[i + 1]].name
             << " ";
    }
  }
  report(4, "waterfall reference point", pass, detail.str());
}

// ---------------------------------------------------------------------- 5
void criterion_design_gain() {
  DecoderSpec dec = make_dec(DecoderKind::PSCL, 8, 2);
  SimConfig sim;
  sim.min_frames = 10'000;
  sim.max_frames = 2'000'000;
  sim.min_errors = 100;
  sim.seed = 505;
  const double ebn0 = 2.5;  // scaled operating point, same gain mechanism

  const SweepResult sweep = design_snr_sweep(1024, 512, 0, ebn0,
                                             {3.0, 4.0}, dec, sim);
  const FerEstimate& d3 = sweep.points[0].fer;
  const FerEstimate& d4 = sweep.points[1].fer;
  // one-sided comparison with Monte Carlo slack: fer4 <= fer3 / 2
  const double lhs = 2.0 * d4.fer();
  const double slack = 3 * std::sqrt(4 * d4.std_error() * d4.std_error() +
                                     d3.std_error() * d3.std_error());
  const bool pass = lhs <= d3.fer() + slack && d4.fer() < d3.fer();
  report(5, "design-SNR construction gain", pass,
         "ebn0=" + fmt(ebn0) + " fer(design3)=" + fmt(d3.fer()) +
             " fer(design4)=" + fmt(d4.fer()) +
             " factor=" + fmt(d3.fer() / d4.fer()));
}

// ---------------------------------------------------------------------- 6
void criterion_crc_assignment() {
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = 2.0;
  channel.rate = 0.5;
  DesignSpec design{ChannelKind::BAWGN, 2.0, 0.5};
  SimConfig sim;
  sim.min_frames = 4'000;
  sim.max_frames = 120'000;
  sim.min_errors = 50;
  sim.seed = 606;

  const CrcAssignResult result =
      successive_crc_assignment(1024, 512, 2, 8, channel, design, 16, sim);
  bool pass = true;
  std::ostringstream detail;
  for (std::size_t p = 0; p < 2; ++p) {
    const auto cell = [&](unsigned c) -> const CrcAssignCell& {
      for (const CrcAssignCell& e : result.table)
        if (e.partition == p + 1 && e.crc_len == c) return e;
      std::abort();
    };
    const CrcAssignCell& chosen = cell(result.chosen[p]);
    const CrcAssignCell& zero = cell(0);
    const CrcAssignCell& full = cell(16);

    // interior minimum: endpoints exceed the chosen FER by >= 1.5x (3 sigma)
    for (const CrcAssignCell* end : {&zero, &full}) {
      const double gap = end->fer.fer() - 1.5 * chosen.fer.fer();
      const double sigma = std::sqrt(
          end->fer.std_error() * end->fer.std_error() +
          2.25 * chosen.fer.std_error() * chosen.fer.std_error());
      if (gap < -3 * sigma) pass = false;
    }
    detail << "p" << p + 1 << ": c=" << result.chosen[p]
           << " fer=" << fmt(chosen.fer.fer()) << " fer(c0)="
           << fmt(zero.fer.fer()) << " fer(c16)=" << fmt(full.fer.fer())
           << "  ";
  }

  // the chosen assignment performs like the published (4, 7): end-to-end
  // PSCL(2,8) FER indistinguishable within 2 standard errors. (Per-cell
  // comparison of the tables is not meaningful across implementations: each
  // candidate c changes the frozen set and the generator polynomial, so the
  // per-partition curves zigzag around a flat basin of near-optimal lengths.)
  SimConfig end_sim;
  end_sim.min_frames = 10'000;
  end_sim.max_frames = 200'000;
  end_sim.min_errors = 100;
  end_sim.seed = 616;
  const auto end_to_end = [&](const std::vector<unsigned>& lens) {
    DecoderSpec dec = make_dec(DecoderKind::PSCL, 8, 2);
    dec.crc_lengths = lens;
    const std::size_t total = lens[0] + lens[1];
    const PolarCode code =
        build_code(1024, 512, total,
                   {ChannelKind::BAWGN, 2.0, (512.0 + total) / 1024.0});
    return estimate_fer(code, plan_for(code, dec), dec, channel, end_sim);
  };
  const FerEstimate ours = end_to_end({result.chosen[0], result.chosen[1]});
  const FerEstimate published = end_to_end({4, 7});
  const double diff = std::fabs(ours.fer() - published.fer());
  const double se = std::sqrt(ours.std_error() * ours.std_error() +
                              published.std_error() * published.std_error());
  if (diff > 2 * se) pass = false;
  detail << "end-to-end fer(chosen)=" << fmt(ours.fer())
         << " fer(4,7)=" << fmt(published.fer());
  report(6, "successive CRC assignment", pass, detail.str());
}

// ---------------------------------------------------------------------- 7
void criterion_map_bound_bawgn() {
  const PolarCode code =
      build_code(128, 10, 0, {ChannelKind::BAWGN, 2.0, 10.0 / 128.0});
  const MapBoundReport bound = map_list_bound(code);
  bool pass = bound.list_bound <= 64;
  std::ostringstream detail;
  detail << "bound=" << bound.list_bound
         << " tail_free_bits=" << bound.tail_free_bits << " ";

  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.rate = 10.0 / 128.0;
  SimConfig sim;
  sim.min_frames = 10'000;
  sim.max_frames = 10'000;
  sim.min_errors = 1'000'000;
  sim.seed = 707;
  const DecoderSpec small =
      make_dec(DecoderKind::SCL, std::size_t(bound.list_bound), 1);
  const DecoderSpec large = make_dec(DecoderKind::SCL, 1024, 1);
  for (double ebn0 : {1.0, 2.0, 3.0}) {
    channel.ebn0_db = ebn0;
    const FerEstimate a = run_point(code, small, channel, sim);
    const FerEstimate b = run_point(code, large, channel, sim);
    const double sigma = std::sqrt(a.std_error() * a.std_error() +
                                   b.std_error() * b.std_error());
    if (std::fabs(a.fer() - b.fer()) > 3 * std::max(sigma, 1e-12))
      pass = false;
    detail << fmt(ebn0) << "dB:" << fmt(a.fer()) << "/" << fmt(b.fer())
           << " ";
  }
  report(7, "MAP bound on the short code", pass, detail.str());
}

// ---------------------------------------------------------------------- 8
void criterion_determinism() {
  const PolarCode code =
      build_code(1024, 512, 0, {ChannelKind::BAWGN, 2.0, 0.5});
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = 2.0;
  channel.rate = 0.5;
  SimConfig sim;
  sim.min_frames = 2'000;
  sim.max_frames = 2'000;
  sim.min_errors = 1'000'000;
  sim.seed = 404;  // reuses the criterion-4 seed

  bool pass = true;
  for (const DecoderSpec& dec :
       {make_dec(DecoderKind::SC, 1, 1), make_dec(DecoderKind::PSCL, 8, 2)}) {
    const PartitionPlan plan = plan_for(code, dec);
    setenv("POLAR_SIM_THREADS", "3", 1);
    const FerEstimate three = estimate_fer(code, plan, dec, channel, sim);
    setenv("POLAR_SIM_THREADS", "2", 1);
    const FerEstimate two = estimate_fer(code, plan, dec, channel, sim);
    unsetenv("POLAR_SIM_THREADS");
    const FerEstimate serial = estimate_fer_serial(code, plan, dec, channel, sim);
    if (three.errors != serial.errors || three.frames != serial.frames ||
        two.errors != serial.errors)
      pass = false;
  }

  Experiment exp;
  exp.n_bits = 256;
  exp.n_info = 128;
  exp.design = {ChannelKind::BAWGN, 2.0, 0.5};
  exp.channel_points = {1.0, 2.0};
  exp.sim.min_frames = 1'000;
  exp.sim.max_frames = 1'000;
  exp.sim.min_errors = 1'000'000;
  exp.sim.seed = 808;
  exp.decoders = {make_dec(DecoderKind::SC, 1, 1),
                  make_dec(DecoderKind::SCL, 4, 1)};
  std::ostringstream a, b;
  setenv("POLAR_SIM_THREADS", "3", 1);
  run_experiment(exp, a, true);
  unsetenv("POLAR_SIM_THREADS");
  run_experiment(exp, b, false);
  if (a.str() != b.str()) pass = false;

  report(8, "serial/parallel reproducibility", pass,
         pass ? "byte-identical across worker counts" : "divergence found");
}

}  // namespace

int main() {
  criterion_memory();
  criterion_theorem();
  criterion_equivalences();
  criterion_waterfall();
  criterion_design_gain();
  criterion_crc_assignment();
  criterion_map_bound_bawgn();
  criterion_determinism();
  std::printf("%s (%d criteria failed)\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
