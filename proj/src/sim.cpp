#include "polar/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polar {

double FerEstimate::std_error() const {
  if (frames == 0) return 0.0;
  const double p = fer();
  return std::sqrt(p * (1.0 - p) / double(frames));
}

std::size_t DecoderSpec::total_crc() const {
  return std::accumulate(crc_lengths.begin(), crc_lengths.end(),
                         std::size_t{0});
}

std::string DecoderSpec::label() const {
  switch (kind) {
    case DecoderKind::SC:
      return "SC";
    case DecoderKind::SCL:
      return "SCL(" + std::to_string(list_size) + ")";
    case DecoderKind::PSCL:
      return "PSCL(" + std::to_string(partitions) + "," +
             std::to_string(list_size) + ")";
    case DecoderKind::MAP:
      return "MAP";
  }
  return "?";
}

void SimConfig::validate() const {
  if (min_errors < 1) throw ConfigError("sim: min_errors must be at least 1");
  if (min_frames < 1) throw ConfigError("sim: min_frames must be at least 1");
  if (max_frames < min_frames)
    throw ConfigError("sim: max_frames must be at least min_frames");
}

int worker_count() {
  if (const char* env = std::getenv("POLAR_SIM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FerEstimate run_monte_carlo(const SimConfig& sim,
                            const std::function<bool(std::uint64_t)>& frame_error,
                            bool parallel) {
  sim.validate();
  // Fixed chunk size keeps the early-stop boundary independent of the
  // worker count, so serial and parallel runs agree exactly.
  constexpr std::uint64_t kChunk = 512;
  const int threads = parallel ? worker_count() : 1;

  FerEstimate est;
  est.seed = sim.seed;
  while (est.frames < sim.max_frames) {
    const std::uint64_t chunk = std::min(kChunk, sim.max_frames - est.frames);
    const std::uint64_t base = est.frames;
    std::uint64_t chunk_errors = 0;
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(static) \
    reduction(+ : chunk_errors)
#endif
    for (long long i = 0; i < static_cast<long long>(chunk); ++i) {
      if (frame_error(base + static_cast<std::uint64_t>(i))) ++chunk_errors;
    }
    (void)threads;
    est.frames += chunk;
    est.errors += chunk_errors;
    if (est.frames >= sim.min_frames && est.errors >= sim.min_errors) break;
  }
  return est;
}

PartitionPlan plan_for(const PolarCode& code, const DecoderSpec& dec) {
  const std::size_t p_count =
      dec.kind == DecoderKind::PSCL ? dec.partitions : 1;
  if (p_count < 1) throw ConfigError("decoder: partitions must be at least 1");
  std::vector<unsigned> lengths = dec.crc_lengths;
  if (lengths.size() > p_count)
    throw ConfigError("decoder: more CRC lengths than partitions");
  lengths.resize(p_count, 0);
  return build_partition_plan(code, p_count, lengths);
}

bool simulate_frame(const PolarCode& code, const PartitionPlan& plan,
                    const DecoderSpec& dec, const ChannelModel& channel,
                    std::uint64_t seed, std::uint64_t frame_index) {
  FrameRng rng(seed, frame_index);
  const BitVector payload = rng.bits(code.n_info);
  const BitVector u = message_to_input_vector(code, plan, payload);
  const BitVector x = encode(code, u);
  const LlrVector llr = transmit(channel, x, rng);

  switch (dec.kind) {
    case DecoderKind::SC:
      return sc_decode(code, llr, dec.options).payload_hat != payload;
    case DecoderKind::SCL:
      return scl_decode(code, llr, dec.list_size, &plan, dec.options)
                 .payload_hat != payload;
    case DecoderKind::PSCL:
      return pscl_decode(code, plan, llr, dec.list_size, dec.options)
                 .payload_hat != payload;
    case DecoderKind::MAP:
      return map_decode(code, llr, &plan).payload_hat != payload;
  }
  throw ConfigError("decoder: unknown kind");
}

namespace {

double channel_param_of(const ChannelModel& channel) {
  return channel.kind == ChannelKind::BAWGN ? channel.ebn0_db
                                            : channel.epsilon;
}

}  // namespace

FerEstimate estimate_fer(const PolarCode& code, const PartitionPlan& plan,
                         const DecoderSpec& dec, const ChannelModel& channel,
                         const SimConfig& sim, bool parallel) {
  code.validate();
  plan.validate_against(code);
  FerEstimate est = run_monte_carlo(
      sim,
      [&](std::uint64_t i) {
        return simulate_frame(code, plan, dec, channel, sim.seed, i);
      },
      parallel);
  est.channel_param = channel_param_of(channel);
  return est;
}

FerEstimate estimate_fer_serial(const PolarCode& code,
                                const PartitionPlan& plan,
                                const DecoderSpec& dec,
                                const ChannelModel& channel,
                                const SimConfig& sim) {
  return estimate_fer(code, plan, dec, channel, sim, false);
}

SweepResult design_snr_sweep(std::size_t n_bits, std::size_t n_info,
                             std::size_t crc_budget,
                             double transmission_ebn0_db,
                             const std::vector<double>& candidate_design_snrs,
                             const DecoderSpec& dec, const SimConfig& sim) {
  if (candidate_design_snrs.empty())
    throw ConfigError("sweep: candidate list is empty");
  const double rate = double(n_info + crc_budget) / double(n_bits);
  ChannelModel channel;
  channel.kind = ChannelKind::BAWGN;
  channel.ebn0_db = transmission_ebn0_db;
  channel.rate = rate;

  SweepResult out;
  for (double design_db : candidate_design_snrs) {
    DesignSpec spec;
    spec.channel_kind = ChannelKind::BAWGN;
    spec.design_param = design_db;
    spec.rate_for_conversion = rate;
    const PolarCode code = build_code(n_bits, n_info, crc_budget, spec);
    const PartitionPlan plan = plan_for(code, dec);
    SweepPoint point;
    point.design_snr_db = design_db;
    point.fer = estimate_fer(code, plan, dec, channel, sim);
    out.points.push_back(point);
    if (point.fer.fer() < out.points[out.best_index].fer.fer())
      out.best_index = out.points.size() - 1;
  }
  return out;
}

CrcAssignResult successive_crc_assignment(std::size_t n_bits,
                                          std::size_t n_info,
                                          std::size_t partitions,
                                          std::size_t list_size,
                                          const ChannelModel& channel,
                                          const DesignSpec& design,
                                          unsigned c_max,
                                          const SimConfig& sim) {
  CrcAssignResult out;
  for (std::size_t p = 0; p < partitions; ++p) {
    bool have_best = false;
    unsigned best_c = 0;
    double best_fer = 0.0;
    for (unsigned c = 0; c <= c_max; ++c) {
      std::vector<unsigned> lengths = out.chosen;
      lengths.push_back(c);
      lengths.resize(partitions, 0);
      const std::size_t total_c = std::accumulate(
          lengths.begin(), lengths.end(), std::size_t{0});

      CrcAssignCell cell;
      cell.partition = p + 1;
      cell.crc_len = c;
      cell.fer.seed = sim.seed;
      cell.fer.channel_param = channel_param_of(channel);

      if (n_info + total_c > n_bits) {
        cell.feasible = false;
        out.table.push_back(cell);
        continue;
      }
      DesignSpec spec = design;
      spec.rate_for_conversion = double(n_info + total_c) / double(n_bits);
      const PolarCode code = build_code(n_bits, n_info, total_c, spec);
      PartitionPlan plan;
      try {
        plan = build_partition_plan(code, partitions, lengths);
      } catch (const ConfigError&) {
        cell.feasible = false;
        out.table.push_back(cell);
        continue;
      }

      cell.fer = run_monte_carlo(sim, [&](std::uint64_t i) {
        FrameRng rng(sim.seed, i);
        const BitVector payload = rng.bits(code.n_info);
        const BitVector u = message_to_input_vector(code, plan, payload);
        const BitVector x = encode(code, u);
        const LlrVector llr = transmit(channel, x, rng);
        return pscl_genie_partition_error(code, plan, llr, list_size, p, u);
      });
      cell.fer.channel_param = channel_param_of(channel);
      out.table.push_back(cell);

      if (!have_best || cell.fer.fer() < best_fer) {
        have_best = true;
        best_c = c;
        best_fer = cell.fer.fer();
      }
    }
    if (!have_best)
      throw ConfigError("crc-assign: no feasible CRC length for partition " +
                        std::to_string(p + 1));
    out.chosen.push_back(best_c);
  }
  return out;
}

// --------------------------------------------------------------------------
// experiment config parsing
// --------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& value, std::size_t line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected a number, got '" + value + "'");
  }
  if (pos != value.size())
    parse_fail(line_no, "trailing characters after number in '" + value + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& value, std::size_t line_no) {
  const double v = parse_number(value, line_no);
  if (v < 0 || v != std::floor(v))
    parse_fail(line_no, "expected a non-negative integer, got '" + value + "'");
  return static_cast<std::uint64_t>(v);
}

std::vector<double> parse_number_list(const std::string& value,
                                      std::size_t line_no) {
  std::vector<double> out;
  std::istringstream iss(value);
  std::string tok;
  while (iss >> tok) out.push_back(parse_number(tok, line_no));
  return out;
}

ChannelKind parse_channel_kind(const std::string& value,
                               std::size_t line_no) {
  if (value == "bawgn") return ChannelKind::BAWGN;
  if (value == "bec") return ChannelKind::BEC;
  parse_fail(line_no, "unknown channel kind '" + value + "'");
}

}  // namespace

Experiment parse_experiment(std::istream& is) {
  Experiment exp;
  std::string section;
  std::string line;
  std::size_t line_no = 0;
  bool saw_design_rate = false;

  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        parse_fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section == "decoder") {
        exp.decoders.emplace_back();
      } else if (section != "code" && section != "channel" &&
                 section != "sim") {
        parse_fail(line_no, "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      parse_fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      parse_fail(line_no, "expected 'key = value'");
    if (section.empty())
      parse_fail(line_no, "key '" + key + "' outside any section");

    if (section == "code") {
      if (key == "n") {
        exp.n_bits = parse_uint(value, line_no);
      } else if (key == "k") {
        exp.n_info = parse_uint(value, line_no);
      } else if (key == "design_channel") {
        exp.design.channel_kind = parse_channel_kind(value, line_no);
      } else if (key == "design_param") {
        exp.design.design_param = parse_number(value, line_no);
      } else if (key == "design_rate") {
        exp.design.rate_for_conversion = parse_number(value, line_no);
        saw_design_rate = true;
      } else {
        parse_fail(line_no, "unknown key '" + key + "' in [code]");
      }
    } else if (section == "channel") {
      if (key == "kind") {
        exp.channel_kind = parse_channel_kind(value, line_no);
      } else if (key == "rate") {
        exp.channel_rate = parse_number(value, line_no);
      } else if (key == "points") {
        exp.channel_points = parse_number_list(value, line_no);
      } else {
        parse_fail(line_no, "unknown key '" + key + "' in [channel]");
      }
    } else if (section == "sim") {
      if (key == "seed") {
        exp.sim.seed = parse_uint(value, line_no);
      } else if (key == "min_frames") {
        exp.sim.min_frames = parse_uint(value, line_no);
      } else if (key == "max_frames") {
        exp.sim.max_frames = parse_uint(value, line_no);
      } else if (key == "min_errors") {
        exp.sim.min_errors = parse_uint(value, line_no);
      } else {
        parse_fail(line_no, "unknown key '" + key + "' in [sim]");
      }
    } else {  // decoder
      DecoderSpec& dec = exp.decoders.back();
      if (key == "kind") {
        if (value == "sc") {
          dec.kind = DecoderKind::SC;
        } else if (value == "scl") {
          dec.kind = DecoderKind::SCL;
        } else if (value == "pscl") {
          dec.kind = DecoderKind::PSCL;
        } else if (value == "map") {
          dec.kind = DecoderKind::MAP;
        } else {
          parse_fail(line_no, "unknown decoder kind '" + value + "'");
        }
      } else if (key == "list") {
        dec.list_size = parse_uint(value, line_no);
      } else if (key == "partitions") {
        dec.partitions = parse_uint(value, line_no);
      } else if (key == "crc") {
        dec.crc_lengths.clear();
        for (double v : parse_number_list(value, line_no)) {
          if (v < 0 || v != std::floor(v))
            parse_fail(line_no, "CRC lengths must be non-negative integers");
          dec.crc_lengths.push_back(static_cast<unsigned>(v));
        }
      } else if (key == "exact") {
        dec.options.exact_arithmetic = parse_uint(value, line_no) != 0;
      } else {
        parse_fail(line_no, "unknown key '" + key + "' in [decoder]");
      }
    }
  }

  if (exp.n_bits == 0) throw ConfigError("config: [code] n is required");
  if (exp.n_info == 0) throw ConfigError("config: [code] k is required");
  if (!saw_design_rate) exp.design.rate_for_conversion = 0.0;  // per decoder
  exp.sim.validate();
  return exp;
}

Experiment parse_experiment_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config: cannot open '" + path + "'");
  return parse_experiment(is);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void run_experiment(const Experiment& exp, std::ostream& csv_out,
                    bool parallel) {
  csv_out << "decoder,ebno_db,frames,errors,fer,stderr,seed\n";
  for (const DecoderSpec& dec : exp.decoders) {
    const std::size_t total_c = dec.total_crc();
    DesignSpec spec = exp.design;
    if (spec.rate_for_conversion <= 0.0)
      spec.rate_for_conversion =
          double(exp.n_info + total_c) / double(exp.n_bits);
    const PolarCode code = build_code(exp.n_bits, exp.n_info, total_c, spec);
    const PartitionPlan plan = plan_for(code, dec);

    for (double point : exp.channel_points) {
      ChannelModel channel;
      channel.kind = exp.channel_kind;
      if (channel.kind == ChannelKind::BAWGN)
        channel.ebn0_db = point;
      else
        channel.epsilon = point;
      channel.rate = exp.channel_rate > 0.0
                         ? exp.channel_rate
                         : double(exp.n_info) / double(exp.n_bits);
      const FerEstimate est =
          estimate_fer(code, plan, dec, channel, exp.sim, parallel);
      csv_out << dec.label() << ',' << format_double(est.channel_param) << ','
              << est.frames << ',' << est.errors << ','
              << format_double(est.fer()) << ','
              << format_double(est.std_error()) << ',' << est.seed << '\n';
    }
  }
}

}  // namespace polar
