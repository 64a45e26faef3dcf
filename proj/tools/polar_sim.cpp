// Command-line front end: code construction, encode/decode one-shots,
// Monte Carlo FER simulation, design-SNR sweeps, CRC assignment, the
// decoder memory model and the BEC list-bound verifier.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polar/analysis.hpp"
#include "polar/bec_symbolic.hpp"
#include "polar/channel.hpp"
#include "polar/code.hpp"
#include "polar/construction.hpp"
#include "polar/crc.hpp"
#include "polar/decode.hpp"
#include "polar/sim.hpp"

namespace {

using namespace polar;

struct ConstructArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t crc = 0;
  std::string design_channel = "bawgn";
  double design_param = 0.0;
  double design_rate = 0.0;  // 0 = (K+C)/N
};

void add_construct_options(CLI::App* cmd, ConstructArgs& args) {
  cmd->add_option("--n", args.n, "block length (power of two)")->required();
  cmd->add_option("--k", args.k, "information bits")->required();
  cmd->add_option("--crc", args.crc, "total CRC bits");
  cmd->add_option("--design-channel", args.design_channel,
                  "construction channel: bawgn | bec");
  cmd->add_option("--design-param", args.design_param,
                  "design Eb/N0 in dB (bawgn) or epsilon (bec)");
  cmd->add_option("--design-rate", args.design_rate,
                  "rate for the dB->sigma^2 map (default (K+C)/N)");
}

PolarCode construct_code(const ConstructArgs& args) {
  DesignSpec spec;
  if (args.design_channel == "bawgn") {
    spec.channel_kind = ChannelKind::BAWGN;
  } else if (args.design_channel == "bec") {
    spec.channel_kind = ChannelKind::BEC;
  } else {
    throw ConfigError("unknown design channel '" + args.design_channel + "'");
  }
  spec.design_param = args.design_param;
  spec.rate_for_conversion =
      args.design_rate > 0.0
          ? args.design_rate
          : double(args.k + args.crc) / double(args.n);
  return build_code(args.n, args.k, args.crc, spec);
}

struct DecoderArgs {
  std::string kind = "sc";
  std::size_t list = 1;
  std::size_t partitions = 1;
  std::vector<unsigned> crc_lengths;
  bool exact = false;
};

void add_decoder_options(CLI::App* cmd, DecoderArgs& args) {
  cmd->add_option("--decoder", args.kind, "sc | scl | pscl | map");
  cmd->add_option("--list", args.list, "list size L");
  cmd->add_option("--partitions", args.partitions, "partition count P");
  cmd->add_option("--crc-lengths", args.crc_lengths,
                  "per-partition CRC lengths");
  cmd->add_flag("--exact", args.exact,
                "tanh-rule LLRs and exact path metrics");
}

DecoderSpec make_decoder(const DecoderArgs& args) {
  DecoderSpec dec;
  if (args.kind == "sc") {
    dec.kind = DecoderKind::SC;
  } else if (args.kind == "scl") {
    dec.kind = DecoderKind::SCL;
  } else if (args.kind == "pscl") {
    dec.kind = DecoderKind::PSCL;
  } else if (args.kind == "map") {
    dec.kind = DecoderKind::MAP;
  } else {
    throw ConfigError("unknown decoder '" + args.kind + "'");
  }
  dec.list_size = args.list;
  dec.partitions = args.partitions;
  dec.crc_lengths = args.crc_lengths;
  dec.options.exact_arithmetic = args.exact;
  return dec;
}

struct SimArgs {
  std::uint64_t min_frames = 10'000;
  std::uint64_t max_frames = 10'000'000;
  std::uint64_t min_errors = 100;
  std::uint64_t seed = 1;
  bool serial = false;
};

void add_sim_options(CLI::App* cmd, SimArgs& args) {
  cmd->add_option("--min-frames", args.min_frames, "");
  cmd->add_option("--max-frames", args.max_frames, "");
  cmd->add_option("--min-errors", args.min_errors, "");
  cmd->add_option("--seed", args.seed, "");
  cmd->add_flag("--serial", args.serial, "disable frame parallelism");
}

SimConfig make_sim(const SimArgs& args) {
  SimConfig sim;
  sim.min_frames = args.min_frames;
  sim.max_frames = args.max_frames;
  sim.min_errors = args.min_errors;
  sim.seed = args.seed;
  return sim;
}

BitVector parse_bits(const std::string& s) {
  BitVector bits;
  for (char c : s) {
    if (c == '0' || c == '1')
      bits.push_back(static_cast<Bit>(c - '0'));
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw ConfigError("bit strings may contain only 0, 1 and whitespace");
  }
  return bits;
}

std::string bits_to_string(const BitVector& bits) {
  std::string s;
  s.reserve(bits.size());
  for (Bit b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string read_stream_or_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-" || path.empty()) {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open '" + path + "'");
    buf << is.rdbuf();
  }
  return buf.str();
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ConfigError("cannot open '" + path + "' for writing");
  return file;
}

int run(int argc, char** argv) {
  CLI::App app{"polar code construction, decoding and FER simulation"};
  app.require_subcommand(1);

  // construct ---------------------------------------------------------------
  ConstructArgs con_args;
  std::string con_out;
  auto* con = app.add_subcommand("construct", "emit a code-spec file");
  add_construct_options(con, con_args);
  con->add_option("--out", con_out, "output path (default stdout)");

  // encode ------------------------------------------------------------------
  std::string enc_code, enc_payload, enc_payload_file;
  DecoderArgs enc_dec;  // partitions / crc lengths define the layout
  auto* enc = app.add_subcommand("encode", "encode a payload");
  enc->add_option("--code", enc_code, "code-spec file")->required();
  enc->add_option("--payload", enc_payload, "payload bits as a 0/1 string");
  enc->add_option("--payload-file", enc_payload_file,
                  "file with payload bits ('-' = stdin)");
  enc->add_option("--partitions", enc_dec.partitions, "partition count");
  enc->add_option("--crc-lengths", enc_dec.crc_lengths,
                  "per-partition CRC lengths");

  // decode ------------------------------------------------------------------
  std::string dec_code, dec_llrs;
  DecoderArgs dec_dec;
  auto* dcd = app.add_subcommand("decode", "decode one LLR vector");
  dcd->add_option("--code", dec_code, "code-spec file")->required();
  dcd->add_option("--llrs", dec_llrs,
                  "file with N whitespace-separated LLRs ('-' = stdin)")
      ->required();
  add_decoder_options(dcd, dec_dec);

  // simulate ----------------------------------------------------------------
  std::string sim_config, sim_out;
  bool sim_serial = false;
  auto* simc = app.add_subcommand("simulate", "run an experiment config");
  simc->add_option("--config", sim_config, "experiment config file")
      ->required();
  simc->add_option("--out", sim_out, "CSV output path (default stdout)");
  simc->add_flag("--serial", sim_serial, "disable frame parallelism");

  // sweep-design-snr ----------------------------------------------------------
  ConstructArgs swp_con;
  DecoderArgs swp_dec;
  SimArgs swp_sim;
  double swp_ebn0 = 0.0;
  std::vector<double> swp_cands;
  std::string swp_out;
  auto* swp = app.add_subcommand("sweep-design-snr",
                                 "FER vs construction design SNR");
  add_construct_options(swp, swp_con);
  swp->add_option("--ebno", swp_ebn0, "transmission Eb/N0 in dB")->required();
  swp->add_option("--candidates", swp_cands, "design SNR candidates in dB")
      ->required();
  add_decoder_options(swp, swp_dec);
  add_sim_options(swp, swp_sim);
  swp->add_option("--out", swp_out, "CSV output path (default stdout)");

  // crc-assign ----------------------------------------------------------------
  SimArgs crc_sim;
  std::size_t crc_n = 0, crc_k = 0, crc_p = 2, crc_l = 8;
  unsigned crc_cmax = 16;
  double crc_ebn0 = 0.0, crc_design = 0.0;
  std::string crc_out;
  auto* crs = app.add_subcommand("crc-assign",
                                 "successive per-partition CRC optimization");
  crs->add_option("--n", crc_n, "block length")->required();
  crs->add_option("--k", crc_k, "information bits")->required();
  crs->add_option("--partitions", crc_p, "partition count");
  crs->add_option("--list", crc_l, "list size");
  crs->add_option("--ebno", crc_ebn0, "transmission Eb/N0 in dB")->required();
  crs->add_option("--design-param", crc_design, "design Eb/N0 in dB");
  crs->add_option("--cmax", crc_cmax, "largest CRC length to try");
  add_sim_options(crs, crc_sim);
  crs->add_option("--out", crc_out, "CSV output path (default stdout)");

  // memory --------------------------------------------------------------------
  std::size_t mem_n = 1024, mem_l = 8;
  unsigned mem_qa = 6, mem_qpm = 8;
  std::vector<std::size_t> mem_parts{2, 4, 8, 16, 32};
  std::string mem_decoder = "pscl";
  bool mem_as_printed = false;
  auto* mem = app.add_subcommand("memory", "decoder memory model in bits");
  mem->add_option("--n", mem_n, "block length");
  mem->add_option("--list", mem_l, "list size");
  mem->add_option("--qalpha", mem_qa, "LLR quantization bits");
  mem->add_option("--qpm", mem_qpm, "path-metric quantization bits");
  mem->add_option("--partitions", mem_parts, "partition counts (pscl)");
  mem->add_option("--decoder", mem_decoder, "sc | scl | pscl");
  mem->add_flag("--as-printed", mem_as_printed,
                "closed-form beta-storage variant (N/P bits larger)");

  // map-bound -------------------------------------------------------------
  std::string mb_code;
  std::size_t mb_partitions = 1;
  std::vector<unsigned> mb_crc;
  auto* mb = app.add_subcommand("map-bound",
                                "list size at which SCL matches MAP");
  mb->add_option("--code", mb_code, "code-spec file")->required();
  mb->add_option("--partitions", mb_partitions, "partition count");
  mb->add_option("--crc-lengths", mb_crc, "per-partition CRC lengths");

  // verify-bec ------------------------------------------------------------
  std::string vb_code, vb_mode = "exhaustive";
  std::uint64_t vb_samples = 0, vb_seed = 1;
  double vb_eps = 0.5;
  auto* vb = app.add_subcommand(
      "verify-bec", "check the MAP list bound over BEC erasure patterns");
  vb->add_option("--code", vb_code, "code-spec file")->required();
  vb->add_option("--mode", vb_mode, "exhaustive | sampled");
  vb->add_option("--samples", vb_samples, "pattern count (sampled mode)");
  vb->add_option("--epsilon", vb_eps, "erasure probability (sampled)");
  vb->add_option("--seed", vb_seed, "");

  CLI11_PARSE(app, argc, argv);

  if (con->parsed()) {
    const PolarCode code = construct_code(con_args);
    std::ofstream file;
    write_code_spec(open_output(file, con_out), code);
    return 0;
  }

  if (enc->parsed()) {
    const PolarCode code = read_code_spec_file(enc_code);
    if (enc_payload.empty() == enc_payload_file.empty())
      throw ConfigError("encode: give exactly one of --payload/--payload-file");
    const BitVector payload = parse_bits(
        enc_payload.empty() ? read_stream_or_file(enc_payload_file)
                            : enc_payload);
    std::vector<unsigned> lengths = enc_dec.crc_lengths;
    lengths.resize(enc_dec.partitions, 0);
    const PartitionPlan plan =
        build_partition_plan(code, enc_dec.partitions, lengths);
    const BitVector u = message_to_input_vector(code, plan, payload);
    std::cout << bits_to_string(encode(code, u)) << '\n';
    return 0;
  }

  if (dcd->parsed()) {
    const PolarCode code = read_code_spec_file(dec_code);
    LlrVector llr;
    std::istringstream iss(read_stream_or_file(dec_llrs));
    double v;
    while (iss >> v) llr.push_back(v);
    if (llr.size() != code.n_bits)
      throw ConfigError("decode: expected " + std::to_string(code.n_bits) +
                        " LLRs, got " + std::to_string(llr.size()));
    const DecoderSpec dec = make_decoder(dec_dec);
    const PartitionPlan plan = plan_for(code, dec);
    if (dec.kind == DecoderKind::MAP) {
      const MapResult res = map_decode(code, llr, &plan);
      std::cout << "u=" << bits_to_string(res.u_hat) << '\n'
                << "payload=" << bits_to_string(res.payload_hat) << '\n'
                << "unique=" << (res.unique ? 1 : 0) << '\n';
      return 0;
    }
    DecodeResult res;
    switch (dec.kind) {
      case DecoderKind::SC:
        res = sc_decode(code, llr, dec.options);
        break;
      case DecoderKind::SCL:
        res = scl_decode(code, llr, dec.list_size, &plan, dec.options);
        break;
      default:
        res = pscl_decode(code, plan, llr, dec.list_size, dec.options);
        break;
    }
    std::cout << "u=" << bits_to_string(res.u_hat) << '\n'
              << "payload=" << bits_to_string(res.payload_hat) << '\n';
    std::cout << "crc=";
    for (std::size_t p = 0; p < res.crc_pass.size(); ++p)
      std::cout << (p ? "," : "") << (res.crc_pass[p] ? "pass" : "fail");
    std::cout << '\n';
    return 0;
  }

  if (simc->parsed()) {
    const Experiment exp = parse_experiment_file(sim_config);
    std::ofstream file;
    run_experiment(exp, open_output(file, sim_out), !sim_serial);
    return 0;
  }

  if (swp->parsed()) {
    const SweepResult result = design_snr_sweep(
        swp_con.n, swp_con.k, swp_con.crc, swp_ebn0, swp_cands,
        make_decoder(swp_dec), make_sim(swp_sim));
    std::ofstream file;
    std::ostream& os = open_output(file, swp_out);
    os << "design_snr_db,frames,errors,fer,stderr,seed\n";
    for (const SweepPoint& pt : result.points)
      os << format_double(pt.design_snr_db) << ',' << pt.fer.frames << ','
         << pt.fer.errors << ',' << format_double(pt.fer.fer()) << ','
         << format_double(pt.fer.std_error()) << ',' << pt.fer.seed << '\n';
    std::cerr << "best_design_snr_db="
              << format_double(result.points[result.best_index].design_snr_db)
              << '\n';
    return 0;
  }

  if (crs->parsed()) {
    ChannelModel channel;
    channel.kind = ChannelKind::BAWGN;
    channel.ebn0_db = crc_ebn0;
    channel.rate = double(crc_k) / double(crc_n);
    DesignSpec design;
    design.channel_kind = ChannelKind::BAWGN;
    design.design_param = crc_design;
    const CrcAssignResult result = successive_crc_assignment(
        crc_n, crc_k, crc_p, crc_l, channel, design, crc_cmax,
        make_sim(crc_sim));
    std::ofstream file;
    std::ostream& os = open_output(file, crc_out);
    os << "partition,crc_len,frames,errors,fer\n";
    for (const CrcAssignCell& cell : result.table) {
      if (!cell.feasible) continue;
      os << cell.partition << ',' << cell.crc_len << ',' << cell.fer.frames
         << ',' << cell.fer.errors << ',' << format_double(cell.fer.fer())
         << '\n';
    }
    std::cerr << "chosen=";
    for (std::size_t p = 0; p < result.chosen.size(); ++p)
      std::cerr << (p ? "," : "") << result.chosen[p];
    std::cerr << '\n';
    return 0;
  }

  if (mem->parsed()) {
    const MemoryConfig cfg{mem_qa, mem_qpm};
    std::cout << "P,bits\n";
    if (mem_decoder == "sc") {
      std::cout << "1," << mem_sc(mem_n, cfg) << '\n';
    } else if (mem_decoder == "scl") {
      std::cout << "1," << mem_scl(mem_n, mem_l, cfg) << '\n';
    } else if (mem_decoder == "pscl") {
      const auto variant = mem_as_printed ? PsclMemoryVariant::kAsPrinted
                                          : PsclMemoryVariant::kFigureConsistent;
      for (std::size_t p : mem_parts)
        std::cout << p << ',' << mem_pscl(mem_n, p, mem_l, cfg, variant)
                  << '\n';
    } else {
      throw ConfigError("memory: unknown decoder '" + mem_decoder + "'");
    }
    return 0;
  }

  if (mb->parsed()) {
    const PolarCode code = read_code_spec_file(mb_code);
    PartitionPlan plan;
    const bool with_plan = mb_partitions > 1 || !mb_crc.empty();
    if (with_plan) {
      std::vector<unsigned> lengths = mb_crc;
      lengths.resize(mb_partitions, 0);
      plan = build_partition_plan(code, mb_partitions, lengths);
    }
    const MapBoundReport report =
        map_list_bound(code, with_plan ? &plan : nullptr);
    if (report.last_frozen_index)
      std::cout << "last_frozen_index=" << *report.last_frozen_index << '\n';
    else
      std::cout << "last_frozen_index=none\n";
    std::cout << "tail_free_bits=" << report.tail_free_bits << '\n'
              << "list_bound=" << report.list_bound << '\n';
    for (std::size_t p = 0; p < report.per_partition.size(); ++p)
      std::cout << "partition" << p + 1
                << "_tail_free_bits=" << report.per_partition[p].first
                << " list_bound=" << report.per_partition[p].second << '\n';
    return 0;
  }

  if (vb->parsed()) {
    const PolarCode code = read_code_spec_file(vb_code);
    TheoremVerifyMode mode;
    if (vb_mode == "exhaustive") {
      mode = TheoremVerifyMode::kExhaustive;
    } else if (vb_mode == "sampled") {
      mode = TheoremVerifyMode::kSampled;
    } else {
      throw ConfigError("verify-bec: unknown mode '" + vb_mode + "'");
    }
    const TheoremReport report =
        verify_theorem_bec(code, mode, vb_samples, vb_eps, vb_seed);
    std::cout << "patterns=" << report.patterns << '\n'
              << "map_successes=" << report.map_successes << '\n'
              << "mismatches=" << report.mismatches << '\n'
              << "peak_violations=" << report.peak_violations << '\n'
              << "list_bound=" << report.list_bound << '\n'
              << "max_peak_before_last_frozen="
              << report.max_peak_before_last_frozen << '\n'
              << "ok=" << (report.ok() ? 1 : 0) << '\n';
    if (!report.ok()) {
      std::cerr << "first_bad_pattern=" << report.first_bad_pattern << '\n';
      return 2;
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polar::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
