////////////////////////////////////////////////////////////////////////////////
// lzscan.cpp
//   Command line front end.  Verbs: parse, verify, stats, bench.
//   Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error.
////////////////////////////////////////////////////////////////////////////////

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lzscan/format.hpp"
#include "lzscan/lpf_parse.hpp"

namespace {

struct CommonOpts {
  std::string input;
  std::int64_t block_size = 0;  // bytes; 0 = default
  std::int64_t blocks = 0;      // block count d; 0 = unset
  std::string ms_mode = "onepos";
  bool skip = true;
  std::int64_t skip_threshold = 40;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  in.seekg(0, std::ios::end);
  const std::streamoff size = in.tellg();
  in.seekg(0);
  std::vector<std::uint8_t> data(static_cast<std::size_t>(size));
  if (size > 0 && !in.read(reinterpret_cast<char*>(data.data()), size)) {
    throw std::runtime_error("cannot read " + path);
  }
  return data;
}

lzscan::ParseOptions make_options(const CommonOpts& co, std::int64_t n) {
  lzscan::ParseOptions opts;
  if (co.blocks > 0) {
    opts.block_size = (n + co.blocks - 1) / co.blocks;
  } else if (co.block_size > 0) {
    opts.block_size = co.block_size;
  }
  opts.ms_mode = co.ms_mode == "standard" ? lzscan::MsMode::kStandard
                                          : lzscan::MsMode::kOnePosition;
  opts.skip = co.skip;
  opts.skip_threshold = co.skip_threshold;
  return opts;
}

void add_common(CLI::App* sub, CommonOpts& co) {
  sub->add_option("--input", co.input, "input file, raw bytes")->required();
  auto* bsize = sub->add_option("--block-size", co.block_size,
                                "block size in bytes (default 2^20)");
  sub->add_option("--blocks", co.blocks, "block count d; sets b = ceil(n/d)")
      ->excludes(bsize);
  sub->add_option("--ms-mode", co.ms_mode, "matching statistics scanner")
      ->check(CLI::IsMember({"onepos", "standard"}));
  sub->add_flag("--skip,!--no-skip", co.skip,
                "jump the scan over long known phrases (default on)");
  sub->add_option("--skip-threshold", co.skip_threshold,
                  "minimum phrase length for skipping")
      ->check(CLI::PositiveNumber);
}

std::string run_stats_line(const lzscan::ParseStats& st) {
  const std::size_t working = st.peak_block_bytes + st.phrase_mark_bytes;
  std::ostringstream os;
  os << "n=" << st.text_length << " z=" << st.phrase_count << " n_over_z="
     << static_cast<double>(st.text_length) / st.phrase_count
     << " wall_time=" << st.seconds << " working_space_bytes=" << working;
  return os.str();
}

int cmd_parse(const CommonOpts& co, const std::string& output,
              const std::string& format) {
  const std::vector<std::uint8_t> text = read_file(co.input);
  if (text.empty()) {
    std::cerr << "lzscan: " << co.input << " is empty\n";
    return 2;
  }
  lzscan::ParseStats st;
  const lzscan::Factorization fact =
      lzscan::lz_parse(text, make_options(co, text.size()), &st);
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "lzscan: cannot open " << output << " for writing\n";
      return 2;
    }
    lzscan::write_parse(out, fact,
                        format == "binary" ? lzscan::ParseFormat::kBinary
                                           : lzscan::ParseFormat::kText);
    out.flush();
    if (!out) {
      std::cerr << "lzscan: write to " << output << " failed\n";
      return 2;
    }
  }
  std::cout << run_stats_line(st) << "\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& parse_path) {
  const std::vector<std::uint8_t> text = read_file(input);
  std::ifstream in(parse_path, std::ios::binary);
  if (!in) {
    std::cerr << "lzscan: cannot open " << parse_path << "\n";
    return 2;
  }
  std::vector<std::uint8_t> decoded;
  try {
    const lzscan::ParseFormat fmt = lzscan::detect_format(in);
    decoded = lzscan::decode(lzscan::read_parse(in, fmt));
  } catch (const lzscan::MalformedParse& e) {
    std::cerr << "lzscan: malformed parse file: " << e.what() << "\n";
    return 2;
  }
  const std::size_t limit = std::min(decoded.size(), text.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (decoded[i] != text[i]) {
      std::cout << "mismatch at offset " << i << "\n";
      return 1;
    }
  }
  if (decoded.size() != text.size()) {
    std::cout << "mismatch at offset " << limit << "\n";
    return 1;
  }
  std::cout << "ok n=" << text.size() << "\n";
  return 0;
}

int cmd_bench(const CommonOpts& co, std::vector<std::int64_t> block_sizes,
              std::vector<std::string> modes, int skip_flag_count) {
  const std::vector<std::uint8_t> text = read_file(co.input);
  if (text.empty()) {
    std::cerr << "lzscan: " << co.input << " is empty\n";
    return 2;
  }
  if (block_sizes.empty()) block_sizes.push_back(std::int64_t(1) << 20);
  if (modes.empty()) modes = {"onepos", "standard"};
  std::vector<bool> skips;
  if (skip_flag_count > 0) {
    skips.push_back(co.skip);
  } else {
    skips = {false, true};
  }
  for (const std::int64_t b : block_sizes) {
    for (const std::string& mode : modes) {
      for (const bool skip : skips) {
        CommonOpts one = co;
        one.block_size = b;
        one.blocks = 0;
        one.ms_mode = mode;
        one.skip = skip;
        lzscan::ParseStats st;
        lzscan::lz_parse(text, make_options(one, text.size()), &st);
        std::cout << "b=" << b << " mode=" << mode
                  << " skip=" << (skip ? "on" : "off") << " "
                  << run_stats_line(st) << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-local LZ77 factorization"};
  app.require_subcommand(1);
  int rc = 0;

  CommonOpts parse_opts;
  std::string parse_output, parse_format = "text";
  CLI::App* parse = app.add_subcommand("parse", "factorize a file");
  add_common(parse, parse_opts);
  parse->add_option("--output", parse_output, "write the parse here");
  parse->add_option("--format", parse_format, "output format")
      ->check(CLI::IsMember({"text", "binary"}));
  parse->callback([&] { rc = cmd_parse(parse_opts, parse_output, parse_format); });

  std::string verify_input, verify_parse;
  CLI::App* verify =
      app.add_subcommand("verify", "decode a parse and compare with a file");
  verify->add_option("--input", verify_input, "original file")->required();
  verify->add_option("--output", verify_parse,
                     "parse file to check (format auto-detected)")
      ->required();
  verify->callback([&] { rc = cmd_verify(verify_input, verify_parse); });

  CommonOpts stats_opts;
  CLI::App* stats =
      app.add_subcommand("stats", "factorize and report, writing nothing");
  add_common(stats, stats_opts);
  stats->callback([&] { rc = cmd_parse(stats_opts, "", "text"); });

  CommonOpts bench_opts;
  std::vector<std::int64_t> bench_sizes;
  std::vector<std::string> bench_modes;
  CLI::App* bench =
      app.add_subcommand("bench", "one stats row per configuration");
  bench->add_option("--input", bench_opts.input, "input file, raw bytes")
      ->required();
  bench->add_option("--block-size", bench_sizes, "block sizes to benchmark");
  bench->add_option("--ms-mode", bench_modes, "scanner modes to benchmark")
      ->check(CLI::IsMember({"onepos", "standard"}));
  bench->add_flag("--skip,!--no-skip", bench_opts.skip,
                  "benchmark only this skip setting");
  bench->add_option("--skip-threshold", bench_opts.skip_threshold,
                    "minimum phrase length for skipping")
      ->check(CLI::PositiveNumber);
  bench->callback([&] {
    rc = cmd_bench(bench_opts, bench_sizes, bench_modes,
                   static_cast<int>(bench->count("--skip") +
                                    bench->count("--no-skip")));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "lzscan: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
