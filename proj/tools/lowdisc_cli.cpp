// lowdisc: generate, measure and validate low-discrepancy de Bruijn sequences.

#include "lowdisc/analysis.hpp"
#include "lowdisc/generator.hpp"
#include "lowdisc/search.hpp"
#include "lowdisc/sequence_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using namespace lowdisc;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;

constexpr std::uint64_t kGenerateMaxLength = std::uint64_t{1} << 40;
constexpr std::uint64_t kRenderMaxLength = std::uint64_t{1} << 26;

struct Options {
  std::uint32_t base = 2;
  std::size_t order = 1;
  std::string format = "digits";
  std::string input = "-";
  std::string output;
  double timeout = 60.0;
  std::uint64_t nodes = 0;
  unsigned threads = 1;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

SequenceTextFormat text_format(const Options& o) {
  auto f = parse_format_name(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "' (expected digits or csv)");
  if (*f == SequenceTextFormat::Digits && o.base > 10) {
    throw UsageError("digits format needs base <= 10; use --format csv");
  }
  return *f;
}

// Validates base and order and returns base^order, which must not exceed cap.
std::uint64_t checked_length(const Options& o, std::uint64_t cap) {
  if (o.base < 2) throw UsageError("--base must be at least 2");
  if (o.order < 1) throw UsageError("--order must be at least 1");
  const std::uint64_t len = checked_power(AlphabetSize(o.base), o.order);
  if (len == 0 || len > cap) {
    throw UsageError("base^order exceeds the limit of " + std::to_string(cap));
  }
  return len;
}

CyclicSequence read_input(const Options& o) {
  if (o.base < 2) throw UsageError("--base must be at least 2");
  const SequenceTextFormat format = text_format(o);
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_sequence(text, AlphabetSize(o.base), format);
}

int cmd_generate(const Options& o) {
  checked_length(o, kGenerateMaxLength);
  SequenceWriter writer(std::cout, text_format(o), AlphabetSize(o.base));
  generate_each(AlphabetSize(o.base), o.order, [&](Symbol s) { writer.put(s); });
  writer.finish();
  return kExitOk;
}

int cmd_discrepancy(const Options& o) {
  const CyclicSequence w = read_input(o);
  const DiscrepancyReport report = discrepancy(w);
  std::cout << report.value << '\n';
  if (o.verbose) {
    const auto& wit = report.witness;
    std::vector<Symbol> window;
    for (std::size_t i = 0; i < wit.length; ++i) window.push_back(w.at_circular(wit.start + i));
    std::cout << "witness start=" << wit.start << " length=" << wit.length
              << " max_symbol=" << wit.symbol_max << " min_symbol=" << wit.symbol_min
              << " symbols=" << render_sequence(window, text_format(o)) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const Options& o) {
  if (o.order < 1) throw UsageError("--order must be at least 1");
  const CyclicSequence w = read_input(o);
  const DeBruijnCheck check = check_de_bruijn(w, o.order);
  if (check.ok) {
    std::cout << "OK\n";
    return kExitOk;
  }
  if (check.duplicate) {
    std::vector<Symbol> window;
    for (std::size_t i = 0; i < o.order; ++i) {
      window.push_back(w.at_circular(check.duplicate->first + i));
    }
    std::cout << "FAIL duplicate window " << render_sequence(window, text_format(o))
              << " at positions " << check.duplicate->first << " and "
              << check.duplicate->second << '\n';
  } else {
    std::cout << "FAIL " << check.reason << '\n';
  }
  return kExitFail;
}

int cmd_search_min(const Options& o) {
  checked_length(o, kSearchMaxNodes);
  if (o.timeout <= 0) throw UsageError("--timeout must be positive");
  const SequenceTextFormat format = text_format(o);
  SearchBudget budget;
  budget.time_limit = std::chrono::duration<double>(o.timeout);
  budget.node_limit = o.nodes;
  const MinDiscrepancyResult r = min_discrepancy(AlphabetSize(o.base), o.order, budget,
                                                 std::max(1u, o.threads));
  if (!r.exact) {
    std::cout << "indeterminate\n";
    return kExitIndeterminate;
  }
  std::cout << "min=" << r.value << '\n';
  if (o.verbose && r.witness) {
    std::cout << "witness=" << render_sequence(r.witness->symbols(), format) << '\n';
  }
  return kExitOk;
}

int cmd_render(const Options& o) {
  checked_length(o, kRenderMaxLength);
  const CyclicSequence w = generate(AlphabetSize(o.base), o.order);
  const GrayImage image = render_image(w, o.order);
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + o.output + "'");
  write_pgm(out, image);
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + o.output + "'");
  return kExitOk;
}

void add_alphabet(CLI::App* cmd, Options& o, bool with_order) {
  cmd->add_option("-b,--base", o.base, "Alphabet size k")->required();
  if (with_order) cmd->add_option("-n,--order", o.order, "Order n")->required();
}

} // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  Options o;
  CLI::App app{"Minimum-discrepancy de Bruijn sequences"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Stream the sequence of order n over base k");
  add_alphabet(gen, o, true);
  gen->add_option("--format", o.format, "digits or csv")->capture_default_str();

  auto* disc = app.add_subcommand("discrepancy", "Print the discrepancy of a circular sequence");
  add_alphabet(disc, o, false);
  disc->add_option("input", o.input, "Input file, '-' for stdin")->capture_default_str();
  disc->add_option("--format", o.format, "digits or csv")->capture_default_str();
  disc->add_flag("-v,--verbose", o.verbose, "Also print a maximizing substring");

  auto* val = app.add_subcommand("validate", "Check the de Bruijn property");
  add_alphabet(val, o, true);
  val->add_option("input", o.input, "Input file, '-' for stdin")->capture_default_str();
  val->add_option("--format", o.format, "digits or csv")->capture_default_str();

  auto* search = app.add_subcommand("search-min", "Exhaustive minimum discrepancy search");
  add_alphabet(search, o, true);
  search->add_option("--timeout", o.timeout, "Time limit in seconds")->capture_default_str();
  search->add_option("--nodes", o.nodes, "Expansion limit, 0 = unlimited")->capture_default_str();
  search->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  search->add_option("--format", o.format, "Witness format: digits or csv")->capture_default_str();
  search->add_flag("-v,--verbose", o.verbose, "Also print a witness sequence");

  auto* render = app.add_subcommand("render", "Write the sequence as a PGM image");
  add_alphabet(render, o, true);
  render->add_option("-o,--output", o.output, "Output .pgm path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitFail;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*disc) return cmd_discrepancy(o);
    if (*val) return cmd_validate(o);
    if (*search) return cmd_search_min(o);
    if (*render) return cmd_render(o);
  } catch (const ParseError& e) {
    std::cerr << "lowdisc: parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "lowdisc: " << e.what() << '\n';
  }
  return kExitFail;
}
