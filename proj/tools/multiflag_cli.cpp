// multiflag: classify arm configurations, enumerate RVT/EKR classes and run
// the numerical verification suites.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multiflag/classify.hpp"
#include "multiflag/config_io.hpp"
#include "multiflag/error.hpp"
#include "multiflag/prolongation.hpp"
#include "multiflag/rvt.hpp"
#include "multiflag/sampler.hpp"
#include "multiflag/suites.hpp"

using namespace multiflag;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kBadInput = 2, kDepth = 3 };

struct Options {
  std::string format = "text";
  std::string in, out, word, to, direction, suite;
  int m = 2;
  int k = 3;
  int depth = 1;
  int count = 1;
  int samples = 100;
  double tol = 0.0;
  double margin = kDefaultMargin;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<std::string> argv;
};

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::DepthExceeded:
      return kDepth;
    case ErrorCode::ParseError:
    case ErrorCode::NonUnitDirection:
    case ErrorCode::BadLinkLength:
    case ErrorCode::LengthMismatch:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DimensionTooSmall:
    case ErrorCode::NonUnitSegment:
      return kBadInput;
    default:
      return kFailure;
  }
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest(const Options& o, const std::string& input) {
  std::uint64_t h = fnv1a(input);
  for (const auto& a : o.argv) h = fnv1a(a + '\0', h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed_given) return o.seed;
  if (const char* env = std::getenv("MULTIFLAG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("MULTIFLAG_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

std::string envelope(const Options& o, const std::string& command, const std::string& input, json results,
                     int status) {
  json j{{"command", command}, {"inputs", digest(o, input)}, {"results", std::move(results)}, {"status", status}};
  return j.dump(2) + "\n";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string letter_str(const Letter& l) {
  switch (l.kind()) {
    case Letter::Kind::R:
      return "R";
    case Letter::Kind::V:
      return "V";
    default:
      break;
  }
  std::string s = "T{";
  for (int a : l.subscripts()) s += std::to_string(a);
  return s + "}";
}

std::string ekr_str(const ClassReport& r) { return r.ekr ? to_string(*r.ekr) : "-"; }

int cmd_classify(const Options& o) {
  const std::string input = read_file(o.in);
  const auto configs = parse_any(input);
  const double tol = o.tol > 0 ? o.tol : kDefaultClassifyTol;
  std::vector<ClassReport> reps;
  for (const auto& c : configs) reps.push_back(classify(c, tol));

  if (o.format == "json") {
    json results = json::array();
    for (const auto& r : reps) {
      json levels = json::array();
      for (const auto& l : r.levels) {
        json anchors = json::array();
        for (const auto& a : l.anchors) {
          anchors.push_back({{"anchor", a.index}, {"from_level", a.level}, {"chain", a.chain}, {"residual", a.residual}});
        }
        levels.push_back({{"level", l.level},
                          {"letter", letter_str(l.letter)},
                          {"vertical_residual", l.vertical_residual},
                          {"anchors", anchors}});
      }
      results.push_back({{"word", to_string(r.word)},
                         {"canonical", to_canonical_string(r.word)},
                         {"ekr", r.ekr ? json(to_string(*r.ekr)) : json(nullptr)},
                         {"tol", r.tol},
                         {"levels", levels}});
    }
    emit(o, envelope(o, "classify", input, results, kOk));
    return kOk;
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    if (reps.size() > 1) os << (i ? "\n" : "") << "# config " << i << "\n";
    os << to_string(r.word) << " / " << ekr_str(r) << "\n";
    os << "level  letter  A_{l-1}      anchors\n";
    for (const auto& l : r.levels) {
      std::string line = std::to_string(l.level);
      line.resize(7, ' ');
      std::string letter = letter_str(l.letter);
      letter.resize(8, ' ');
      line += letter + fmt(l.vertical_residual);
      for (const auto& a : l.anchors) {
        line += "  K" + std::to_string(a.index) + (a.chain ? "" : "~") + "=" + fmt(a.residual);
      }
      os << line << "\n";
    }
  }
  emit(o, os.str());
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const auto words = enumerate_words(o.k, o.depth);
  if (o.format == "json") {
    json ws = json::array();
    for (const auto& w : words) ws.push_back(to_string(w));
    emit(o, envelope(o, "enumerate", "", {{"k", o.k}, {"depth", o.depth}, {"words", ws}}, kOk));
    return kOk;
  }
  std::ostringstream os;
  for (const auto& w : words) os << to_string(w) << "\n";
  emit(o, os.str());
  return kOk;
}

int cmd_table(const Options& o) {
  const auto rows = ekr_table(o.k);
  if (o.format == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json ws = json::array();
      for (const auto& w : row.words) ws.push_back(to_string(w));
      out.push_back({{"ekr", to_string(row.ekr)}, {"rvt", ws}});
    }
    emit(o, envelope(o, "table", "", {{"k", o.k}, {"rows", out}}, kOk));
    return kOk;
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    os << to_string(row.ekr) << " |";
    for (std::size_t i = 0; i < row.words.size(); ++i) os << (i ? ", " : " ") << to_string(row.words[i]);
    os << "\n";
  }
  emit(o, os.str());
  return kOk;
}

int cmd_sample(const Options& o, bool k_given) {
  const RvtWord w = parse_word(o.word);
  if (k_given && w.size() != o.k) {
    throw Error(ErrorCode::LengthMismatch, "--k " + std::to_string(o.k) + " differs from the word length");
  }
  const auto cs = sample_in_class({w, o.m, resolve_seed(o), o.margin, o.count});
  emit(o, dump_configs(cs));
  return kOk;
}

int cmd_verify(const Options& o, bool k_given) {
  SuiteParams p;
  p.m = o.m;
  p.k = o.k;
  p.samples = o.samples;
  p.seed = resolve_seed(o);
  p.tol = o.tol;
  p.margin = o.margin;
  if (!o.word.empty()) {
    p.word = parse_word(o.word);
    if (k_given && p.word->size() != o.k) {
      throw Error(ErrorCode::LengthMismatch, "--k " + std::to_string(o.k) + " differs from the word length");
    }
    p.k = p.word->size();
  }
  const SuiteReport r = run_suite(o.suite, p);
  const int status = r.passed() ? kOk : kFailure;
  if (o.format == "json") {
    json res{{"suite", r.suite}, {"m", r.m},       {"k", r.k},           {"checks", r.checks},
             {"failures", r.failures}, {"worst", r.worst}, {"pass", r.passed()}, {"notes", r.notes}};
    if (!r.ranks.empty()) res["ranks"] = r.ranks;
    emit(o, envelope(o, "verify", "", res, status));
    return status;
  }
  std::ostringstream os;
  os << "verify " << r.suite << " m=" << r.m << " k=" << r.k << ": " << (r.passed() ? "pass" : "FAIL") << " ("
     << r.checks << " checks, " << r.failures << " failures)\n";
  if (!r.ranks.empty()) {
    os << "ranks [";
    for (std::size_t i = 0; i < r.ranks.size(); ++i) os << (i ? "," : "") << r.ranks[i];
    os << "]\n";
  }
  if (r.worst > 0) os << "worst " << fmt(r.worst) << "\n";
  for (const auto& n : r.notes) os << "  " << n << "\n";
  emit(o, os.str());
  return status;
}

int cmd_convert(const Options& o) {
  const std::string input = read_file(o.in);
  const auto cs = parse_any(input);
  if (o.to == "ambient") {
    emit(o, dump_configs(cs));
  } else {
    std::vector<HsPoint> hs;
    for (const auto& c : cs) hs.push_back(hs_inverse(c));
    emit(o, dump_hs_points(hs));
  }
  return kOk;
}

int cmd_prolong(const Options& o) {
  const auto cs = parse_any(read_file(o.in));
  std::vector<double> vals;
  std::stringstream ss(o.direction);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad direction component \"" + tok + "\"");
    }
  }
  const FiberDirection d = make_direction(Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size())));
  std::vector<ArmConfig> out;
  for (const auto& c : cs) out.push_back(prolong_config(c, d));
  emit(o, dump_configs(out));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) o.argv.emplace_back(argv[i]);

  CLI::App app{"Special multi-flags of articulated arms: RVT/EKR classification and checks"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write output to a file instead of stdout");

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { o.seed = s, o.seed_given = true; },
        "Random seed (default: $MULTIFLAG_SEED, else 0)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify configurations from a JSON file");
  classify_cmd->add_option("--in", o.in, "Configuration file")->required();
  classify_cmd->add_option("--tol", o.tol, "Vanishing tolerance");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List admissible RVT words");
  enumerate_cmd->add_option("k", o.k, "Word length")->required();
  enumerate_cmd->add_option("depth", o.depth, "Maximal depth (1 or 2)")->required();

  auto* table_cmd = app.add_subcommand("table", "EKR to RVT decomposition table");
  table_cmd->add_option("k", o.k, "Word length")->required();

  auto* sample_cmd = app.add_subcommand("sample", "Sample configurations in an RVT class");
  sample_cmd->add_option("--word", o.word, "RVT word")->required();
  sample_cmd->add_option("--m", o.m, "Step m");
  auto* sample_k = sample_cmd->add_option("--k", o.k, "Length (must match the word)");
  sample_cmd->add_option("--count", o.count, "Number of samples");
  sample_cmd->add_option("--margin", o.margin, "Margin on non-vanishing conditions");
  add_seed(sample_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", o.suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--m", o.m, "Step m");
  auto* verify_k = verify_cmd->add_option("--k", o.k, "Length k");
  verify_cmd->add_option("--samples,--count", o.samples, "Samples per case");
  verify_cmd->add_option("--tol", o.tol, "Suite tolerance (0: suite default)");
  verify_cmd->add_option("--margin", o.margin, "Sampler margin");
  verify_cmd->add_option("--word", o.word, "Restrict strata/roundtrip to one word");
  add_seed(verify_cmd);

  auto* convert_cmd = app.add_subcommand("convert", "Convert between ambient and hyperspherical files");
  convert_cmd->add_option("--in", o.in, "Input file")->required();
  convert_cmd->add_option("--to", o.to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"hyperspherical", "ambient"}));

  auto* prolong_cmd = app.add_subcommand("prolong", "Prolong configurations along a fiber direction");
  prolong_cmd->add_option("--in", o.in, "Input file")->required();
  prolong_cmd->add_option("--direction", o.direction, "Comma-separated unit coefficients")->required();

  for (auto* sub : {classify_cmd, enumerate_cmd, table_cmd, sample_cmd, verify_cmd, convert_cmd, prolong_cmd}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write output to a file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
    if (*table_cmd) return cmd_table(o);
    if (*sample_cmd) return cmd_sample(o, sample_k->count() > 0);
    if (*verify_cmd) return cmd_verify(o, verify_k->count() > 0);
    if (*convert_cmd) return cmd_convert(o);
    if (*prolong_cmd) return cmd_prolong(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return kFailure;
}
