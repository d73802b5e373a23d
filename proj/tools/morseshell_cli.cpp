// morseshell: subdivide, shell and verify simplicial complexes.
//
//   morseshell info K
//   morseshell sd K --depth 2
//   morseshell morse greedy K
//   morseshell shell-sd K --vertex a
//   morseshell shell-sd2 K --morse f.json
//   morseshell verify K --tiling t.jsonl
//
// Exit status: 0 ok, 1 bad usage or input, 2 verification failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#ifdef MORSESHELL_HAVE_SPDLOG
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>
#endif

#include "morseshell/io.hpp"

using namespace msh;

namespace {

constexpr int kUsage = 1;
constexpr int kFailed = 2;

#ifdef MORSESHELL_HAVE_SPDLOG
void setup_logging() {
  auto logger = spdlog::stderr_color_st("morseshell");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("MORSESHELL_LOG");
  spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}
#define LOG_INFO(...) spdlog::info(__VA_ARGS__)
#else
void setup_logging() {}
#define LOG_INFO(...) ((void)0)
#endif

struct Options {
  std::string complex_path;
  std::string output = "-";
  int depth = 2;
  std::string vertex;
  std::string morse_mode;
  std::string morse_file;
  std::string pairs_file;
  bool trivial = false;
  bool greedy = false;
  std::string tiling_path;
  bool strong = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ParseError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

long relative_euler(const RelativeComplex& s) {
  long chi = 0;
  for (const auto& f : s.faces())
    if (!f.empty()) chi += f.size() % 2 == 1 ? 1 : -1;
  return chi;
}

json census_json(const std::vector<std::size_t>& v) {
  Census c;
  c.critical = v;
  while (!c.critical.empty() && c.critical.back() == 0) c.critical.pop_back();
  return to_json(c)["critical"];
}

// The Morse function named by the options, canonicalized; nullopt if none was
// requested.
std::optional<DiscreteMorseFunction> morse_from_options(const SimplicialComplex& k,
                                                        const Options& o) {
  int given = !o.morse_file.empty() + !o.pairs_file.empty() + o.trivial + o.greedy;
  if (given > 1) throw CLI::ValidationError("give at most one of --morse, --pairs, --trivial, --greedy");
  if (o.trivial) return trivial_dmf(k);
  if (o.greedy) return greedy_collapse_dmf(k);
  if (!o.morse_file.empty()) return canonicalize(k, morse_from_json(k, read_json_file(o.morse_file)));
  if (!o.pairs_file.empty()) {
    auto j = read_json_file(o.pairs_file);
    if (!j.contains("pairs")) throw ParseError(o.pairs_file + ": expected {\"pairs\": [...]}");
    return morse_from_json(k, j);
  }
  return std::nullopt;
}

int cmd_info(const Options& o) {
  auto s = read_complex_file(o.complex_path);
  json j;
  j["absolute"] = s.is_absolute();
  j["dim"] = s.ambient().dim();
  j["vertices"] = s.ambient().vertices().size();
  j["facets"] = s.ambient().facets().size();
  j["f_vector"] = s.ambient().f_vector();
  j["euler"] = relative_euler(s);
  if (s.is_absolute()) j["betti"] = mod2_betti(s.ambient());
  Output out(o.output);
  out.stream() << j.dump(2) << "\n";
  return 0;
}

int cmd_sd(const Options& o) {
  auto s = read_complex_file(o.complex_path);
  auto sd = barycentric(s, o.depth);
  LOG_INFO("sd^{}: {} facets", o.depth, sd.ambient().facets().size());
  Output out(o.output);
  out.stream() << to_json(sd).dump() << "\n";
  return 0;
}

int cmd_morse(const Options& o) {
  auto s = read_complex_file(o.complex_path);
  if (!s.is_absolute()) throw ParseError("Morse functions are defined on absolute complexes");
  const auto& k = s.ambient();
  DiscreteMorseFunction f;
  if (o.morse_mode == "trivial") {
    f = trivial_dmf(k);
  } else if (o.morse_mode == "greedy") {
    f = greedy_collapse_dmf(k);
  } else {
    if (o.morse_file.empty()) throw CLI::ValidationError("morse load needs --file");
    auto raw = morse_from_json(k, read_json_file(o.morse_file));
    auto report = validate(k, raw);
    if (!report.is_dmf) {
      json j = {{"is_dmf", false}, {"witnesses", report.witnesses}};
      std::cerr << j.dump(2) << "\n";
      return kFailed;
    }
    f = canonicalize(k, raw);
  }
  auto j = to_json(f);
  j["critical"] = census_json(critical_census(k, f));
  Output out(o.output);
  out.stream() << j.dump() << "\n";
  return 0;
}

int emit_checked(const Options& o, const RelativeComplex& sd, const Tiling& t, json extra) {
  auto cert = verify_tiling(sd, t);
  if (!cert.passed()) {
    std::cerr << to_json(cert).dump(2) << "\n";
    return kFailed;
  }
  Output out(o.output);
  write_tiling(out.stream(), t, cert.euler, extra);
  return 0;
}

int cmd_shell_sd(const Options& o) {
  auto s = read_complex_file(o.complex_path);
  auto v = Label::atom(o.vertex);
  bool found = false;
  for (auto x : s.ambient().vertices()) found = found || x == v;
  if (!found) throw CLI::ValidationError("vertex " + o.vertex + " is not in the complex");
  auto r = shell_sd_relative(s, v);
  LOG_INFO("{} tiles, star prefix {}", r.tiles.size(), r.prefix);
  return emit_checked(o, barycentric(s), r.tiles, {{"prefix", r.prefix}});
}

int cmd_shell_sd2(const Options& o) {
  auto s = read_complex_file(o.complex_path);
  if (!s.is_absolute()) throw ParseError("shell-sd2 needs an absolute complex");
  const auto& k = s.ambient();
  auto f = morse_from_options(k, o);
  if (!f) throw CLI::ValidationError("give one of --morse, --pairs, --trivial, --greedy");
  auto r = shell_sd2_from_dmf(k, *f);
  LOG_INFO("{} tiles over {} filtration steps", r.tiles.size(), r.step_ends.size());
  return emit_checked(o, barycentric(s, 2), r.tiles,
                      {{"critical_faces", census_json(critical_census(k, *f))}});
}

int cmd_verify(const Options& o) {
  auto s = read_complex_file(o.complex_path);
  auto sd = barycentric(s, o.depth);
  std::ifstream in(o.tiling_path);
  if (!in) throw ParseError("cannot open " + o.tiling_path);
  auto tf = read_tiling(in);
  LOG_INFO("read {} tiles", tf.tiles.size());
  VerifyOptions vo;
  vo.strong = o.strong;
  auto cert = verify_tiling(sd, tf.tiles, vo);
  if (tf.declared_census) check_declared_census(cert, *tf.declared_census);
  if (auto f = morse_from_options(s.ambient(), o)) {
    if (!s.is_absolute() || o.depth != 2)
      throw CLI::ValidationError("a Morse audit needs an absolute complex and --depth 2");
    cert = audit(s.ambient(), *f, cert);
  }
  auto j = to_json(cert);
  bool checksum_ok = !tf.declared_checksum || *tf.declared_checksum == tf.checksum;
  if (tf.declared_checksum) j["checksum_ok"] = checksum_ok;
  bool ok = cert.passed() && checksum_ok;
  j["passed"] = ok;
  Output out(o.output);
  out.stream() << j.dump(2) << "\n";
  return ok ? 0 : kFailed;
}

void add_morse_flags(CLI::App* c, Options& o) {
  c->add_option("--morse", o.morse_file, "Morse function file (values or pairs)")
      ->check(CLI::ExistingFile);
  c->add_option("--pairs", o.pairs_file, "gradient pairs file")->check(CLI::ExistingFile);
  c->add_flag("--trivial", o.trivial, "every face critical");
  c->add_flag("--greedy", o.greedy, "greedy collapse function");
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Morse shellings of second barycentric subdivisions"};
  app.require_subcommand(1);
  Options o;

  auto complex_arg = [&](CLI::App* c) {
    c->add_option("complex", o.complex_path, "facet list or JSON complex")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("-o,--output", o.output, "output path, - for stdout");
  };

  auto* info = app.add_subcommand("info", "f-vector, Euler characteristic, mod-2 Betti numbers");
  complex_arg(info);

  auto* sd = app.add_subcommand("sd", "barycentric subdivision");
  complex_arg(sd);
  sd->add_option("--depth", o.depth, "number of subdivisions")->check(CLI::Range(0, 2));

  auto* morse = app.add_subcommand("morse", "build or load a discrete Morse function");
  morse->add_option("mode", o.morse_mode, "trivial | greedy | load")
      ->required()
      ->check(CLI::IsMember({"trivial", "greedy", "load"}));
  complex_arg(morse);
  morse->add_option("--file", o.morse_file, "Morse file for load")->check(CLI::ExistingFile);

  auto* shell_sd = app.add_subcommand("shell-sd", "Morse shelling of sd(S) starting at a star");
  complex_arg(shell_sd);
  shell_sd->add_option("--vertex", o.vertex, "distinguished vertex")->required();

  auto* shell_sd2 = app.add_subcommand("shell-sd2", "Morse shelling of sd²(K) from f");
  complex_arg(shell_sd2);
  add_morse_flags(shell_sd2, o);

  auto* verify = app.add_subcommand("verify", "check a tiling");
  complex_arg(verify);
  verify->add_option("--tiling", o.tiling_path, "JSON-lines tiling")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--depth", o.depth, "subdivision depth the tiling lives on")
      ->check(CLI::Range(0, 2));
  verify->add_flag("--strong", o.strong, "also require subcomplex unions by dimension");
  add_morse_flags(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*sd) return cmd_sd(o);
    if (*morse) return cmd_morse(o);
    if (*shell_sd) return cmd_shell_sd(o);
    if (*shell_sd2) return cmd_shell_sd2(o);
    if (*verify) return cmd_verify(o);
  } catch (const CLI::Error& e) {
    std::cerr << "morseshell: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "morseshell: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
