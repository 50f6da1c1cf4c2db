#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>

#include "oramsey/analysis.hpp"
#include "oramsey/arrow.hpp"
#include "oramsey/construction.hpp"
#include "oramsey/io.hpp"

namespace oramsey::cli {
namespace {

namespace fs = std::filesystem;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kResourceExceeded:
    case ErrorCode::kNotFoundWithinBounds:
      return kExitResource;
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kGlueConflict:
    case ErrorCode::kClosureIntersectsN:
    case ErrorCode::kNoneFound:
      return kExitInternal;
    default:
      return kExitFails;
  }
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') {
    return fallback;
  }
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    return fallback;
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string shape;
  std::size_t k = 1;
  std::string out;
  std::string name;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const OrderedPoset p = a.shape == "chain" ? chain(a.k) : antichain(a.k);
  const std::string text = serialize(p, a.name);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  return kExitOk;
}

// --- validate --------------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out) {
  const Document doc = load_document(path);
  switch (doc.kind) {
    case DocumentKind::kPoset: {
      const OrderedPoset& p = *doc.poset;
      out << "OK poset n=" << p.size() << " |R|=" << p.R().size() << "\n";
      break;
    }
    case DocumentKind::kRN:
    case DocumentKind::kAPartite:
    case DocumentKind::kPicture: {
      const RNGraph g = as_rn_graph(doc);
      const auto ell = max_ell_rn(g);
      out << "OK " << to_string(doc.kind) << " n=" << g.size() << " |R|=" << g.R().size()
          << " |N|=" << g.N().size() << " good=" << yes_no(!ell.has_value())
          << " ell_rn_max=" << (ell ? std::to_string(*ell) : std::string("inf"));
      if (doc.kind == DocumentKind::kAPartite) {
        out << " parts=" << doc.apartite->part_count();
      } else if (doc.kind == DocumentKind::kPicture) {
        out << " parts=" << doc.picture->parts.size();
      }
      out << "\n";
      if (auto q = find_bad_quasicycle(g)) {
        out << "bad quasicycle:";
        for (VertexId v : q->vertices) {
          out << " " << v;
        }
        out << "\n";
      }
      break;
    }
    case DocumentKind::kHomomorphism:
      out << "OK hom n=" << doc.hom->map.size() << " target_n=" << doc.hom_target_size << "\n";
      break;
    case DocumentKind::kColoring:
      out << "OK coloring copies=" << doc.coloring->size() << " r=" << doc.coloring->num_colors() << "\n";
      break;
  }
  return kExitOk;
}

// --- arrow -----------------------------------------------------------------

struct ArrowArgs {
  std::string target;
  std::string q;
  std::string p;
  int r = 2;
  std::uint64_t max_nodes = 0;
  std::uint64_t time_limit_ms = 0;
  std::uint64_t seed = 0x5eed;
  std::string counterexample = "counterexample.txt";
};

int cmd_arrow(const ArrowArgs& a, std::ostream& out) {
  const RNGraph target = as_rn_graph(load_document(a.target));
  const RNGraph q = as_rn_graph(load_document(a.q));
  const RNGraph p = as_rn_graph(load_document(a.p));
  SearchLimits limits;
  limits.max_nodes = a.max_nodes;
  limits.seed = a.seed;
  if (a.time_limit_ms > 0) {
    limits.time_limit = std::chrono::milliseconds(a.time_limit_ms);
  }
  const ArrowVerdict v = check_arrow(target, q, p, a.r, limits);
  if (v.holds) {
    out << "HOLDS\n";
    return kExitOk;
  }
  write_file(a.counterexample, serialize(*v.counterexample, "counterexample"));
  out << "FAILS\n";
  out << "counterexample: " << a.counterexample << " (" << v.counterexample->size() << " copies)\n";
  return kExitFails;
}

// --- tower -----------------------------------------------------------------

struct TowerArgs {
  std::string a;
  std::string b;
  std::size_t ell_max = 3;
  std::string out_dir;
  std::string oracle = "search";
  std::string witness;
  std::size_t size_bound = 12;
  std::uint64_t max_candidates = 5'000'000;
  std::uint64_t max_nodes = 0;
  std::size_t max_vertices = 0;
  std::string rule = "n-from-fbar-n";
  bool always_construct = false;
};

std::string describe_step(const StepReport& s) {
  std::string a_copy = "[";
  for (std::size_t i = 0; i < s.a_copy.size(); ++i) {
    a_copy += (i > 0 ? ", " : "") + std::to_string(s.a_copy[i]);
  }
  a_copy += "]";
  return "a_copy=" + a_copy + " e=" + std::to_string(s.e_vertices) + " fbar=" +
         std::to_string(s.fbar_vertices) + " lifts=" + std::to_string(s.lifts) + " shared=" +
         std::to_string(s.shared) + " fresh=" + std::to_string(s.fresh) + " vertices=" +
         std::to_string(s.vertices) + " R=" + std::to_string(s.r_edges) + " N=" +
         std::to_string(s.n_edges) + " certification=" + std::string(to_string(s.certification)) +
         " ell_rn=" + yes_no(s.ell_rn);
}

void put_file(Manifest& m, const fs::path& dir, const std::string& key, const std::string& file,
              const std::string& text) {
  write_file(dir / file, text);
  m.set(key, file);
  m.set(key + ".sha256", sha256_hex(text));
}

int cmd_tower(const TowerArgs& args, std::ostream& out) {
  const OrderedPoset a_poset = as_poset(load_document(args.a));
  const OrderedPoset b_poset = as_poset(load_document(args.b));
  const RNGraph a = poset_to_complete_rn(a_poset);
  const RNGraph b = poset_to_complete_rn(b_poset);

  TowerOptions options;
  if (args.oracle == "search") {
    options.c2_oracle.mode = OracleMode::kSearch;
  } else if (args.oracle == "file") {
    options.c2_oracle.mode = OracleMode::kFile;
  } else {
    options.c2_oracle.mode = OracleMode::kAssume;
  }
  if (options.c2_oracle.mode != OracleMode::kSearch) {
    if (args.witness.empty()) {
      throw Error(ErrorCode::kInvalidInput, "--witness is required with --oracle " + args.oracle);
    }
    options.c2_oracle.supplied = as_rn_graph(load_document(args.witness));
  }
  const std::uint64_t max_nodes = args.max_nodes > 0 ? args.max_nodes : env_or("ORAMSEY_MAX_NODES", 20'000'000);
  const std::size_t max_vertices =
      args.max_vertices > 0 ? args.max_vertices : env_or("ORAMSEY_MAX_VERTICES", 100'000);
  options.c2_oracle.size_bound = args.size_bound;
  options.c2_oracle.max_candidates = args.max_candidates;
  options.c2_oracle.limits.max_nodes = max_nodes;
  options.construction.oracle.size_bound = args.size_bound;
  options.construction.oracle.max_candidates = args.max_candidates;
  options.construction.oracle.limits.max_nodes = max_nodes;
  options.construction.max_vertices = max_vertices;
  options.construction.rule = args.rule == "verbatim" ? ProductRule::kVerbatim : ProductRule::kNFromFbarN;
  options.reuse_stable_stages = !args.always_construct;

  const Tower tower = build_tower(a, b, args.ell_max, options);

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  Manifest m;
  m.set("format", "oramsey-tower 1");
  put_file(m, dir, "A", "A.txt", serialize(a_poset, "A"));
  put_file(m, dir, "B", "B.txt", serialize(b_poset, "B"));
  m.set("ell_max", std::to_string(args.ell_max));
  m.set("reached", std::to_string(tower.reached()));
  m.set("lambda", std::to_string(tower.lambda()));
  m.set("oracle.mode", std::string(to_string(options.c2_oracle.mode)));
  m.set("oracle.size_bound", std::to_string(args.size_bound));
  m.set("oracle.max_candidates", std::to_string(args.max_candidates));
  m.set("rule", std::string(to_string(options.construction.rule)));
  m.set("reuse_stable_stages", yes_no(options.reuse_stable_stages));
  m.set("max_vertices", std::to_string(max_vertices));
  m.set("certification", std::string(to_string(tower.certification())));
  m.set("conditionally_correct", yes_no(tower.certification() != Certification::kCertified));

  for (const TowerStage& s : tower.stages) {
    const std::string key = "stage." + std::to_string(s.ell);
    const std::string c_name = "C_" + std::to_string(s.ell);
    put_file(m, dir, key, c_name + ".txt", serialize(s.c, c_name));
    m.set(key + ".vertices", std::to_string(s.c.size()));
    m.set(key + ".R", std::to_string(s.c.R().size()));
    m.set(key + ".N", std::to_string(s.c.N().size()));
    m.set(key + ".certification", std::string(to_string(s.certification)));
    m.set(key + ".reused", yes_no(s.reused));
    if (s.ell > 2) {
      const std::string h_name = "h_" + std::to_string(s.ell - 1);
      const std::size_t target_size = tower.stages[s.ell - 3].c.size();
      put_file(m, dir, key + ".h", h_name + ".txt", serialize(s.h_down, target_size, h_name));
    }
    m.set(key + ".steps", std::to_string(s.steps.size()));
    for (const StepReport& step : s.steps) {
      m.set(key + ".step." + std::to_string(step.step), describe_step(step));
    }
    out << c_name << ": n=" << s.c.size() << " |R|=" << s.c.R().size() << " |N|=" << s.c.N().size()
        << " " << to_string(s.certification) << (s.reused ? " (reused)" : "") << "\n";
  }
  if (tower.truncation) {
    const TowerTruncation& t = *tower.truncation;
    m.set("truncation.ell", std::to_string(t.ell));
    m.set("truncation.code", std::string(to_string(t.code)));
    m.set("truncation.message", t.message);
    for (const StepReport& step : t.steps) {
      m.set("truncation.step." + std::to_string(step.step), describe_step(step));
    }
    out << "truncated at C_" << t.ell << ": " << to_string(t.code) << ": " << t.message << "\n";
  }
  write_file(dir / "manifest.txt", m.to_string());
  out << "manifest: " << (dir / "manifest.txt").string() << "\n";
  return tower.truncation ? exit_code_for(tower.truncation->code) : kExitOk;
}

// --- finish ----------------------------------------------------------------

std::string load_checked(const fs::path& dir, const Manifest& m, const std::string& key) {
  const auto file = m.get(key);
  if (!file) {
    throw Error(ErrorCode::kInvalidInput, "manifest has no entry " + key);
  }
  std::string text = read_file(dir / *file);
  const auto digest = m.get(key + ".sha256");
  if (!digest || *digest != sha256_hex(text)) {
    throw Error(ErrorCode::kInvalidInput, "digest mismatch for " + *file);
  }
  return text;
}

int cmd_finish(const std::string& tower_dir, const std::string& out_path, std::ostream& out) {
  const fs::path dir(tower_dir);
  const Manifest m = Manifest::parse(read_file(dir / "manifest.txt"));
  Tower tower;
  tower.a = poset_to_complete_rn(as_poset(parse_document(load_checked(dir, m, "A"))));
  tower.b = poset_to_complete_rn(as_poset(parse_document(load_checked(dir, m, "B"))));
  const auto reached = m.get("reached");
  const std::size_t top = reached ? std::stoul(*reached) : 0;
  for (std::size_t ell = 2; ell <= top; ++ell) {
    const std::string key = "stage." + std::to_string(ell);
    TowerStage stage;
    stage.ell = ell;
    stage.c = as_rn_graph(parse_document(load_checked(dir, m, key)));
    if (ell > 2) {
      stage.h_down = *parse_document(load_checked(dir, m, key + ".h")).hom;
      if (!check_homomorphism(stage.h_down, stage.c, tower.stages.back().c)) {
        throw Error(ErrorCode::kInvalidInput, "h_" + std::to_string(ell - 1) + " is not a homomorphism");
      }
    }
    tower.stages.push_back(std::move(stage));
  }
  const FinishResult result = finish(tower);
  const fs::path target = out_path.empty() ? dir / "C.txt" : fs::path(out_path);
  const std::string text = serialize(result.poset, "C");
  write_file(target, text);

  Manifest report;
  report.set("poset", target.filename().string());
  report.set("poset.sha256", sha256_hex(text));
  report.set("lambda", std::to_string(result.lambda));
  report.set("vertices", std::to_string(result.poset.size()));
  report.set("longest_r_path", std::to_string(result.longest_path));
  report.set("closure_added", std::to_string(result.closure_added));
  report.set("b_copies_before", std::to_string(result.b_copies));
  report.set("b_copies_intact", std::to_string(result.b_copies_intact));
  report.set("b_copies_after", std::to_string(result.b_copies_after));
  write_file(dir / "finish.txt", report.to_string());

  out << "OK poset n=" << result.poset.size() << " |R|=" << result.poset.R().size()
      << " closure_added=" << result.closure_added << "\n";
  out << "copies of B intact: "
      << (result.b_copies_intact == result.b_copies ? std::string("all") : std::string("some"))
      << " (" << result.b_copies_intact << " of " << result.b_copies << ", " << result.b_copies_after
      << " after closure)\n";
  out << "poset: " << target.string() << "\n";
  return kExitOk;
}

// --- export-dot ------------------------------------------------------------

int cmd_export_dot(const std::string& path, const std::string& out_path, std::ostream& out) {
  const std::string dot = to_dot(load_document(path));
  if (out_path.empty()) {
    out << dot;
  } else {
    write_file(out_path, dot);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey witnesses for ordered posets via RN graphs", "oramsey"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Print chain(k) or antichain(k) as a poset file");
  generate->add_option("shape", gen.shape)->required()->check(CLI::IsMember({"chain", "antichain"}));
  generate->add_option("k", gen.k)->required()->check(CLI::PositiveNumber);
  generate->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");
  generate->add_option("--name", gen.name);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a structure file and report its invariants");
  validate->add_option("path", validate_path)->required();

  ArrowArgs arr;
  auto* arrow = app.add_subcommand("arrow", "Decide target -> (Q)^P_r");
  arrow->add_option("target", arr.target)->required();
  arrow->add_option("Q", arr.q)->required();
  arrow->add_option("P", arr.p)->required();
  arrow->add_option("-r,--colors", arr.r)->check(CLI::Range(1, 31));
  arrow->add_option("--max-nodes", arr.max_nodes);
  arrow->add_option("--time-limit-ms", arr.time_limit_ms);
  arrow->add_option("--seed", arr.seed);
  arrow->add_option("--counterexample", arr.counterexample, "Where a FAILS colouring is written");

  TowerArgs tw;
  auto* tower = app.add_subcommand("tower", "Build C_2 .. C_ell_max into a directory");
  tower->add_option("--A", tw.a)->required();
  tower->add_option("--B", tw.b)->required();
  tower->add_option("--ell-max", tw.ell_max)->check(CLI::Range(2, 64));
  tower->add_option("--out", tw.out_dir)->required();
  tower->add_option("--oracle", tw.oracle)->check(CLI::IsMember({"search", "file", "assume"}));
  tower->add_option("--witness", tw.witness, "C_2 candidate for --oracle file|assume");
  tower->add_option("--size-bound", tw.size_bound);
  tower->add_option("--max-candidates", tw.max_candidates);
  tower->add_option("--max-nodes", tw.max_nodes, "Default: $ORAMSEY_MAX_NODES or 20000000");
  tower->add_option("--max-vertices", tw.max_vertices, "Default: $ORAMSEY_MAX_VERTICES or 100000");
  tower->add_option("--rule", tw.rule)->check(CLI::IsMember({"n-from-fbar-n", "verbatim"}));
  tower->add_flag("--always-construct", tw.always_construct,
                  "Run the construction even when the previous stage is already good");

  std::string finish_dir;
  std::string finish_out;
  auto* fin = app.add_subcommand("finish", "Close the top tower stage into a poset");
  fin->add_option("tower_dir", finish_dir)->required();
  fin->add_option("-o,--out", finish_out, "Output file (default: <tower_dir>/C.txt)");

  std::string dot_path;
  std::string dot_out;
  auto* dot = app.add_subcommand("export-dot", "Write a structure as Graphviz DOT");
  dot->add_option("path", dot_path)->required();
  dot->add_option("-o,--out", dot_out);

  std::vector<std::string> storage;
  storage.push_back("oramsey");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) {
    argv.push_back(s.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*generate) {
      return cmd_generate(gen, out);
    }
    if (*validate) {
      return cmd_validate(validate_path, out);
    }
    if (*arrow) {
      if (arr.max_nodes == 0) {
        arr.max_nodes = env_or("ORAMSEY_MAX_NODES", 20'000'000);
      }
      return cmd_arrow(arr, out);
    }
    if (*tower) {
      return cmd_tower(tw, out);
    }
    if (*fin) {
      return cmd_finish(finish_dir, finish_out, out);
    }
    if (*dot) {
      return cmd_export_dot(dot_path, dot_out, out);
    }
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (validate->parsed()) {
      out << "INVALID " << e.what() << "\n";
    } else if (code == kExitResource) {
      out << "UNKNOWN " << e.what() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFails;
  }
  return kExitFails;
}

}  // namespace oramsey::cli
