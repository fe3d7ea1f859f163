#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "elhgeo/canonical.hpp"
#include "elhgeo/embedding.hpp"
#include "elhgeo/error.hpp"
#include "elhgeo/faithfulness.hpp"
#include "elhgeo/modelcheck.hpp"
#include "elhgeo/parser.hpp"
#include "elhgeo/reasoner.hpp"

namespace elhgeo::cli {
namespace {

/// Bad input files or values; exits with kUsage.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw InputError("stdin can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), {}};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), {}};
  }

  nlohmann::json read_json(const std::string& path) {
    try {
      return nlohmann::json::parse(read(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  void write(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }

  void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    write(path, j.dump(2) + "\n");
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

Ontology load_normalized(Io& io, const std::string& path) {
  const Ontology o = parse_ontology(io.read(path));
  return is_normalized(o) ? o : normalize(o);
}

struct Options {
  bool deterministic = false;
  std::string ontology;
  std::string interpretation;
  std::string embedding;
  std::string axiom;
  std::string out;
  std::string report;
  bool convex = false;
  bool linear_scan = false;
  bool include_top = false;
  bool nonconvex = false;
  std::uint64_t seed = 0;
  std::size_t limit = 0;
  unsigned jobs = 1;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"ELH ontologies, their canonical models and geometric embeddings"};
  app.name("elhgeo");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--deterministic", opt.deterministic,
               "Omit elapsed-time fields so outputs are byte-reproducible");

  auto* normalize_cmd = app.add_subcommand(
      "normalize", "Rewrite an ontology into normal form (.elh)");
  normalize_cmd->add_option("--ontology", opt.ontology, "Input .elh ('-' for stdin)")
      ->required();
  normalize_cmd->add_option("--out", opt.out, "Output .elh (default stdout)");

  auto* entail_cmd =
      app.add_subcommand("entail", "Decide O |= axiom; exit 0 if entailed, 1 if not");
  entail_cmd->add_option("--ontology", opt.ontology, "Input .elh ('-' for stdin)")
      ->required();
  entail_cmd->add_option("--axiom", opt.axiom, "Normal-form axiom, e.g. \"SubClassOf(A B)\"")
      ->required();

  auto* canonical_cmd = app.add_subcommand(
      "canonical", "Build the canonical model and write it as interpretation JSON");
  canonical_cmd->add_option("--ontology", opt.ontology, "Input .elh ('-' for stdin)")
      ->required();
  canonical_cmd->add_option("--out", opt.out, "Output JSON (default stdout)");

  auto* embed_cmd =
      app.add_subcommand("embed", "Embed an ontology's canonical model or an interpretation");
  auto* embed_onto =
      embed_cmd->add_option("--ontology", opt.ontology, "Input .elh ('-' for stdin)");
  auto* embed_interp = embed_cmd->add_option("--interpretation", opt.interpretation,
                                             "Interpretation JSON ('-' for stdin)");
  embed_onto->excludes(embed_interp);
  embed_cmd->add_flag("--convex", opt.convex, "Mark regions as convex hulls of their vertices");
  embed_cmd->add_option("--out", opt.out, "Output JSON (default stdout)");

  auto* check_cmd = app.add_subcommand(
      "modelcheck", "Check a normal-form axiom in an embedding; exit 0 if it holds, 1 if not");
  check_cmd->add_option("--embedding", opt.embedding, "Embedding JSON ('-' for stdin)")
      ->required();
  check_cmd->add_option("--axiom", opt.axiom, "Normal-form axiom")->required();
  check_cmd->add_flag("--linear-scan", opt.linear_scan,
                      "Look up role vectors by linear scan instead of hashing");

  auto* faith_cmd = app.add_subcommand(
      "faithfulness", "Verify strong IQ and TBox faithfulness; exit 0 iff no mismatches");
  faith_cmd->add_option("--ontology", opt.ontology, "Input .elh ('-' for stdin)")
      ->required();
  faith_cmd->add_option("--report", opt.report, "Report JSON (default stdout)");
  faith_cmd->add_option("--seed", opt.seed, "Seed for sampling under --limit");
  faith_cmd->add_option("--limit", opt.limit, "Check at most this many axioms (0 = all)");
  faith_cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  faith_cmd->add_flag("--include-top", opt.include_top,
                      "Also enumerate axioms with Top atoms; their mismatches are reported "
                      "separately");
  faith_cmd->add_flag("--nonconvex", opt.nonconvex,
                      "Check the non-convex embedding instead of the convex one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  Io io(in, out);
  const bool timed = !opt.deterministic;
  try {
    if (*normalize_cmd) {
      io.write(opt.out, serialize(normalize(parse_ontology(io.read(opt.ontology)))));
      return kHolds;
    }
    if (*entail_cmd) {
      const Ontology o = load_normalized(io, opt.ontology);
      const bool entailed = Reasoner(o).entails(parse_axiom(opt.axiom));
      nlohmann::ordered_json j;
      j["entailed"] = entailed;
      io.write_json("", j);
      return entailed ? kHolds : kDoesNotHold;
    }
    if (*canonical_cmd) {
      const CanonicalModel m = build_canonical(load_normalized(io, opt.ontology));
      io.write_json(opt.out, to_json(m.interpretation));
      return kHolds;
    }
    if (*embed_cmd) {
      GeometricModel g;
      if (!opt.ontology.empty()) {
        const Ontology o = load_normalized(io, opt.ontology);
        g = build_geometric(build_canonical(o).interpretation, o.signature(), opt.convex);
      } else if (!opt.interpretation.empty()) {
        g = build_geometric(interpretation_from_json(io.read_json(opt.interpretation)),
                            opt.convex);
      } else {
        throw InputError("embed needs --ontology or --interpretation");
      }
      io.write_json(opt.out, export_embedding(g));
      return kHolds;
    }
    if (*check_cmd) {
      const GeometricModel g = import_embedding(io.read_json(opt.embedding));
      const Axiom ax = parse_axiom(opt.axiom);
      CheckOptions copts;
      if (opt.linear_scan) copts.membership = MembershipMode::LinearScan;
      const CheckResult r = check(g, ax, copts);
      io.write_json("", to_json(ax, r, timed));
      return r.verdict ? kHolds : kDoesNotHold;
    }
    if (*faith_cmd) {
      const Ontology o = load_normalized(io, opt.ontology);
      FaithfulnessOptions fopts;
      fopts.include_top = opt.include_top;
      fopts.limit = opt.limit;
      fopts.seed = opt.seed;
      fopts.jobs = opt.jobs;
      const FaithfulnessReport r = opt.nonconvex ? verify_nonconvex_faithfulness(o, fopts)
                                                 : verify_strong_faithfulness(o, fopts);
      io.write_json(opt.report, to_json(r, timed, opt.include_top));
      return r.faithful() ? kHolds : kDoesNotHold;
    }
  } catch (const SyntaxError& e) {
    err << "elhgeo: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "elhgeo: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "elhgeo: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "elhgeo: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace elhgeo::cli
