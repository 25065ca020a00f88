#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "moufang/axioms.hpp"
#include "moufang/error.hpp"
#include "moufang/fixtures.hpp"
#include "moufang/formats.hpp"
#include "moufang/triality.hpp"

namespace moufang::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string read(std::string const& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

int cmd_classify(CayleyTable const& tbl, Rung required, std::ostream& out) {
  Classification const c = classify(tbl);
  out << to_string(c.rung);
  if (c.rung == Rung::moufang_loop) out << " (non-associative)";
  out << '\n';
  if (c.stopped_by) out << "  " << *c.stopped_by << '\n';
  return c.rung >= required ? kExitOk : kExitCheckFailed;
}

int cmd_extract(CayleyTable const& tbl, std::ostream& out, std::ostream& err) {
  try {
    out << emit_triple(extract_triple(tbl));
    return kExitOk;
  } catch (Error const& e) {
    if (e.code() != Errc::extraction_refused) throw;
    err << "extraction refused: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

int cmd_verify(TranslationTriple const& triple, CayleyTable const& tbl, std::ostream& out) {
  HypothesisReport const rep = verify_hypotheses(triple, tbl);
  for (auto const& r : rep.all()) out << r << '\n';
  out << (rep.overall ? "hypotheses: all pass" : "hypotheses: FAILED") << '\n';
  return rep.overall ? kExitOk : kExitCheckFailed;
}

int cmd_reconstruct(TranslationTriple const& triple, std::ostream& out, std::ostream& err) {
  CayleyTable const tbl = reconstruct_multiplication(triple);
  HypothesisReport const rep = verify_hypotheses(triple, tbl);
  if (!rep.overall) {
    for (auto const& r : rep.all()) {
      if (!r.passed) err << r << '\n';
    }
    err << "reconstructed table does not satisfy the hypotheses\n";
    return kExitCheckFailed;
  }
  Classification const c = classify(tbl);
  if (c.rung < Rung::moufang_loop) {
    err << "reconstructed table is only a " << to_string(c.rung) << '\n';
    if (c.stopped_by) err << *c.stopped_by << '\n';
    return kExitCheckFailed;
  }
  out << emit_cayley(tbl);
  err << "reconstructed " << to_string(c.rung) << " of order " << tbl.order() << '\n';
  return kExitOk;
}

int cmd_roundtrip(CayleyTable const& tbl, std::ostream& out, std::ostream& err) {
  TranslationTriple const triple = extract_triple(tbl);
  CayleyTable const rebuilt = reconstruct_multiplication(triple);
  for (Element g = 0; g < tbl.order(); ++g) {
    for (Element h = 0; h < tbl.order(); ++h) {
      if (rebuilt(g, h) != tbl(g, h)) {
        out << "round-trip MISMATCH at (" << g << ',' << h << "): expected " << tbl(g, h)
            << ", reconstructed " << rebuilt(g, h) << '\n';
        return kExitCheckFailed;
      }
    }
  }
  out << "round-trip OK\n";
  return kExitOk;
}

int cmd_suite(TranslationTriple const& triple, CayleyTable const& tbl, std::ostream& out) {
  std::vector<CheckReport> reports;
  try {
    reports = run_proposition_suite(triple, tbl);
  } catch (Error const& e) {
    if (e.code() != Errc::precondition_violated) throw;
    HypothesisReport const rep = verify_hypotheses(triple, tbl);
    for (auto const& r : rep.all()) {
      if (!r.passed) out << r << '\n';
    }
    out << "suite refused: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  std::size_t failed = 0;
  for (auto const& r : reports) {
    out << r << '\n';
    if (!r.passed) ++failed;
  }
  if (failed) {
    out << "suite: " << failed << " of " << reports.size() << " propositions FAILED\n";
    return kExitCheckFailed;
  }
  out << "suite: all " << reports.size() << " propositions pass\n";
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Moufang loop toolkit: axiom checks and loop reconstruction from translation triples",
               "moufang"};
  app.require_subcommand(1);

  std::string table_path, triple_path, require = "moufang";
  std::size_t order = 0;
  std::uint32_t seed = 0;

  auto* classify_cmd = app.add_subcommand("classify", "climb the groupoid..group ladder");
  classify_cmd->add_option("table", table_path, "Cayley file or -")->required();
  classify_cmd
      ->add_option("--require", require,
                   "rung needed for exit code 0: groupoid|quasigroup|loop|ip-loop|moufang|group")
      ->capture_default_str();

  auto* extract_cmd = app.add_subcommand("extract", "write the translation triple of a Moufang loop");
  extract_cmd->add_option("table", table_path, "Cayley file or -")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check the reconstruction hypotheses");
  verify_cmd->add_option("triple", triple_path, "triple file or -")->required();
  verify_cmd->add_option("table", table_path, "Cayley file or -")->required();

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "rebuild the multiplication table from a triple");
  reconstruct_cmd->add_option("triple", triple_path, "triple file or -")->required();

  auto* roundtrip_cmd =
      app.add_subcommand("roundtrip", "extract then reconstruct and compare with the input");
  roundtrip_cmd->add_option("table", table_path, "Cayley file or -")->required();

  auto* suite_cmd = app.add_subcommand("suite", "check every derived proposition");
  suite_cmd->add_option("triple", triple_path, "triple file or -")->required();
  suite_cmd->add_option("table", table_path, "Cayley file or -")->required();

  auto* generate_cmd = app.add_subcommand("generate", "write a fixture table");
  generate_cmd->require_subcommand(1);
  auto* gen_cyclic = generate_cmd->add_subcommand("cyclic", "cyclic group Z_N");
  gen_cyclic->add_option("N", order)->required()->check(CLI::PositiveNumber);
  auto* gen_s3 = generate_cmd->add_subcommand("s3", "symmetric group on 3 points");
  auto* gen_chein = generate_cmd->add_subcommand("chein-s3", "Chein double of S3 (order 12)");
  auto* gen_random = generate_cmd->add_subcommand("random", "random loop with unit 0");
  gen_random->add_option("N", order)->required()->check(CLI::PositiveNumber);
  gen_random->add_option("SEED", seed)->required();

  std::vector<std::string> argv_storage{"moufang"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Inputs inputs(in);
  try {
    auto table = [&] { return parse_cayley(inputs.read(table_path)); };
    auto triple = [&] { return parse_triple(inputs.read(triple_path)); };

    if (*classify_cmd) {
      auto required = rung_from_string(require);
      if (!required) throw UsageError("unknown rung '" + require + "'");
      return cmd_classify(table(), *required, out);
    }
    if (*extract_cmd) return cmd_extract(table(), out, err);
    if (*verify_cmd) {
      auto tr = triple();
      return cmd_verify(tr, table(), out);
    }
    if (*reconstruct_cmd) return cmd_reconstruct(triple(), out, err);
    if (*roundtrip_cmd) return cmd_roundtrip(table(), out, err);
    if (*suite_cmd) {
      auto tr = triple();
      return cmd_suite(tr, table(), out);
    }
    if (*gen_cyclic) out << emit_cayley(fixtures::cyclic_group(order));
    if (*gen_s3) out << emit_cayley(fixtures::symmetric_group_3());
    if (*gen_chein) out << emit_cayley(fixtures::chein_double(fixtures::symmetric_group_3()));
    if (*gen_random) out << emit_cayley(fixtures::random_loop(order, seed));
    return kExitOk;
  } catch (UsageError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (Error const& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    if (e.code() == Errc::parse_error || e.code() == Errc::invalid_table ||
        e.code() == Errc::invalid_degree || e.code() == Errc::dimension_mismatch) {
      return kExitUsage;
    }
    return kExitCheckFailed;
  }
}

}  // namespace moufang::cli
