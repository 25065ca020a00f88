// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "moufang/axioms.hpp"
#include "moufang/error.hpp"
#include "moufang/fixtures.hpp"
#include "moufang/formats.hpp"
#include "moufang/triality.hpp"

using namespace moufang;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool ok, std::string const& what) {
    if (!ok && passed) {
      passed = false;
      note = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_passed(std::vector<CheckReport> const& reports, std::string* first_failure = nullptr) {
  for (auto const& r : reports) {
    if (!r.passed) {
      if (first_failure) *first_failure = r.law;
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::string, CayleyTable>> group_fixtures() {
  std::vector<std::pair<std::string, CayleyTable>> out;
  for (std::size_t n = 1; n <= 8; ++n) out.emplace_back("Z" + std::to_string(n), fixtures::cyclic_group(n));
  out.emplace_back("S3", fixtures::symmetric_group_3());
  return out;
}

std::vector<std::pair<std::string, CayleyTable>> all_fixtures() {
  auto out = group_fixtures();
  out.emplace_back("M(S3,2)", fixtures::chein_double(fixtures::symmetric_group_3()));
  return out;
}

Outcome hypotheses_on_groups() {
  Outcome o;
  auto const start = Clock::now();
  for (auto const& [name, tbl] : group_fixtures()) {
    HypothesisReport const rep = verify_hypotheses(extract_triple(tbl), tbl);
    for (auto const& r : rep.all()) o.require(r.passed, name + ": " + r.law + " failed");
    o.require(rep.overall, name + ": overall verdict false");
  }
  double const elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
  if (o.passed) o.note = "Z1..Z8, S3 all-pass in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome smallest_proper_moufang_loop() {
  Outcome o;
  auto const start = Clock::now();
  CayleyTable const m = fixtures::chein_double(fixtures::symmetric_group_3());
  o.require(m.order() == 12, "order is not 12");
  o.require(check_moufang(m).passed, "Moufang identity fails");
  o.require(check_inverse_property(m).passed, "inverse property fails");
  CheckReport const assoc = check_associative(m);
  o.require(!assoc.passed, "table is associative");
  if (!assoc.passed) {
    Element const g = assoc.witness[0], h = assoc.witness[1], k = assoc.witness[2];
    std::cout << "    associativity witness (g,h,k) = (" << g << ',' << h << ',' << k
              << "): (gh)k = " << m(m(g, h), k) << ", g(hk) = " << m(g, m(h, k)) << '\n';
    o.require(m(m(g, h), k) != m(g, m(h, k)), "witness does not falsify associativity");
  }
  o.require(verify_hypotheses(extract_triple(m), m).overall, "hypotheses fail");
  double const elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
  if (o.passed) o.note = "Moufang, IP, non-associative, hypotheses all-pass in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (auto const& [name, tbl] : all_fixtures()) {
    CayleyTable const rebuilt = reconstruct_multiplication(extract_triple(tbl));
    o.require(rebuilt == tbl, name + ": reconstructed table differs");
  }
  if (o.passed) o.note = std::to_string(all_fixtures().size()) + " fixtures reproduced entrywise";
  return o;
}

Outcome theorem_end_to_end() {
  Outcome o;
  std::size_t suites = 0;
  for (auto const& [name, tbl] : all_fixtures()) {
    TranslationTriple const tr = extract_triple(tbl);
    if (!verify_hypotheses(tr, tbl).overall) {
      o.require(false, name + ": hypotheses fail");
      continue;
    }
    std::string failed;
    o.require(all_passed(run_proposition_suite(tr, tbl), &failed), name + ": " + failed + " failed");
    o.require(classify(tbl).rung >= Rung::moufang_loop, name + ": not a Moufang loop");
    ++suites;
  }

  std::size_t attempts = 0, non_moufang = 0, rejected = 0, accepted_moufang = 0;
  for (std::uint32_t seed = 0; seed < 120; ++seed) {
    std::size_t const n = 5 + seed % 4;
    CayleyTable const tbl = fixtures::random_loop(n, seed);
    TranslationTriple const tr = translation_triple(tbl);
    bool const is_moufang = check_moufang(tbl).passed;
    ++attempts;
    if (!is_moufang) ++non_moufang;
    if (!verify_hypotheses(tr, tbl).overall) {
      ++rejected;
      continue;
    }
    // Accepted: the theorem says the table must be Moufang and the suite green.
    o.require(is_moufang, "random_loop(" + std::to_string(n) + "," + std::to_string(seed) +
                              ") passed the hypotheses but is not Moufang");
    std::string failed;
    o.require(all_passed(run_proposition_suite(tr, tbl), &failed),
              "random_loop suite failed at " + failed);
    ++accepted_moufang;
  }
  o.require(non_moufang >= 100, "only " + std::to_string(non_moufang) + " non-Moufang attempts");
  o.require(rejected >= non_moufang, "a non-Moufang table was accepted");
  if (o.passed) {
    o.note = std::to_string(suites) + " fixture suites all-pass; " + std::to_string(attempts) +
             " random attempts: " + std::to_string(non_moufang) + " non-Moufang, all rejected; " +
             std::to_string(accepted_moufang) + " accepted (all Moufang)";
  }
  return o;
}

Outcome mutation_sensitivity() {
  Outcome o;
  std::size_t total = 0;
  std::mt19937 rng(20240601);
  for (auto const& [name, tbl] : all_fixtures()) {
    TranslationTriple const tr = extract_triple(tbl);
    std::size_t const m = tr.degree();
    if (m < 2) continue;  // degree 1 admits no single-image mutation
    for (int i = 0; i < 50; ++i) {
      Element const g = rng() % tr.size();
      int const which = static_cast<int>(rng() % 3);
      std::size_t const x = rng() % m;
      std::size_t y = rng() % (m - 1);
      if (y >= x) ++y;
      auto s = tr.s_maps();
      auto t = tr.t_maps();
      auto p = tr.p_maps();
      auto& target = which == 0 ? s[g] : which == 1 ? t[g] : p[g];
      std::vector<std::size_t> images(target.images().begin(), target.images().end());
      std::swap(images[x], images[y]);
      target = Perm(images);
      TranslationTriple const bad(std::move(s), std::move(t), std::move(p));
      bool caught = false;
      try {
        derive_bar(bad);
        caught = !verify_hypotheses(bad, tbl).overall;
      } catch (Error const&) {
        caught = true;
      }
      ++total;
      o.require(caught, name + ": mutation of " + "STP"[which] + "_" + std::to_string(g) +
                            " swapping " + std::to_string(x) + "," + std::to_string(y) +
                            " passed");
    }
  }
  if (o.passed) o.note = std::to_string(total) + " mutations, zero false-passes";
  return o;
}

Outcome small_order_sweep() {
  Outcome o;
  auto const start = Clock::now();
  std::ostringstream counts;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t moufang = 0;
    std::size_t const loops = fixtures::for_each_loop(n, [&](CayleyTable const& tbl) {
      if (check_moufang(tbl).passed) {
        ++moufang;
        CheckReport const a = check_associative(tbl);
        o.require(a.passed, "order " + std::to_string(n) + " Moufang loop is not associative");
      }
      return true;
    });
    counts << (n > 1 ? ", " : "") << "n=" << n << ": " << loops << " loops/" << moufang << " Moufang";
  }
  double const elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s >= 60 s");
  if (o.passed) o.note = counts.str() + "; all Moufang ones associative (" + std::to_string(elapsed) + " s)";
  return o;
}

Outcome cli_contract() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path const dir = fs::temp_directory_path() / ("moufang-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](std::string const& name, std::string const& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  CayleyTable const good_tbl = fixtures::chein_double(fixtures::symmetric_group_3());
  TranslationTriple const good_tr = extract_triple(good_tbl);
  auto s = good_tr.s_maps();
  std::vector<std::size_t> images(s[3].images().begin(), s[3].images().end());
  std::swap(images[0], images[1]);
  s[3] = Perm(images);
  TranslationTriple const mutated(s, good_tr.t_maps(), good_tr.p_maps());

  std::string const good = write("good.cay", emit_cayley(good_tbl));
  std::string const bad = write("bad.cay", emit_cayley(fixtures::random_loop(5, 1)));
  std::string const z12 = write("z12.cay", emit_cayley(fixtures::cyclic_group(12)));
  std::string const triple = write("good.trp", emit_triple(good_tr));
  std::string const mut = write("mutated.trp", emit_triple(mutated));
  std::string const malformed = write("malformed.cay", "3\n0 1 2\n1 2\n");
  std::string const malformed_trp = write("malformed.trp", "1 2\nS 0 0\nT 0 1\nP 0 1\n");

  struct Case {
    std::vector<std::string> args;
    int expected;
    std::string must_contain;
  };
  std::vector<Case> const matrix{
      {{"classify", good}, 0, "Moufang loop (non-associative)"},
      {{"classify", bad}, 1, "witness=("},
      {{"classify", malformed}, 2, ""},
      {{"extract", good}, 0, ""},
      {{"extract", bad}, 1, ""},
      {{"extract", malformed}, 2, ""},
      {{"verify", triple, good}, 0, "hypotheses: all pass"},
      {{"verify", mut, good}, 1, "witness=("},
      {{"verify", malformed_trp, good}, 2, ""},
      {{"verify", triple, malformed}, 2, ""},
      {{"reconstruct", triple}, 0, ""},
      {{"reconstruct", mut}, 1, ""},
      {{"roundtrip", good}, 0, "round-trip OK"},
      {{"roundtrip", bad}, 1, ""},
      {{"roundtrip", malformed}, 2, ""},
      {{"suite", triple, good}, 0, "propositions pass"},
      {{"suite", mut, good}, 1, "FAIL"},
      {{"verify", triple, z12}, 1, "hypotheses: FAILED"},
      {{"suite", triple, z12}, 1, "suite refused"},
      {{"suite", triple, bad}, 2, ""},
      {{"no-such-command"}, 2, ""},
      {{"verify", triple}, 2, ""},
      {{"classify", (dir / "missing.cay").string()}, 2, ""},
  };
  for (auto const& c : matrix) {
    std::istringstream in;
    std::ostringstream out, err;
    int const code = cli::run(c.args, in, out, err);
    std::string label = c.args[0];
    for (std::size_t i = 1; i < c.args.size(); ++i) label += " " + fs::path(c.args[i]).filename().string();
    o.require(code == c.expected, label + ": exit " + std::to_string(code) + ", expected " +
                                      std::to_string(c.expected));
    o.require(c.must_contain.empty() || out.str().find(c.must_contain) != std::string::npos,
              label + ": output lacks '" + c.must_contain + "'");
  }
  fs::remove_all(dir);
  if (o.passed) o.note = std::to_string(matrix.size()) + " scripted invocations, exit codes as specified";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"AC1 hypothesis verification on groups", hypotheses_on_groups},
      {"AC2 smallest proper Moufang loop", smallest_proper_moufang_loop},
      {"AC3 round-trip reconstruction", round_trip},
      {"AC4 theorem end-to-end", theorem_end_to_end},
      {"AC5 mutation sensitivity", mutation_sensitivity},
      {"AC6 exhaustive small-order sweep", small_order_sweep},
      {"AC7 CLI contract", cli_contract},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    Outcome result;
    try {
      result = c.run();
    } catch (std::exception const& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << c.name << " -- " << result.note << '\n';
    if (!result.passed) ++failures;
  }
  std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
