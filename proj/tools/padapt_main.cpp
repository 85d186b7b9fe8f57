#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "padapt/cascade.hpp"
#include "padapt/certificate.hpp"

namespace {

using namespace padapt;

struct CaseFlags {
  std::string family;
  int n = 0;
  std::string kind;  // p_sl | p_ell | q_sl | raw
  int s = 0;
  int ell = 0;
  std::vector<int> raw;
  std::string variant;
  std::string format = "text";
  int seeds = 3;
  bool no_oracle = false;
};

void add_case_flags(CLI::App* cmd, CaseFlags& f) {
  cmd->add_option("--family", f.family, "B, C or D")->required();
  cmd->add_option("--n", f.n, "rank")->required();
  cmd->add_option("--case", f.kind, "p_sl | p_ell | q_sl | raw");
  cmd->add_option("--s", f.s, "first deleted index (p_sl, q_sl)");
  cmd->add_option("--ell", f.ell, "number of extra deletions");
  cmd->add_option("--raw", f.raw, "explicit deletion list")->delimiter(',');
  cmd->add_option("--variant", f.variant, "notwork: the failing construction");
  cmd->add_option("--format", f.format, "text | json | tsv");
  cmd->add_flag("--no-oracle", f.no_oracle, "skip the index corank oracle");
}

ParabolicCase case_from_flags(const CaseFlags& f) {
  Family fam = family_from_letter(f.family.at(0));
  if (!f.raw.empty() || f.kind == "raw")
    return make_raw(fam, f.n, std::set<int>(f.raw.begin(), f.raw.end()));
  if (f.kind == "p_sl") return make_psl(fam, f.n, f.s, f.ell);
  if (f.kind == "p_ell") return make_pl(f.n, f.ell);
  if (f.kind == "q_sl") return make_qsl(f.n, f.s, f.ell);
  throw CLI::ValidationError("--case", "need --case p_sl|p_ell|q_sl or --raw");
}

int cmd_adapted_pair(const CaseFlags& f) {
  ParabolicCase pc = case_from_flags(f);
  CertificateOptions opts;
  opts.run_oracle = !f.no_oracle;
  if (!f.variant.empty()) {
    if (f.variant != "notwork")
      throw CLI::ValidationError("--variant", "unknown variant " + f.variant);
    opts.variant = true;
  }
  Certificate cert = build_certificate(pc, opts);
  if (f.format == "json")
    std::cout << to_json(cert);
  else if (f.format == "tsv")
    std::cout << table_tsv(cert);
  else
    std::cout << to_text(cert);
  if (cert.passed()) return 0;
  if (cert.conds && !cert.conds->all_ok())
    std::cerr << "verification failed at " << cert.conds->first_failure() << "\n";
  else
    std::cerr << "verification failed\n";
  return 1;
}

int cmd_table(const CaseFlags& f) {
  ParabolicCase pc = case_from_flags(f);
  CertificateOptions opts;
  opts.run_oracle = false;
  Certificate cert = build_certificate(pc, opts);
  if (!cert.verdict.exists) {
    std::cerr << "case not verified; no table\n";
    return 1;
  }
  if (f.format == "json")
    std::cout << to_json(cert);
  else
    std::cout << table_tsv(cert);
  return 0;
}

int cmd_grid(int max_n, const std::string& checks) {
  if (checks == "cascade") {
    bool ok = true;
    for (int n = 2; n <= max_n; ++n) {
      for (Family fam : {Family::B, Family::C, Family::D}) {
        if (fam == Family::D && n < 4) continue;
        auto rep = cascade_lemma_check(*make_root_system(fam, n));
        std::cout << family_letter(fam) << n << " cascade laws: "
                  << (rep.all_ok() ? "pass" : "FAIL") << "\n";
        for (const auto& fmsg : rep.failures) std::cout << "    " << fmsg << "\n";
        ok = ok && rep.all_ok();
      }
    }
    return ok ? 0 : 1;
  }
  if (checks == "index") {
    bool ok = true;
    for (const auto& pc : enumerate_cases(max_n)) {
      auto rs = make_root_system(pc.family, pc.n);
      TruncatedParabolic trunc = build_truncation(pc, rs);
      auto real = make_realization(rs);
      int by_orbits = index_by_orbits(trunc);
      int oracle = trunc.dim();
      for (unsigned long seed : {1ul, 2ul, 3ul})
        oracle = std::min(oracle, index_oracle(trunc, *real, seed));
      bool agree = oracle == by_orbits;
      std::cout << pc.label() << " ind=" << by_orbits << " oracle=" << oracle
                << (agree ? " pass" : " FAIL") << "\n";
      ok = ok && agree;
    }
    return ok ? 0 : 1;
  }
  GridOptions opts;
  opts.max_n = max_n;
  auto entries = run_grid(opts);
  int failures = 0;
  for (const auto& e : entries) {
    std::cout << e.pc.label() << ": " << (e.ok ? "pass" : "FAIL " + e.failure)
              << "\n";
    if (!e.ok) ++failures;
  }
  std::cout << entries.size() << " cases, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adapted pairs and Weierstrass sections for truncated parabolics"};
  app.require_subcommand(1);

  CaseFlags pair_flags;
  CLI::App* pair = app.add_subcommand("adapted-pair",
                                      "construct and certify one case");
  add_case_flags(pair, pair_flags);

  CaseFlags table_flags;
  CLI::App* table = app.add_subcommand("table", "weight/degree table of one case");
  add_case_flags(table, table_flags);

  int max_n = 8;
  std::string checks = "all";
  CLI::App* grid = app.add_subcommand("grid", "sweep all named cases");
  grid->add_option("--max-n", max_n, "largest rank to sweep");
  grid->add_option("--checks", checks, "all | cascade | index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pair->parsed()) return cmd_adapted_pair(pair_flags);
    if (table->parsed()) return cmd_table(table_flags);
    if (grid->parsed()) return cmd_grid(max_n, checks);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
