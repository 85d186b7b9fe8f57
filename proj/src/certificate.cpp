#include "padapt/certificate.hpp"

#include <omp.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "padapt/linalg.hpp"

namespace padapt {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> h_basis_labels(const TruncatedParabolic& p) {
  std::vector<std::string> out;
  for (int i : p.pi_prime()) out.push_back("a" + std::to_string(i) + "^");
  if (p.has_fork_line()) {
    const int n = p.roots().rank();
    out.push_back("(a" + std::to_string(n) + "^-a" + std::to_string(n - 1) + "^)");
  }
  return out;
}

}  // namespace

bool Certificate::passed() const {
  if (has_recipe)
    return candidate_ok() && verdict.exists && degree_sum && degree_sum->equal;
  bool ok = index_agree || oracle_values.empty();
  ok = ok && static_cast<int>(lower.size()) == index_orbits;
  return ok;
}

Certificate build_certificate(const ParabolicCase& pc, const CertificateOptions& opts) {
  Certificate cert;
  cert.pc = pc;
  cert.variant = opts.variant;

  auto rs = make_root_system(pc.family, pc.n);
  TruncatedParabolic trunc = build_truncation(pc, rs);
  auto real = make_realization(rs);
  BoundsContext bc(trunc);

  cert.orbits = bc.orbits().orbits;
  cert.index_orbits = index_by_orbits(trunc);
  cert.dim = trunc.dim();
  cert.dim_h = trunc.dim_h();
  cert.magic = magic_number(trunc);
  if (opts.run_oracle) {
    cert.oracle_seeds = opts.seeds;
    int best = trunc.dim();
    for (unsigned long seed : opts.seeds) {
      int v = index_oracle(trunc, *real, seed);
      cert.oracle_values.push_back(v);
      best = std::min(best, v);
    }
    cert.index_oracle_min = best;
    cert.index_agree = best == cert.index_orbits;
  }
  cert.lower = bc.lower_bound();
  cert.upper = bc.upper_bound();
  cert.epsilon_half = bc.epsilon_half_count();

  cert.has_recipe = opts.variant || pc.recipe != Recipe::None;
  if (!cert.has_recipe) return cert;

  cert.cand = opts.variant
                  ? construct_notwork_variant(pc.family, pc.n,
                                              *pc.deleted.begin(), trunc)
                  : construct_candidate(pc, trunc);
  cert.conds = check_conditions(*cert.cand, trunc, *real);
  if (cert.conds->i_ok) {
    cert.h = solve_h(*cert.cand, trunc);
    cert.cand->h = cert.h;
    cert.h_coords = trunc.expand_h_lambda(*cert.h);
    cert.spectrum = adh_spectrum(*cert.cand, trunc);
    cert.improved = bc.improved_upper_bound(*cert.cand);
  }
  cert.reg = verify_regularity_direct(*cert.cand, trunc, *real);
  bool pair_ok = cert.conds->all_ok() && cert.reg->verdict;
  cert.verdict = bc.weierstrass_verdict(
      pair_ok, cert.improved ? &*cert.improved : nullptr);
  if (cert.verdict.exists) {
    const ImprovedBound* ib = cert.improved ? &*cert.improved : nullptr;
    cert.table = bc.weight_degree_table(cert.verdict.route, ib);
    cert.degree_sum = bc.degree_sum_check(cert.verdict.route, ib);
  }
  return cert;
}

namespace {

Json root_json(const RootSystem& rs, RootId id) {
  Json j;
  j["str"] = rs.root_str(id);
  j["coords"] = rs.root(id);
  return j;
}

Json roots_json(const RootSystem& rs, const std::vector<RootId>& ids) {
  Json j = Json::array();
  for (RootId id : ids) j.push_back(root_json(rs, id));
  return j;
}

Json weight_json(const RootSystem& rs, const RatVec& fund) {
  Json j;
  WeightVec w = rs.from_fundamental(fund);
  j["str"] = rs.weight_str(w);
  Json coords = Json::array();
  for (const auto& c : fund) coords.push_back(rat_str(c));
  j["fund"] = coords;
  return j;
}

Json multiset_json(const RootSystem& rs, const WeightMultiset& m) {
  Json j = Json::array();
  for (const auto& f : m) j.push_back(weight_json(rs, f));
  return j;
}

}  // namespace

std::string to_json(const Certificate& cert) {
  auto rs = make_root_system(cert.pc.family, cert.pc.n);
  TruncatedParabolic trunc = build_truncation(cert.pc, rs);
  const RootSystem& R = *rs;

  Json j;
  {
    Json c;
    c["family"] = std::string(1, family_letter(cert.pc.family));
    c["n"] = cert.pc.n;
    switch (cert.pc.kind) {
      case CaseKind::PSL: c["kind"] = "p_sl"; break;
      case CaseKind::PL: c["kind"] = "p_ell"; break;
      case CaseKind::QSL: c["kind"] = "q_sl"; break;
      case CaseKind::RAW: c["kind"] = "raw"; break;
    }
    c["s"] = cert.pc.s;
    c["ell"] = cert.pc.ell;
    c["deleted"] = std::vector<int>(cert.pc.deleted.begin(), cert.pc.deleted.end());
    c["recipe"] = recipe_name(cert.pc.recipe);
    c["canonicalized"] = cert.pc.canonicalized;
    c["variant"] = cert.variant;
    c["label"] = cert.pc.label();
    j["case"] = c;
  }
  {
    Json s;
    if (cert.cand) {
      s["S_plus"] = roots_json(R, cert.cand->S_plus);
      s["S_minus"] = roots_json(R, cert.cand->S_minus);
      Json gammas = Json::array();
      for (const auto& hs : cert.cand->heisenberg) {
        Json g;
        g["centre"] = root_json(R, hs.centre);
        g["members"] = roots_json(R, hs.members);
        gammas.push_back(g);
      }
      s["gamma"] = gammas;
      s["T"] = roots_json(R, cert.cand->T);
      s["T_star"] = roots_json(R, cert.cand->T_star);
    }
    j["sets"] = s;
  }
  {
    Json h;
    if (cert.h) {
      Json eps = Json::array();
      for (const auto& c : *cert.h) eps.push_back(rat_str(c));
      h["eps"] = eps;
      Json basis = Json::array();
      auto labels = h_basis_labels(trunc);
      for (std::size_t k = 0; k < labels.size(); ++k) {
        Json term;
        term["basis"] = labels[k];
        term["coeff"] = rat_str((*cert.h_coords)[k]);
        basis.push_back(term);
      }
      h["coroot_coeffs"] = basis;
    }
    j["h"] = h;
  }
  {
    Json c;
    if (cert.conds) {
      const auto& r = *cert.conds;
      c["i"] = Json{{"ok", r.i_ok}, {"det", rat_str(r.i_det)}};
      c["ii"] = Json{{"ok", r.ii_ok}, {"witnesses", r.ii_witnesses}};
      c["iii"] = Json{{"ok", r.iii_ok}, {"witnesses", r.iii_witnesses}};
      c["iv"] = Json{{"ok", r.iv_ok}, {"witnesses", r.iv_witnesses}};
      Json vw = Json::array();
      for (RootId id : r.v_witnesses) vw.push_back(R.root_str(id));
      c["v"] = Json{{"ok", r.v_ok}, {"witnesses", vw}};
      c["vi"] = Json{{"ok", r.vi_ok}, {"T_size", r.T_size}, {"index", r.index}};
      c["all_ok"] = r.all_ok();
    }
    j["conditions"] = c;
  }
  {
    Json r;
    if (cert.reg) {
      r["dim"] = cert.reg->dim;
      r["rank"] = cert.reg->rank;
      r["expected_rank"] = cert.reg->expected_rank;
      r["complement_spans"] = cert.reg->complement_spans;
      r["verdict"] = cert.reg->verdict;
    }
    j["regularity"] = r;
  }
  {
    Json ix;
    Json orbs = Json::array();
    for (const auto& o : cert.orbits) orbs.push_back(o);
    ix["orbits"] = orbs;
    ix["by_orbits"] = cert.index_orbits;
    if (!cert.oracle_values.empty()) {
      ix["oracle"] = Json{{"seeds", cert.oracle_seeds},
                          {"values", cert.oracle_values},
                          {"min", cert.index_oracle_min}};
      ix["agree"] = cert.index_agree;
    }
    ix["dim"] = cert.dim;
    ix["dim_h"] = cert.dim_h;
    ix["magic"] = rat_str(cert.magic);
    j["index"] = ix;
  }
  {
    Json b;
    b["lower"] = multiset_json(R, cert.lower);
    b["upper"] = multiset_json(R, cert.upper);
    b["epsilon_half"] = cert.epsilon_half;
    if (cert.improved) {
      b["improved"] = multiset_json(R, cert.improved->multiset);
      b["eq_iub"] = canonical(cert.improved->multiset) == cert.lower;
      b["s_coeffs_natural"] = cert.improved->all_coeffs_natural;
    }
    j["bounds"] = b;
  }
  {
    Json v;
    v["exists"] = cert.verdict.exists;
    v["route"] = cert.verdict.route == Route::A   ? "A"
                 : cert.verdict.route == Route::B ? "B"
                                                  : "inconclusive";
    j["verdict"] = v;
  }
  {
    Json t = Json::array();
    for (const auto& row : cert.table) {
      Json r;
      r["label"] = row.label;
      r["weight"] = R.weight_str(row.weight);
      Json coords = Json::array();
      for (const auto& c : row.fund) coords.push_back(rat_str(c));
      r["fund"] = coords;
      r["degree"] = row.degree;
      t.push_back(r);
    }
    j["table"] = t;
  }
  {
    Json d;
    if (cert.degree_sum) {
      d["sum"] = rat_str(cert.degree_sum->sum);
      d["magic"] = rat_str(cert.degree_sum->magic);
      d["equal"] = cert.degree_sum->equal;
    }
    j["degree_sum"] = d;
  }
  {
    Json s;
    if (cert.spectrum) {
      Json rows = Json::array();
      for (const auto& [lambda, m] : cert.spectrum->m_dual) {
        Json r;
        r["lambda"] = rat_str(lambda);
        r["m_prime"] = cert.spectrum->prime_at(lambda);
        r["m_dual"] = m;
        rows.push_back(r);
      }
      s["rows"] = rows;
      s["mult_ok"] = cert.spectrum->mult_ok;
    }
    j["spectrum"] = s;
  }
  return j.dump(2) + "\n";
}

std::string to_text(const Certificate& cert) {
  auto rs = make_root_system(cert.pc.family, cert.pc.n);
  TruncatedParabolic trunc = build_truncation(cert.pc, rs);
  const RootSystem& R = *rs;
  std::ostringstream os;
  os << "case " << cert.pc.label();
  if (cert.variant) os << " (variant)";
  os << "\n";
  os << "  dim p_Lambda = " << cert.dim << ", dim h_Lambda = " << cert.dim_h
     << ", ind = " << cert.index_orbits << ", magic = " << rat_str(cert.magic)
     << "\n";
  os << "  orbits:";
  for (const auto& o : cert.orbits) os << " " << orbit_label(o);
  os << "\n";
  if (!cert.oracle_values.empty()) {
    os << "  index oracle:";
    for (int v : cert.oracle_values) os << " " << v;
    os << " -> " << cert.index_oracle_min
       << (cert.index_agree ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  if (cert.cand) {
    auto list = [&](const char* name, const std::vector<RootId>& ids) {
      os << "  " << name << " = {";
      for (std::size_t k = 0; k < ids.size(); ++k)
        os << (k ? ", " : "") << R.root_str(ids[k]);
      os << "}\n";
    };
    list("S+", cert.cand->S_plus);
    list("S-", cert.cand->S_minus);
    list("T", cert.cand->T);
    list("T*", cert.cand->T_star);
  }
  if (cert.h) {
    os << "  h =";
    auto labels = h_basis_labels(trunc);
    bool first = true;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const Rat& c = (*cert.h_coords)[k];
      if (c == 0) continue;
      os << (first ? " " : " + ") << rat_str(c) << "*" << labels[k];
      first = false;
    }
    os << "   (eps:";
    for (const auto& c : *cert.h) os << " " << rat_str(c);
    os << ")\n";
  }
  if (cert.conds) {
    const auto& r = *cert.conds;
    os << "  conditions: (i)" << (r.i_ok ? "+" : "-") << " det=" << rat_str(r.i_det)
       << " (ii)" << (r.ii_ok ? "+" : "-") << " (iii)" << (r.iii_ok ? "+" : "-")
       << " (iv)" << (r.iv_ok ? "+" : "-") << " (v)" << (r.v_ok ? "+" : "-")
       << " (vi)" << (r.vi_ok ? "+" : "-") << "\n";
    if (!r.v_ok) {
      os << "  condition (v) witnesses:";
      for (RootId id : r.v_witnesses) os << " " << R.root_str(id);
      os << "\n";
    }
  }
  if (cert.reg) {
    os << "  regularity: rank " << cert.reg->rank << " (expected "
       << cert.reg->expected_rank << ") of dim " << cert.reg->dim << " -> "
       << (cert.reg->verdict ? "regular" : "NOT regular") << "\n";
  }
  os << "  epsilon_half orbits: " << cert.epsilon_half << "\n";
  os << "  verdict: "
     << (cert.verdict.exists
             ? std::string("Weierstrass section exists (route ") +
                   (cert.verdict.route == Route::A ? "A" : "B") + ")"
             : std::string("inconclusive"))
     << "\n";
  if (!cert.table.empty()) {
    os << "  table (orbit/root | weight | degree):\n";
    for (const auto& row : cert.table)
      os << "    " << row.label << " | " << R.weight_str(row.weight) << " | "
         << row.degree << "\n";
  }
  if (cert.degree_sum)
    os << "  degree sum = " << rat_str(cert.degree_sum->sum) << " vs magic "
       << rat_str(cert.degree_sum->magic)
       << (cert.degree_sum->equal ? " (equal)" : " (MISMATCH)") << "\n";
  if (cert.spectrum) {
    os << "  ad h spectrum (lambda: m' m*):\n    ";
    for (const auto& [lambda, m] : cert.spectrum->m_dual)
      os << " " << rat_str(lambda) << ":" << cert.spectrum->prime_at(lambda) << ","
         << m;
    os << "\n    inequality m'_l <= m_{l+1}: "
       << (cert.spectrum->mult_ok ? "holds" : "FAILS") << "\n";
  }
  return os.str();
}

std::string table_tsv(const Certificate& cert) {
  auto rs = make_root_system(cert.pc.family, cert.pc.n);
  std::ostringstream os;
  os << "orbit\tweight\tdegree\n";
  for (const auto& row : cert.table)
    os << row.label << "\t" << rs->weight_str(row.weight) << "\t" << row.degree
       << "\n";
  return os.str();
}

std::vector<ParabolicCase> enumerate_cases(int max_n) {
  std::vector<ParabolicCase> out;
  for (int n = 2; n <= max_n; ++n) {
    // B and D, s odd.
    for (Family fam : {Family::B, Family::D}) {
      if (fam == Family::D && n < 4) continue;
      for (int s = 1; s <= n; s += 2)
        for (int ell = 1; s + 2 * ell <= n; ++ell)
          out.push_back(make_psl(fam, n, s, ell));
    }
    // B and D, s even, l = 1.
    if (n >= 4)
      for (int s = 2; s <= n - 2; s += 2) out.push_back(make_psl(Family::B, n, s, 1));
    if (n >= 6)
      for (int s = 2; s <= n - 4; s += 2) out.push_back(make_psl(Family::D, n, s, 1));
    // C.
    if (n >= 3)
      for (int s = 1; s <= n; ++s)
        for (int ell = 1; s + 2 * ell <= n; ++ell)
          out.push_back(make_psl(Family::C, n, s, ell));
    // D: p_l and q_{s,l}.
    if (n >= 4 && n % 2 == 0)
      for (int ell = 0; 2 * ell <= n - 2; ++ell) out.push_back(make_pl(n, ell));
    if (n >= 5 && n % 2 == 1) {
      out.push_back(make_pl(n, 0));
      out.push_back(make_pl(n, 1));
      for (int s = 1; s <= n - 2; s += 2)
        for (int ell = 0; s + 2 * ell <= n - 2; ++ell)
          out.push_back(make_qsl(n, s, ell));
    }
  }
  return out;
}

namespace {

// Full verification of one named case; returns an empty string on success.
std::string verify_case(const ParabolicCase& pc, const GridOptions& opts) {
  auto rs = make_root_system(pc.family, pc.n);
  TruncatedParabolic trunc = build_truncation(pc, rs);
  auto real = make_realization(rs);
  BoundsContext bc(trunc);

  AdaptedCandidate cand = construct_candidate(pc, trunc);
  ConditionReport conds = check_conditions(cand, trunc, *real);
  if (!conds.all_ok()) return "fails " + conds.first_failure();

  cand.h = solve_h(cand, trunc);
  RegularityResult reg = verify_regularity_direct(cand, trunc, *real);
  if (!reg.verdict) return "direct regularity check fails";
  if (reg.expected_rank != trunc.dim() - index_by_orbits(trunc))
    return "rank target differs from dim - ind";

  // gamma(h) = -1 on S, exactly.
  const auto& R = *rs;
  for (RootId g : cand.S()) {
    WeightVec w(R.rank());
    for (int t = 0; t < R.rank(); ++t) w[t] = R.root(g)[t];
    if (RootSystem::pairing(w, *cand.h) != -1) return "gamma(h) != -1 on S";
  }

  SpectrumTables spec = adh_spectrum(cand, trunc);
  if (!spec.mult_ok) return "multiplicity inequality fails";

  ImprovedBound ib = bc.improved_upper_bound(cand);
  Verdict verdict = bc.weierstrass_verdict(true, &ib);
  if (!verdict.exists) return "no Weierstrass route";

  // Bound weights vanish on h_Lambda.
  for (const auto& f : bc.lower_bound()) {
    WeightVec w = R.from_fundamental(f);
    for (const auto& t : trunc.h_basis())
      if (RootSystem::pairing(w, t) != 0) return "bound weight does not vanish on h_Lambda";
  }
  if (static_cast<int>(bc.lower_bound().size()) != index_by_orbits(trunc))
    return "bound size differs from the index";

  // T-side degrees tie to the eigenvalues of h.
  for (const auto& row : ib.rows) {
    WeightVec w(R.rank());
    for (int t = 0; t < R.rank(); ++t) w[t] = R.root(row.gamma)[t];
    Rat ev = RootSystem::pairing(w, *cand.h);
    if (ev < 0) return "negative eigenvalue on T";
    if (Rat(row.degree) != ev + 1) return "degree / eigenvalue mismatch on T";
    if (!row.coeffs_natural) return "non-natural s(gamma) coefficients";
  }

  // On route A the improved bound coincides with the orbit bound as well.
  if (verdict.route == Route::A) {
    if (canonical(ib.multiset) != bc.lower_bound())
      return "improved bound differs from the orbit bound on route A";
    std::vector<int> da, db;
    for (const auto& row : bc.weight_degree_table(Route::A, nullptr))
      da.push_back(row.degree);
    for (const auto& row : ib.rows) db.push_back(row.degree);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return "orbit and T-side degree multisets differ";
  }

  auto ds = bc.degree_sum_check(verdict.route, &ib);
  if (!ds.equal) return "degree sum differs from the magic number";

  if (opts.oracle_max_n >= pc.n) {
    for (unsigned long seed : {1ul, 2ul, 3ul})
      if (index_oracle(trunc, *real, seed) != index_by_orbits(trunc))
        return "index oracle disagrees";
  }
  if (opts.scaling_max_n >= pc.n) {
    for (unsigned long seed : {11ul, 12ul, 13ul}) {
      auto coeffs = random_scaling(cand.S().size(), seed);
      if (!verify_regularity_direct(cand, trunc, *real, &coeffs).verdict)
        return "regularity not invariant under torus scaling";
    }
  }
  return "";
}

}  // namespace

std::vector<GridEntry> run_grid(const GridOptions& opts) {
  auto cases = enumerate_cases(opts.max_n);
  std::vector<GridEntry> out(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (long k = 0; k < count; ++k) {
    GridEntry& e = out[static_cast<std::size_t>(k)];
    e.pc = cases[static_cast<std::size_t>(k)];
    try {
      e.failure = verify_case(e.pc, opts);
      e.ok = e.failure.empty();
    } catch (const std::exception& ex) {
      e.ok = false;
      e.failure = ex.what();
    }
  }
  return out;
}

}  // namespace padapt
