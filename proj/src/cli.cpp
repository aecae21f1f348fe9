#include "monores/cli.hpp"

#include "monores/eagon.hpp"
#include "monores/io.hpp"
#include "monores/lattice.hpp"
#include "monores/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace monores {

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{
      "q",     "poincare", "deviations", "candidates", "verify-lcm",    "taylor", "scarf",
      "koszul", "betti",   "golod",      "golod-generic", "eagon",      "lattice-iso", "polarize"};
  return names;
}

namespace {

/// Collects the text and JSON renderings of one command.
class Report {
public:
  Json json = Json::object();

  void line(const std::string& s) { text_ += s + "\n"; }
  void table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
      width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c)
        width[c] = std::max(width[c], r[c].size());
    auto emit = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        std::string cell = r[c];
        if (c + 1 < r.size())
          cell.resize(width[c], ' ');
        s += (c ? "  " : "") + cell;
      }
      line(s);
    };
    emit(header);
    for (const auto& r : rows)
      emit(r);
  }
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    checks_.push_back({name, ok, detail});
    failed_ = failed_ || !ok;
  }
  void skipped(const std::string& name, const std::string& why) { checks_.push_back({name, true, "skipped: " + why}); }
  bool failed() const { return failed_; }

  void render(std::ostream& out, OutputFormat format) {
    if (!checks_.empty()) {
      Json list = Json::array();
      for (const auto& c : checks_) {
        Json j;
        j["name"] = c.name;
        j["ok"] = c.ok;
        if (!c.detail.empty())
          j["detail"] = c.detail;
        list.push_back(j);
        line("check " + c.name + ": " + (c.ok ? "ok" : "FAILED") + (c.detail.empty() ? "" : " (" + c.detail + ")"));
      }
      json["checks"] = list;
    }
    if (format == OutputFormat::json)
      out << json.dump(2) << "\n";
    else
      out << text_;
  }

private:
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::string text_;
  std::vector<Check> checks_;
  bool failed_ = false;
};

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string str(const mpz_class& v) { return v.get_str(); }

std::string ranks_string(const std::vector<std::size_t>& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i)
    s += (i ? " " : "") + std::to_string(r[i]);
  return s;
}

void series_terms_table(Report& rep, const BigradedSeries& s) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, c] : s.terms())
    rows.push_back({std::to_string(key.t), key.y.to_y_string(), str(c)});
  rep.table({"t", "y", "coeff"}, rows);
}

void generators_table(Report& rep, const FreeComplex& c, const std::vector<std::string>& names,
                      const std::string& count_name = "count") {
  const auto t = generator_table(c);
  std::vector<std::vector<std::string>> rows;
  Json list = Json::array();
  for (const auto& [key, n] : t) {
    rows.push_back({std::to_string(key.first), key.second.to_string(names), std::to_string(n)});
    Json j;
    j["i"] = key.first;
    j["y"] = key.second.vec();
    j[count_name] = n;
    list.push_back(j);
  }
  rep.table({"i", "multidegree", count_name}, rows);
  rep.json["ranks"] = c.ranks();
  rep.json["generators"] = list;
}

void homology_json(Report& rep, const HomologyTable& h, const std::string& key) {
  Json list = Json::array();
  for (std::size_t i = 0; i < h.dims.size(); ++i)
    for (const auto& [j, d] : h.dims[i]) {
      Json e;
      e["i"] = i;
      e["y"] = j.vec();
      e["dim"] = d;
      list.push_back(e);
    }
  rep.json[key] = list;
}

void require_inputs(const RunConfig& cfg, std::size_t n) {
  if (cfg.inputs.size() != n)
    throw InputError(cfg.command + " expects " + std::to_string(n) + " ideal file" + (n == 1 ? "" : "s"));
}

/// Betti numbers of S/I over S read off the Koszul complex over R.
std::map<std::pair<std::size_t, Multidegree>, std::size_t> koszul_betti(const MonomialIdeal& ideal,
                                                                       std::uint64_t ch, unsigned jobs) {
  const auto k = koszul_complex(ideal, RingKind::quotient).with_characteristic(ch);
  const auto h = homology(k, ideal.lcm_all(), jobs);
  std::map<std::pair<std::size_t, Multidegree>, std::size_t> out;
  for (std::size_t i = 0; i < h.dims.size(); ++i)
    for (const auto& [j, d] : h.dims[i])
      out[{i, j}] = d;
  return out;
}

/// Monomials of S/I inside the box [0, bound] (H_0 of a resolution of S/I).
std::map<Multidegree, std::size_t> quotient_monomials(const MonomialIdeal& ideal, const Multidegree& bound) {
  std::map<Multidegree, std::size_t> out;
  const Box box(bound);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    const auto m = box.at(idx);
    if (!ideal.contains(m))
      out[m] = 1;
  }
  return out;
}

bool is_resolution_of_quotient(const HomologyTable& h, const MonomialIdeal& ideal, const Multidegree& bound) {
  if (h.dims.empty())
    return false;
  if (h.dims[0] != quotient_monomials(ideal, bound))
    return false;
  for (std::size_t i = 1; i < h.dims.size(); ++i)
    if (!h.dims[i].empty())
      return false;
  return true;
}

int golod_tmax(const RunConfig& cfg, const MonomialIdeal& ideal) {
  return cfg.tmax >= 0 ? cfg.tmax : static_cast<int>(ideal.lcm_all().total_degree()) + 2;
}

// ---------------------------------------------------------------- commands

void cmd_q(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const int tmax = cfg.tmax >= 0 ? cfg.tmax : default_tmax(ideal);
  const auto q = denominator(ideal, tmax, cfg.characteristic);
  rep.line(q.to_string());
  rep.line("");
  series_terms_table(rep, q);
  rep.json = series_to_json(q);
  if (!cfg.check)
    return;
  rep.check("lcm-coefficients", verify_lcm_coefficients(q, ideal));
  const auto p = poincare_series(ideal, tmax, cfg.characteristic);
  rep.check("q-times-p", series_mul(q, p).same_terms(BigradedSeries::linear_factors(tmax, ideal.lcm_all())));
  rep.check("t-degree-bound", q.t_degree() <= ideal.lcm_all().total_degree());
  const bool taylor_min = is_taylor_minimal(ideal);
  const bool golod = is_golod_truncated(ideal, golod_tmax(cfg, ideal), cfg.characteristic);
  if (taylor_min || golod)
    rep.check("candidate-terms", terms_within_candidates(q, candidate_terms(ideal)),
              taylor_min ? "Taylor resolution minimal" : "Golod up to truncation");
  else
    rep.skipped("candidate-terms", "neither Taylor-minimal nor Golod");
}

void cmd_poincare(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const int tmax = cfg.tmax >= 0 ? cfg.tmax : default_tmax(ideal);
  const auto bound = padded_bound(ideal);
  const auto res = resolve_residue_field(ideal, tmax, bound, cfg.characteristic);
  const auto p = res.poincare_series();
  rep.line("P = " + p.to_string());
  rep.line("truncated at t^" + std::to_string(tmax) + " and multidegrees <= " + bound.to_y_string());
  rep.line("");
  generators_table(rep, res.complex, ideal.var_names(), "betti");
  rep.json["poincare"] = series_to_json(p);
  if (!cfg.check)
    return;
  rep.check("minimal", is_minimal(res.complex));
  rep.check("d-squared", d_squared_is_zero(res.complex));
  const auto h = homology(res.complex, bound, cfg.jobs);
  bool exact = h.total(0) == 1 && h.dim(0, Multidegree(ideal.num_vars())) == 1;
  for (std::size_t i = 1; i + 1 < h.dims.size(); ++i)
    exact = exact && h.total(i) == 0;
  rep.check("exact", exact, "degrees below " + std::to_string(res.complex.num_modules() - 1));
}

void cmd_deviations(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const int nmax = cfg.nmax >= 0 ? cfg.nmax : default_tmax(ideal);
  const auto p = poincare_series(ideal, nmax, padded_bound(ideal), cfg.characteristic);
  const auto table = deviations(p, nmax);
  std::vector<std::vector<std::string>> rows;
  Json list = Json::array();
  for (const auto& [key, e] : table) {
    if (sgn(e) == 0)
      continue;
    rows.push_back({std::to_string(key.n), key.j.to_y_string(), str(e)});
    Json j;
    j["n"] = key.n;
    j["j"] = key.j.vec();
    j["e"] = integer_to_json(e);
    list.push_back(j);
  }
  rep.table({"n", "j", "deviation"}, rows);
  rep.json["nmax"] = nmax;
  rep.json["deviations"] = list;
  if (!cfg.check)
    return;
  rep.check("round-trip", series_from_deviations(table, nmax, p.ybound()).same_terms(p));
  bool eps1 = true, eps2 = true;
  std::map<Multidegree, long> gens_of_degree;
  for (const auto& g : ideal.generators())
    if (g.total_degree() >= 2)
      ++gens_of_degree[g];
  for (const auto& [key, e] : table) {
    if (key.n == 1) {
      const bool unit = key.j.total_degree() == 1 && !ideal.contains(key.j);
      eps1 = eps1 && e == (unit ? 1 : 0);
    }
    if (key.n == 2) {
      auto it = gens_of_degree.find(key.j);
      eps2 = eps2 && e == (it == gens_of_degree.end() ? 0 : it->second);
    }
  }
  for (std::size_t v = 0; v < ideal.num_vars() && nmax >= 1; ++v) {
    const auto u = Multidegree::unit(ideal.num_vars(), v);
    if (!ideal.contains(u) && u.divides(ideal.lcm_all())) {
      auto it = table.find({1, u});
      eps1 = eps1 && it != table.end() && it->second == 1;
    }
  }
  for (const auto& [j, count] : gens_of_degree) {
    if (nmax < 2)
      break;
    auto it = table.find({2, j});
    eps2 = eps2 && it != table.end() && it->second == count;
  }
  rep.check("epsilon-1", eps1, "unit multidegrees outside I");
  rep.check("epsilon-2", eps2, "minimal generators of degree >= 2");
}

void cmd_candidates(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const auto cands = candidate_terms(ideal);
  std::vector<std::vector<std::string>> rows;
  Json list = Json::array();
  for (const auto& c : cands) {
    rows.push_back({c.sign > 0 ? "+" : "-", std::to_string(c.t_power), c.y.to_y_string()});
    Json j;
    j["sign"] = c.sign;
    j["t"] = c.t_power;
    j["y"] = c.y.vec();
    list.push_back(j);
  }
  rep.table({"sign", "t", "y"}, rows);
  rep.json["candidates"] = list;
  if (!cfg.check)
    return;
  const bool taylor_min = is_taylor_minimal(ideal);
  const bool golod = is_golod_truncated(ideal, golod_tmax(cfg, ideal), cfg.characteristic);
  if (taylor_min || golod)
    rep.check("denominator-within-candidates",
              terms_within_candidates(denominator(ideal, -1, cfg.characteristic), cands));
  else
    rep.skipped("denominator-within-candidates", "neither Taylor-minimal nor Golod");
}

void cmd_verify_lcm(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const auto q = denominator(ideal, cfg.tmax, cfg.characteristic);
  const bool ok = verify_lcm_coefficients(q, ideal);
  rep.line("Q = " + q.to_string());
  rep.line("every multidegree is an lcm of generators: " + yesno(ok));
  rep.json["denominator"] = series_to_json(q);
  rep.json["lcm_coefficients"] = ok;
  rep.check("lcm-coefficients", ok);
}

void cmd_complex(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  FreeComplex c;
  if (cfg.command == "taylor") {
    c = taylor_complex(ideal);
  } else if (cfg.command == "scarf") {
    c = scarf_complex(ideal);
  } else {
    if (cfg.over != "R" && cfg.over != "S")
      throw InputError("--over must be R or S");
    c = koszul_complex(ideal, cfg.over == "R" ? RingKind::quotient : RingKind::polynomial);
  }
  c = c.with_characteristic(cfg.characteristic);
  rep.line("ranks: " + ranks_string(c.ranks()));
  rep.line("");
  generators_table(rep, c, ideal.var_names());
  if (!cfg.check)
    return;
  rep.check("d-squared", d_squared_is_zero(c));
  const Multidegree bound = ideal.lcm_all();
  const auto h = homology(c, bound, cfg.jobs);
  homology_json(rep, h, "homology");
  if (cfg.command == "taylor") {
    rep.check("resolves-S/I", is_resolution_of_quotient(h, ideal, bound), "multidegrees <= m_I");
  } else if (cfg.command == "scarf") {
    if (is_generic(ideal))
      rep.check("resolves-S/I", is_resolution_of_quotient(h, ideal, bound), "generic ideal");
    else
      rep.skipped("resolves-S/I", "ideal is not generic");
  } else if (cfg.over == "S") {
    rep.check("resolves-k", h.total(0) == 1 && h.dim(0, Multidegree(ideal.num_vars())) == 1 &&
                                std::all_of(h.dims.begin() + 1, h.dims.end(), [](const auto& d) { return d.empty(); }));
  } else {
    const auto betti = generator_table(minimize(taylor_complex(ideal).with_characteristic(cfg.characteristic)));
    std::map<std::pair<std::size_t, Multidegree>, std::size_t> from_h;
    for (std::size_t i = 0; i < h.dims.size(); ++i)
      for (const auto& [j, d] : h.dims[i])
        from_h[{i, j}] = d;
    rep.check("tor-symmetry", betti == from_h, "H(K (x) S/I) against minimized Taylor");
  }
}

void cmd_betti(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const auto min = minimize(taylor_complex(ideal).with_characteristic(cfg.characteristic));
  rep.line("betti numbers of S/I: " + ranks_string(min.ranks()));
  rep.line("");
  generators_table(rep, min, ideal.var_names(), "betti");
  if (!cfg.check)
    return;
  rep.check("minimal", is_minimal(min));
  rep.check("d-squared", d_squared_is_zero(min));
  rep.check("tor-symmetry", generator_table(min) == koszul_betti(ideal, cfg.characteristic, cfg.jobs));
  if (is_generic(ideal))
    rep.check("scarf-ranks", scarf_complex(ideal).ranks() == min.ranks(), "generic ideal");
}

void cmd_golod(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const int tmax = golod_tmax(cfg, ideal);
  const auto cert = golod_certificate(ideal, tmax, cfg.characteristic);
  rep.line("golod: " + yesno(cert.golod));
  rep.line("certified for t-degrees <= " + std::to_string(tmax) + " and multidegrees <= " +
           cert.bound.to_y_string());
  rep.line("P           = " + cert.poincare.to_string());
  rep.line("Golod bound = " + cert.golod_bound.to_string());
  rep.json["golod"] = cert.golod;
  rep.json["tmax"] = tmax;
  rep.json["bound"] = cert.bound.vec();
  rep.json["poincare"] = series_to_json(cert.poincare);
  rep.json["golod_bound"] = series_to_json(cert.golod_bound);
  if (!cfg.check)
    return;
  const auto alg = koszul_homology_algebra(ideal, cfg.characteristic);
  const bool in_square = ideal.min_generator_degree() >= 2 || ideal.empty();
  if (cert.golod && in_square) {
    rep.check("products-vanish", alg.products_vanish());
    if (tmax >= ideal.lcm_all().total_degree())
      rep.check("q-equals-golod-denominator",
                denominator(ideal, tmax, cfg.characteristic).same_terms(golod_denominator(alg, tmax)));
  }
  if (is_generic(ideal) && in_square)
    rep.check("generic-criterion", is_golod_generic(ideal) == cert.golod);
}

void cmd_golod_generic(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const bool g = is_golod_generic(ideal);
  rep.line("golod: " + yesno(g));
  rep.json["golod"] = g;
  if (cfg.check)
    rep.check("series-certificate", is_golod_truncated(ideal, golod_tmax(cfg, ideal), cfg.characteristic) == g);
}

void cmd_eagon(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const int imax = cfg.imax >= 0 ? cfg.imax : 5;
  const auto res = eagon_resolution(ideal, imax, cfg.characteristic);
  rep.line("ranks:         " + ranks_string(res.complex.ranks()));
  rep.line("formula ranks: " + ranks_string(eagon_rank_formula(ideal, imax)));
  rep.line("multiplicative cycle choice: " + yesno(res.multiplicative));
  rep.line("");
  generators_table(rep, res.complex, ideal.var_names());
  rep.json["formula_ranks"] = eagon_rank_formula(ideal, imax);
  rep.json["multiplicative"] = res.multiplicative;
  if (!cfg.check)
    return;
  const auto bound = default_eagon_bound(ideal, imax);
  const auto chk = check_eagon(res, bound, cfg.jobs);
  const std::string within = "multidegrees <= " + bound.to_y_string();
  rep.check("d-squared", chk.d_squared_zero);
  rep.check("h0-is-k", chk.h0_is_k, within);
  rep.check("exact", chk.exact, "degrees 1.." + std::to_string(imax - 1) + ", " + within);
  rep.check("rank-formula", chk.ranks_match);
}

void cmd_lattice_iso(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 2);
  const auto a = load_ideal(cfg.inputs[0]);
  const auto b = load_ideal(cfg.inputs[1]);
  const auto maps = find_lattice_isomorphisms(a, b);
  const auto preserving = std::count_if(maps.begin(), maps.end(), [](const auto& m) { return m.gcd_preserving; });
  rep.line("lattice isomorphisms: " + std::to_string(maps.size()));
  rep.line("gcd-preserving: " + std::to_string(preserving));
  int tdeg = cfg.tdeg;
  BigradedSeries qa, qb;
  if (cfg.transport) {
    if (tdeg < 0)
      tdeg = static_cast<int>(std::max(a.lcm_all().total_degree(), b.lcm_all().total_degree()));
    qa = denominator(a, tdeg, cfg.characteristic);
    qb = denominator(b, tdeg, cfg.characteristic);
    rep.line("Q(A) = " + qa.to_string());
    rep.line("Q(B) = " + qb.to_string());
    rep.json["q_source"] = series_to_json(qa);
    rep.json["q_target"] = series_to_json(qb);
  }
  Json list = Json::array();
  bool transport_ok = true;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& m = maps[k];
    std::string pairing;
    Json pairs = Json::array();
    for (std::size_t g = 0; g < m.atom_map.size(); ++g) {
      pairing += (g ? ", " : "") + a.generator(g).to_string(a.var_names()) + " -> " +
                 b.generator(m.atom_map[g]).to_string(b.var_names());
      pairs.push_back(Json::array({g, m.atom_map[g]}));
    }
    rep.line("");
    rep.line("isomorphism " + std::to_string(k + 1) + ": " + pairing);
    rep.line("  gcd_preserving: " + yesno(m.gcd_preserving));
    Json j;
    j["atoms"] = pairs;
    j["gcd_preserving"] = m.gcd_preserving;
    if (cfg.transport) {
      const auto moved = transport_denominator(qa, m);
      const bool equal = moved.same_terms(qb);
      rep.line("  transported Q(A) = " + moved.to_string());
      rep.line("  equals Q(B): " + yesno(equal));
      j["transported"] = series_to_json(moved);
      j["equals_target"] = equal;
      if (m.gcd_preserving && !equal)
        transport_ok = false;
    }
    if (cfg.check) {
      bool joins = true;
      const LcmLattice la(a), lb(b);
      for (std::size_t u = 0; u < la.size(); ++u)
        for (std::size_t v = 0; v < la.size(); ++v)
          joins = joins && m.element_map[la.join(u, v)] == lb.join(m.element_map[u], m.element_map[v]);
      rep.check("joins-preserved-" + std::to_string(k + 1), joins);
    }
    list.push_back(j);
  }
  rep.json["isomorphisms"] = list;
  rep.json["count"] = maps.size();
  rep.json["gcd_preserving_count"] = preserving;
  if (cfg.transport)
    rep.check("transport", transport_ok, "gcd-preserving maps carry Q(A) to Q(B)");
}

void cmd_polarize(const RunConfig& cfg, Report& rep) {
  require_inputs(cfg, 1);
  const auto ideal = load_ideal(cfg.inputs[0]);
  const Polarization pol(ideal);
  const auto& z = pol.polarized();
  rep.line(z.to_string());
  rep.line("");
  std::vector<std::vector<std::string>> rows;
  Json lam = Json::array();
  for (std::size_t v = 0; v < z.num_vars(); ++v) {
    rows.push_back({z.var_names()[v], ideal.var_names()[pol.origin_of(v)], std::to_string(pol.copy_index_of(v))});
    Json j;
    j["var"] = z.var_names()[v];
    j["origin"] = ideal.var_names()[pol.origin_of(v)];
    j["copy"] = pol.copy_index_of(v);
    lam.push_back(j);
  }
  rep.table({"variable", "lambda^-1", "copy"}, rows);
  rep.json["polarized"] = ideal_to_json(z);
  rep.json["variables"] = lam;
  if (!cfg.check)
    return;
  rep.check("squarefree", z.is_squarefree());
  std::vector<Multidegree> back;
  for (const auto& g : z.generators())
    back.push_back(pol.lambda_inverse(g));
  rep.check("depolarizes", MonomialIdeal::minimalize(back, ideal.num_vars(), ideal.var_names()) == ideal);
  const auto map = polarization_lattice_map(pol);
  rep.check("gcd-preserving", map.gcd_preserving);
  const int tmax = static_cast<int>(ideal.lcm_all().total_degree());
  const auto qz = denominator(z, tmax, cfg.characteristic);
  const auto qx = denominator(ideal, tmax, cfg.characteristic);
  rep.check("denominator-transport", transport_denominator(qz, map).same_terms(qx));
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<void(const RunConfig&, Report&)>> table{
      {"q", cmd_q},
      {"poincare", cmd_poincare},
      {"deviations", cmd_deviations},
      {"candidates", cmd_candidates},
      {"verify-lcm", cmd_verify_lcm},
      {"taylor", cmd_complex},
      {"scarf", cmd_complex},
      {"koszul", cmd_complex},
      {"betti", cmd_betti},
      {"golod", cmd_golod},
      {"golod-generic", cmd_golod_generic},
      {"eagon", cmd_eagon},
      {"lattice-iso", cmd_lattice_iso},
      {"polarize", cmd_polarize},
  };
  auto it = table.find(cfg.command);
  if (it == table.end()) {
    err << "error: unknown subcommand '" << cfg.command << "'\n";
    return kExitInputError;
  }
  try {
    validate_characteristic(cfg.characteristic);
    if (cfg.jobs == 0)
      throw InputError("--jobs must be at least 1");
    Report rep;
    it->second(cfg, rep);
    rep.render(out, cfg.format);
    return rep.failed() ? kExitVerificationFailed : kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

} // namespace monores
