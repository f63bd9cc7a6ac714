#include "cli.hpp"

#include "vecinv/gltheory.hpp"
#include "vecinv/groebner.hpp"
#include "vecinv/kernelcalc.hpp"
#include "vecinv/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace vecinv::cli {

namespace {

using json = nlohmann::ordered_json;

struct Table {
  std::string name;
  json rows = json::array();
};

struct Verdict {
  std::string claim;
  bool pass;
  json witness_dims;
};

struct Report {
  std::string command;
  json params = json::object();
  std::vector<std::string> summary;
  std::vector<Table> tables;
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 4;
  int m = 3;
  std::optional<int> max_degree;
  std::string format = "text";
  std::optional<std::size_t> resource_cap;
  bool force = false;
  std::string group = "dihedral";
  std::optional<int> degree;
  bool presentation = false;
};

json partition_json(const Partition& p) { return p.parts(); }

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const Report& r, std::ostream& out) {
  for (const auto& line : r.summary) out << line << "\n";
  for (const auto& t : r.tables) {
    out << "\n[" << t.name << "]\n";
    if (t.rows.empty()) {
      out << "(empty)\n";
      continue;
    }
    if (!t.rows.front().is_object()) {
      std::string line;
      for (const auto& v : t.rows) line += (line.empty() ? "" : " ") + cell(v);
      out << line << "\n";
      continue;
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : t.rows.front().items()) keys.push_back(k);
    std::vector<std::size_t> width(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) width[i] = keys[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < keys.size(); ++i) width[i] = std::max(width[i], cell(row.at(keys[i])).size());
    auto emit = [&](auto get) {
      std::string line;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        std::string c = get(i);
        line += c;
        if (i + 1 < keys.size()) line += std::string(width[i] - c.size() + 2, ' ');
      }
      out << line << "\n";
    };
    emit([&](std::size_t i) { return keys[i]; });
    for (const auto& row : t.rows) emit([&](std::size_t i) { return cell(row.at(keys[i])); });
  }
  if (!r.verdicts.empty()) out << "\n";
  for (const auto& v : r.verdicts)
    out << (v.pass ? "PASS" : "FAIL") << "  " << v.claim << "  " << v.witness_dims.dump() << "\n";
}

void render_json(const Report& r, std::ostream& out) {
  json doc;
  doc["schema_version"] = "1";
  doc["command"] = r.command;
  doc["params"] = r.params;
  doc["tables"] = json::array();
  for (const auto& t : r.tables) doc["tables"].push_back({{"name", t.name}, {"rows", t.rows}});
  doc["verdicts"] = json::array();
  for (const auto& v : r.verdicts)
    doc["verdicts"].push_back({{"claim", v.claim}, {"status", v.pass ? "PASS" : "FAIL"}, {"witness_dims", v.witness_dims}});
  out << doc.dump(2) << "\n";
}

// ------------------------------------------------------------------ config

KernelConfig kernel_config(const RunConfig& cfg) {
  KernelConfig k;
  if (const char* env = std::getenv("VECINV_RESOURCE_CAP")) {
    try {
      k.resource_cap = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("VECINV_RESOURCE_CAP is not a number: ") + env);
    }
  }
  if (cfg.resource_cap) k.resource_cap = *cfg.resource_cap;
  return k;
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 3) throw UsageError("n must be at least 3 (got " + std::to_string(cfg.n) + ")");
  if (cfg.m < 1) throw UsageError("m must be at least 1 (got " + std::to_string(cfg.m) + ")");
}

// The truncation degree: 2n+2 unless raised explicitly with --force.
int degree_cap(const RunConfig& cfg) {
  int bound = default_degree_cap(cfg.n);
  int d = cfg.max_degree.value_or(bound);
  if (d < 0) throw UsageError("max degree must be non-negative");
  if (d > bound && !cfg.force)
    throw UsageError("max degree " + std::to_string(d) + " exceeds 2n+2 = " + std::to_string(bound) +
                     "; pass --force to go beyond");
  return d;
}

json base_params(const RunConfig& cfg) { return {{"n", cfg.n}, {"m", cfg.m}}; }

// ---------------------------------------------------------------- commands

Report relations_verify(const RunConfig& cfg) {
  validate(cfg);
  Report r{"relations verify", base_params(cfg), {}, {}, {}};
  Table t{"relations"};
  std::string line;
  auto named = named_relations(cfg.n, cfg.m);
  if (named.empty()) throw UsageError("no named relations exist for m = 1");
  for (const auto& [name, rel] : named) {
    Polynomial image = phi(rel);
    bool ok = image.is_zero();
    auto hw = is_highest_weight(rel);
    t.rows.push_back({{"relation", name},
                      {"degree", *rel.degree()},
                      {"weight", *rel.weight()},
                      {"terms", rel.poly().size()},
                      {"highest_weight", hw.has_value()},
                      {"phi", ok ? "0" : "nonzero"}});
    r.verdicts.push_back({"phi(" + name + ") = 0", ok, {{"terms", rel.poly().size()}, {"image_terms", image.size()}}});
    line += (line.empty() ? "" : ", ") + name + ": " + (ok ? "OK" : "FAIL");
  }
  r.summary.push_back(line);
  r.tables.push_back(std::move(t));
  return r;
}

Report kernel_dim(const RunConfig& cfg) {
  validate(cfg);
  int D = degree_cap(cfg);
  DihedralParams params(cfg.n, cfg.m);
  auto k = kernel_config(cfg);
  Report r{"kernel dim", base_params(cfg), {}, {}, {}};
  r.params["max_degree"] = D;
  Table t{"kernel_dimensions"};
  std::string line;
  for (int d = 0; d <= D; ++d) {
    std::size_t dim = kernel_component(params, d, k).dimension;
    t.rows.push_back({{"degree", d}, {"dimension", dim}});
    line += (line.empty() ? "" : ", ") + ("degree " + std::to_string(d) + ": " + std::to_string(dim));
  }
  r.summary.push_back(line);
  r.tables.push_back(std::move(t));
  return r;
}

Report kernel_basis(const RunConfig& cfg) {
  validate(cfg);
  int D = degree_cap(cfg);
  DihedralParams params(cfg.n, cfg.m);
  auto k = kernel_config(cfg);
  Report r{"kernel basis", base_params(cfg), {}, {}, {}};
  r.params["max_degree"] = D;
  Table t{"kernel_basis"};
  int lo = cfg.degree.value_or(0), hi = cfg.degree.value_or(D);
  if (cfg.degree && (*cfg.degree < 0 || *cfg.degree > D)) throw UsageError("--degree outside 0..max degree");
  for (int d = lo; d <= hi; ++d)
    for (const auto& alpha : compositions(d, cfg.m))
      for (const auto& b : kernel_component(params, alpha, k).basis)
        t.rows.push_back({{"degree", d}, {"multidegree", alpha}, {"element", b.to_string()}});
  r.summary.push_back(std::to_string(t.rows.size()) + " basis elements");
  r.tables.push_back(std::move(t));
  return r;
}

Report kernel_mingens(const RunConfig& cfg) {
  validate(cfg);
  int D = degree_cap(cfg);
  DihedralParams params(cfg.n, cfg.m);
  Report r{"kernel mingens", base_params(cfg), {}, {}, {}};
  r.params["max_degree"] = D;
  auto report = kernel_report(params, D, kernel_config(cfg));
  Table t{"minimal_generators"};
  std::string line;
  std::size_t sum = 0;
  for (const auto& [d, e] : report.per_degree) {
    t.rows.push_back({{"degree", d}, {"kernel_dimension", e.dimension}, {"new_generators", e.new_generators}});
    sum += e.new_generators;
    if (e.new_generators > 0)
      line += (line.empty() ? "" : ", ") + ("degree " + std::to_string(d) + ": " + std::to_string(e.new_generators));
  }
  line += (line.empty() ? "" : ", ") + ("total " + std::to_string(sum));
  r.summary.push_back(line);
  r.tables.push_back(std::move(t));
  return r;
}

Table decomposition_table(const std::string& name, const GradedDecomposition& g) {
  Table t{name};
  for (const auto& [d, dec] : g)
    for (const auto& [p, k] : dec.entries())
      t.rows.push_back({{"degree", d}, {"partition", partition_json(p)}, {"multiplicity", k}});
  return t;
}

Report decompose(const RunConfig& cfg, const std::string& which) {
  validate(cfg);
  int D = degree_cap(cfg);
  if (D > default_degree_cap(cfg.n))
    throw UsageError("decompositions are only available through degree 2n+2");
  Report r{"decompose " + which, base_params(cfg), {}, {}, {}};
  r.params["max_degree"] = D;
  GradedDecomposition g;
  if (which == "invariants") {
    g = invariants_truncated(cfg.n, cfg.m, D);
  } else if (which == "ambient") {
    g = ambient_truncated(cfg.n, cfg.m, D);
  } else if (cfg.presentation) {
    g = presentation_kernel_decomposition(cfg.n, cfg.m, D);
  } else {
    g = kernel_decomposition(cfg.n, cfg.m, D);
  }
  for (const auto& [d, dec] : g)
    r.summary.push_back("degree " + std::to_string(d) + ": " + dec.to_string() + "  (dim " +
                        std::to_string(dec.dimension()) + ")");
  r.tables.push_back(decomposition_table(which, g));
  return r;
}

Report hironaka_verify(const RunConfig& cfg) {
  validate(cfg);
  Report r{"hironaka verify", base_params(cfg), {}, {}, {}};
  HironakaSpec spec{DihedralParams(cfg.n, cfg.m), GroupKind::Dihedral, {}, {}};
  int default_d = 0;
  if (cfg.group != "dihedral" && cfg.group != "cyclic") throw UsageError("--group must be dihedral or cyclic");
  bool cyclic = cfg.group == "cyclic";
  if (cfg.m == 2 && !cyclic) {
    spec = m2_hironaka(cfg.n);
    default_d = 4 * cfg.n;
  } else if (cfg.n == 4 && cfg.m == 3) {
    spec = cyclic ? cyclic_m3_hironaka() : d8_m3_hironaka();
    default_d = 16;
  } else {
    throw UsageError("tabulated secondaries exist for m = 2 (dihedral) and for n = 4, m = 3");
  }
  int D = cfg.max_degree.value_or(default_d);
  r.params["group"] = cfg.group;
  r.params["max_degree"] = D;
  Table t{"secondary_s_generators"};
  for (const auto& [alpha, polys] : spec.secondaries_s) {
    json gens = json::array();
    for (const auto& f : polys) gens.push_back(f.to_string());
    t.rows.push_back({{"multidegree", alpha}, {"orbit", coset_representatives(alpha).size()}, {"generators", gens}});
  }
  auto rep = verify_hironaka(spec, D);
  Table s{"hilbert_identity"};
  for (int d = 0; d <= D; ++d)
    s.rows.push_back({{"degree", d},
                      {"predicted", rep.predicted_series[static_cast<std::size_t>(d)]},
                      {"invariants", rep.invariant_series[static_cast<std::size_t>(d)]}});
  json w = {{"expanded_secondaries", rep.expanded_count}, {"primaries", spec.primaries.size()}};
  r.verdicts.push_back({"secondaries are invariant", rep.invariance, w});
  r.verdicts.push_back({"independent modulo primaries", rep.independence, w});
  r.verdicts.push_back({"Hilbert identity through degree " + std::to_string(D), rep.hilbert_match, w});
  r.summary.push_back(std::string("Hironaka decomposition: ") + (rep.passed() ? "verified" : "FAILED") + " (|L*| = " +
                      std::to_string(rep.expanded_count) + ")");
  for (const auto& f : rep.failures) r.summary.push_back("  " + f);
  r.tables.push_back(std::move(t));
  r.tables.push_back(std::move(s));
  return r;
}

Report hilbert(const RunConfig& cfg) {
  if (cfg.n < 3) throw UsageError("n must be at least 3 (got " + std::to_string(cfg.n) + ")");
  int D = cfg.max_degree.value_or(default_degree_cap(cfg.n));
  if (D < 0) throw UsageError("max degree must be non-negative");
  Report r{"hilbert", {{"n", cfg.n}, {"max_degree", D}}, {}, {}, {}};
  Table t{"coefficients"};
  std::string line;
  for (long h : hilbert_series(cfg.n, D)) {
    t.rows.push_back(h);
    line += (line.empty() ? "" : " ") + std::to_string(h);
  }
  r.summary.push_back(line);
  r.tables.push_back(std::move(t));
  return r;
}

Report groebner_demo() {
  Report r{"groebner demo", {{"order", "lex, x < y"}}, {}, {}, {}};
  auto u = VariableUniverse::xy(1);
  auto x = Polynomial::variable(u, u->x_index(0));
  auto y = Polynomial::variable(u, u->y_index(0));
  auto order = MonomialOrder::lex({static_cast<std::uint32_t>(u->y_index(0)), static_cast<std::uint32_t>(u->x_index(0))});
  std::vector<Polynomial> gens{x * y, x.pow(4) + y.pow(4)};
  auto basis = buchberger(gens, order);
  Table t{"groebner_basis"};
  std::vector<Monomial> leading;
  for (const auto& g : basis) {
    auto lt = leading_term(g, order);
    leading.push_back(lt.monomial);
    t.rows.push_back({{"element", g.to_string()}, {"leading", monomial_to_string(lt.monomial, *u)}});
  }
  std::vector<Polynomial> expected{x.pow(5), x * y, x.pow(4) + y.pow(4)};
  bool basis_ok = basis == expected;
  auto staircase = standard_monomials(leading, u->size(), 8);
  std::vector<long> counts(9, 0);
  for (const auto& mono : staircase) ++counts[mono.degree()];
  std::vector<long> want{1, 2, 2, 2, 1, 0, 0, 0, 0};
  Table s{"staircase"};
  for (long c : counts) s.rows.push_back(c);
  r.verdicts.push_back({"basis = {x^5, x*y, x^4 + y^4}", basis_ok, {{"basis_size", basis.size()}}});
  r.verdicts.push_back({"standard monomials count (1+t)(1+t+t^2+t^3)", counts == want, {{"standard", staircase.size()}}});
  std::string line = "basis:";
  for (const auto& g : basis) line += " [" + g.to_string() + "]";
  r.summary.push_back(line);
  r.tables.push_back(std::move(t));
  r.tables.push_back(std::move(s));
  return r;
}

Report report_all(const RunConfig& cfg) {
  if (cfg.n < 3) throw UsageError("n must be at least 3 (got " + std::to_string(cfg.n) + ")");
  const int n = cfg.n;
  const int D = default_degree_cap(n);
  Report r{"report all", {{"n", n}, {"max_degree", D}}, {}, {}, {}};
  auto k = kernel_config(cfg);

  for (int m : {2, 3}) {
    for (const auto& [name, rel] : named_relations(n, m)) {
      bool zero = phi(rel).is_zero();
      auto hw = is_highest_weight(rel);
      std::size_t sub = submodule_basis(rel).size();
      long dim = hw ? schur_dim(Partition(*hw), m) : -1;
      r.verdicts.push_back({"m=" + std::to_string(m) + " " + name + ": phi = 0, highest weight, module dimension",
                            zero && hw && static_cast<long>(sub) == dim,
                            {{"submodule", sub}, {"schur_dim", dim}}});
    }
    auto rep = kernel_report(DihedralParams(n, m), D, k);
    Table t{"minimal_generators_m" + std::to_string(m)};
    std::size_t total_new = 0;
    std::string line;
    for (const auto& [d, e] : rep.per_degree) {
      t.rows.push_back({{"degree", d}, {"kernel_dimension", e.dimension}, {"new_generators", e.new_generators}});
      total_new += e.new_generators;
      if (e.new_generators) line += (line.empty() ? "" : ", ") + ("degree " + std::to_string(d) + ": " + std::to_string(e.new_generators));
    }
    r.summary.push_back("m=" + std::to_string(m) + " minimal generators: " + line + ", total " + std::to_string(total_new));
    r.tables.push_back(std::move(t));

    auto pk = presentation_kernel_decomposition(n, m, D);
    bool agree = true;
    json dims = json::object();
    for (const auto& [d, e] : rep.per_degree) {
      long rt = pk.at(d).dimension();
      dims[std::to_string(d)] = {e.dimension, rt};
      agree = agree && rt == static_cast<long>(e.dimension);
    }
    r.verdicts.push_back({"m=" + std::to_string(m) + " kernel dimensions: linear algebra = representation theory", agree, dims});
  }

  r.tables.push_back(decomposition_table("ambient", ambient_truncated(n, 3, D)));
  r.tables.push_back(decomposition_table("invariants", invariants_truncated(n, 3, D)));
  r.tables.push_back(decomposition_table("kernel", kernel_decomposition(n, 3, D)));

  auto add_hironaka = [&](const std::string& label, const HironakaSpec& spec, int deg) {
    auto rep = verify_hironaka(spec, deg);
    r.verdicts.push_back({label, rep.passed(), {{"expanded_secondaries", rep.expanded_count}, {"degree", deg}}});
  };
  add_hironaka("Hironaka decomposition m=2", m2_hironaka(n), 4 * n);
  if (n == 4) {
    add_hironaka("Hironaka decomposition m=3 (cyclic subgroup)", cyclic_m3_hironaka(), 16);
    add_hironaka("Hironaka decomposition m=3", d8_m3_hironaka(), 16);
  }
  Table h{"hilbert"};
  for (long c : hilbert_series(n, D)) h.rows.push_back(c);
  r.tables.push_back(std::move(h));
  r.summary.push_back(std::string("overall: ") + (r.all_pass() ? "all claims verified" : "FAILURES present"));
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dihedral vector invariants: presentations, syzygies and Hironaka decompositions", "vecinv"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* c, bool with_m, bool with_degree) {
    c->add_option("--n", cfg.n, "order parameter of D_2n (n >= 3)");
    if (with_m) c->add_option("--m", cfg.m, "number of vector variables");
    if (with_degree) {
      c->add_option("--max-degree", cfg.max_degree, "truncation degree (default 2n+2)");
      c->add_flag("--force", cfg.force, "allow degrees beyond 2n+2");
    }
    c->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--resource-cap", cfg.resource_cap, "largest component basis to attempt");
  };

  auto* relations = app.add_subcommand("relations", "named relations of the presentation");
  relations->require_subcommand(1);
  auto* rel_verify = relations->add_subcommand("verify", "check that every named relation maps to zero");
  common(rel_verify, true, false);

  auto* kernel = app.add_subcommand("kernel", "kernel of the presentation map");
  kernel->require_subcommand(1);
  auto* k_dim = kernel->add_subcommand("dim", "kernel dimension per degree");
  auto* k_basis = kernel->add_subcommand("basis", "kernel basis per multidegree");
  auto* k_min = kernel->add_subcommand("mingens", "minimal ideal generator counts");
  for (auto* c : {k_dim, k_basis, k_min}) common(c, true, true);
  k_basis->add_option("--degree", cfg.degree, "restrict to one total degree");

  auto* decomp = app.add_subcommand("decompose", "GL_m-module decompositions");
  decomp->require_subcommand(1);
  auto* d_inv = decomp->add_subcommand("invariants", "invariant ring");
  auto* d_amb = decomp->add_subcommand("ambient", "D-bar tensor E");
  auto* d_ker = decomp->add_subcommand("kernel", "kernel of the reduced presentation");
  for (auto* c : {d_inv, d_amb, d_ker}) common(c, true, true);
  d_ker->add_flag("--presentation", cfg.presentation, "include the height-3 part of S(S^2)");

  auto* hir = app.add_subcommand("hironaka", "Hironaka decompositions");
  hir->require_subcommand(1);
  auto* h_verify = hir->add_subcommand("verify", "verify a tabulated secondary system");
  common(h_verify, true, false);
  h_verify->add_option("--max-degree", cfg.max_degree, "verification degree (default 4n for m = 2, 16 for m = 3)");
  h_verify->add_option("--group", cfg.group, "dihedral or cyclic");

  auto* hil = app.add_subcommand("hilbert", "Hilbert series of C[x,y]^{D_2n}");
  common(hil, false, false);
  hil->add_option("--max-degree", cfg.max_degree, "last coefficient (default 2n+2)");

  auto* gb = app.add_subcommand("groebner", "Groebner basis fixture");
  gb->require_subcommand(1);
  auto* gb_demo = gb->add_subcommand("demo", "basis of (xy, x^4+y^4) for lex with x < y");
  gb_demo->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* rep = app.add_subcommand("report", "one-shot reproduction runs");
  rep->require_subcommand(1);
  auto* rep_all = rep->add_subcommand("all", "all tables for one n");
  common(rep_all, false, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "vecinv: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Report r;
    if (*rel_verify) r = relations_verify(cfg);
    else if (*k_dim) r = kernel_dim(cfg);
    else if (*k_basis) r = kernel_basis(cfg);
    else if (*k_min) r = kernel_mingens(cfg);
    else if (*d_inv) r = decompose(cfg, "invariants");
    else if (*d_amb) r = decompose(cfg, "ambient");
    else if (*d_ker) r = decompose(cfg, "kernel");
    else if (*h_verify) r = hironaka_verify(cfg);
    else if (*hil) r = hilbert(cfg);
    else if (*gb_demo) r = groebner_demo();
    else if (*rep_all) r = report_all(cfg);
    else throw UsageError("no command");
    if (cfg.format == "json") render_json(r, out);
    else render_text(r, out);
    return r.all_pass() ? kPass : kVerificationFailure;
  } catch (const UsageError& e) {
    err << "vecinv: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "vecinv: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "vecinv: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace vecinv::cli
