#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "nilorb/combinatorics.hpp"
#include "nilorb/decomposition.hpp"
#include "nilorb/dynkin.hpp"
#include "nilorb/error.hpp"
#include "nilorb/exceptional.hpp"
#include "nilorb/orbit_invariants.hpp"
#include "nilorb/springer.hpp"
#include "nilorb/verify.hpp"
#include "render.hpp"

namespace nilorb::cli {
namespace {

using json = nlohmann::json;

json group_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"kind", g.kind_name()}, {"label", g.label()}};
}

json parts_json(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

json subset_json(const SubsetJ& j) { return json(std::vector<int>(j.elements().begin(), j.elements().end())); }

json roots_json(const RootSet& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back({r.i, r.j});
  return a;
}

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Two-column "key  value" lines for text mode.
class TextBlock {
 public:
  explicit TextBlock(std::ostream& out) : out_(out) {}
  template <typename T>
  TextBlock& row(std::string_view key, const T& value) {
    out_ << std::left << std::setw(22) << key << value << '\n';
    return *this;
  }
  TextBlock& raw(const std::string& text) {
    out_ << text;
    return *this;
  }

 private:
  std::ostream& out_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string poincare_text(const std::vector<std::uint64_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0 || c[d] != 1) os << c[d];
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
  }
  return first ? "0" : os.str();
}

struct OrbitArgs {
  std::string type;
  int rank = 0;
  std::string j;
  std::string partition;
  std::string format = "json";
};

struct PavingArgs {
  std::string partition;
  bool cells = false;
  int bound = EnumerationOptions{}.bound;
  std::string format = "json";
};

struct DecomposeArgs {
  int rank = 0;
  int bound = kDefaultSummandBound;
  std::string format = "json";
};

struct TablesArgs {
  std::string type;
  std::string edition = "corrected";
  bool validate = false;
  std::string format = "json";
};

struct VerifyArgs {
  int max_rank = VerifyOptions{}.max_rank;
  int bound = VerifyOptions{}.paving_bound;
  std::string format = "text";
};

int run_orbit(const OrbitArgs& a, bool rank_given, bool j_given, bool partition_given, std::ostream& out) {
  if (j_given == partition_given) throw InputError("orbit needs exactly one of --j or --partition");
  const LieType type = LieType::parse(a.type, rank_given ? std::optional<int>(a.rank) : std::nullopt);

  json o;
  o["type"] = type.name();
  o["rank"] = type.rank();
  o["center_fiber_extension"] = center_fiber_is_extension(type);

  std::optional<SubsetJ> j;
  if (j_given) {
    j = SubsetJ::parse(a.j, type.rank());
  } else {
    if (!type.is_classical()) {
      throw UnsupportedFamilyError("--partition is accepted for types A-D only; use --j for " + type.name());
    }
    const auto p = Partition::parse(a.partition);
    require_orbit_partition(type, p);
    j = find_subset_for_partition(type, p);
    if (!j) {
      // The orbit is real but no torus orbit lands in it.
      const auto fg = fundamental_groups(type, p);
      o["j_set"] = nullptr;
      o["j_set_derived"] = false;
      o["partition"] = parts_json(p);
      o["very_even"] = p.very_even();
      o["orbit_label_ambiguous"] = type.family() == Family::D && p.very_even();
      o["z_j"] = nullptr;
      o["pi1"] = group_json(fg.pi1);
      o["a_group"] = group_json(fg.a);
      o["kernel_identity_holds"] = nullptr;
    }
  }

  Partition shape;
  if (j) {
    o["j_set"] = subset_json(*j);
    o["j_set_derived"] = !j_given;
    const auto z = center_fiber(type, *j);
    o["z_j"] = group_json(z);
    if (type.is_classical()) {
      const auto orbit = orbit_partition(type, *j);
      const auto fg = fundamental_groups(type, orbit.partition);
      shape = orbit.partition;
      o["partition"] = parts_json(orbit.partition);
      o["very_even"] = orbit.very_even;
      o["orbit_label_ambiguous"] = orbit.orbit_label_ambiguous;
      o["pi1"] = group_json(fg.pi1);
      o["a_group"] = group_json(fg.a);
      o["kernel_identity_holds"] = kernel_check(type, *j).holds;
    } else if (type.family() == Family::E6 || type.family() == Family::E7) {
      const auto& rec = table_lookup(type, *j);
      o["partition"] = nullptr;
      o["very_even"] = nullptr;
      o["orbit_label_ambiguous"] = false;
      o["bala_carter"] = rec.bala_carter;
      o["pi1"] = group_json(rec.pi1);
      o["a_group"] = group_json(rec.a_group());
      o["kernel_identity_holds"] = z.order() * rec.a_group().order() == rec.pi1.order();
    } else {
      o["partition"] = nullptr;
      o["very_even"] = nullptr;
      o["orbit_label_ambiguous"] = false;
      o["pi1"] = nullptr;
      o["a_group"] = nullptr;
      o["kernel_identity_holds"] = nullptr;
    }
    if (type.is_simply_laced()) {
      o["sub_diagram"] = classify_subdiagram(DynkinDiagram::of(type), j->complement()).render();
    }
  } else {
    shape = Partition::parse(a.partition);
  }

  if (type.family() == Family::A) {
    const auto dim = orbit_dimension_typeA(type.rank(), shape);
    o["orbit_dimension"] = dim;
    o["d_x"] = (std::int64_t{type.rank()} * (type.rank() + 1) - dim) / 2;
  }

  if (a.format == "json") {
    emit(out, o);
    return kOk;
  }

  auto group_text = [&](const json& g) -> std::string {
    if (g.is_null()) return "n/a";
    return g["label"].get<std::string>() + "  (order " + std::to_string(g["order"].get<std::uint64_t>()) + ")";
  };
  TextBlock t(out);
  t.row("type", type.name());
  if (o["j_set"].is_null()) {
    t.row("J", "none: no torus orbit meets this orbit");
  } else {
    t.row("J", j->to_string() + (j_given ? "" : "  (found by search)"));
  }
  if (o.contains("sub_diagram")) t.row("sub-diagram", o["sub_diagram"].get<std::string>());
  if (o.contains("bala_carter")) t.row("Bala-Carter", o["bala_carter"].get<std::string>());
  if (!o["partition"].is_null()) {
    t.row("partition", shape.to_string());
    t.raw(young_diagram(shape));
    t.row("very even", yes_no(shape.very_even()));
    if (o["orbit_label_ambiguous"].get<bool>()) t.row("note", "very even: the label names two orbits");
  }
  t.row("Z(J)", group_text(o["z_j"]));
  t.row("pi_1(O)", group_text(o["pi1"]));
  t.row("A(O)", group_text(o["a_group"]));
  if (!o["kernel_identity_holds"].is_null()) {
    t.row("|Z(J)|*|A| = |pi_1|", o["kernel_identity_holds"].get<bool>() ? "holds" : "FAILS");
  }
  if (o["center_fiber_extension"].get<bool>()) t.row("note", "trivial center; Z(J) is trivial by convention");
  if (o.contains("orbit_dimension")) {
    t.row("dim O", o["orbit_dimension"].get<std::int64_t>());
    t.row("d_x", o["d_x"].get<std::int64_t>());
  }
  return kOk;
}

int run_paving(const PavingArgs& a, std::ostream& out) {
  const auto p = Partition::parse(a.partition);
  EnumerationOptions eo;
  eo.bound = a.bound;
  eo.keep_cells = a.cells;
  const auto paving = enumerate_cells(p, eo);

  const int m = p.total();
  const int d_x = max_cell_dimension(p);
  const auto data = labeled_diagrams(p);
  const auto phi_sigma = phi_w(data.sigma);
  const auto phi_sigma_x = phi_w_x(data.sigma, p);

  json o;
  o["partition"] = parts_json(p);
  o["n"] = m - 1;
  o["d_x"] = d_x;
  o["orbit_dimension"] = orbit_dimension_typeA(m - 1, p);
  o["cell_count"] = paving.cell_count();
  o["multinomial"] = to_u64(multinomial(p));
  o["poincare"] = paving.poincare;
  o["top_cell_count"] = paving.top_cell_count();
  o["syt_count"] = to_u64(syt_count(p));
  o["tym"] = data.tym.rows();
  o["std"] = data.standard.rows();
  o["sigma"] = {{"cycles", data.sigma.cycle_notation()},
                {"one_line", std::vector<int>(data.sigma.one_line().begin(), data.sigma.one_line().end())}};
  o["m_tym"] = pair_matrix(data.tym).to_unit_sum();
  o["m_std"] = pair_matrix(data.standard).to_unit_sum();
  o["phi_x"] = roots_json(phi_x(p));
  o["phi_sigma"] = roots_json(phi_sigma);
  o["phi_sigma_x"] = roots_json(phi_sigma_x);
  if (a.cells) {
    json cells = json::array();
    for (const auto& c : paving.cells) {
      cells.push_back({{"w", std::vector<int>(c.w.one_line().begin(), c.w.one_line().end())},
                       {"dimension", c.dimension}});
    }
    o["cells"] = std::move(cells);
  }

  if (a.format == "json") {
    emit(out, o);
    return kOk;
  }

  TextBlock t(out);
  t.row("partition", p.to_string() + "  (n = " + std::to_string(m - 1) + ")");
  t.row("Y^Tym", "").raw(labeled_diagram(data.tym));
  t.row("Y^Std", "").raw(labeled_diagram(data.standard));
  t.row("sigma", data.sigma.cycle_notation());
  t.row("M^Tym", o["m_tym"].get<std::string>());
  t.row("M^Std", o["m_std"].get<std::string>());
  t.row("Phi_x", render_roots(phi_x(p)));
  t.row("Phi_sigma", render_roots(phi_sigma));
  t.row("Phi_sigma,x", render_roots(phi_sigma_x));
  t.row("dim A_x = d_x", d_x);
  t.row("dim O_x", o["orbit_dimension"].get<std::int64_t>());
  t.row("cells", std::to_string(paving.cell_count()) + "  (multinomial " + multinomial(p).str() + ")");
  t.row("top cells", std::to_string(paving.top_cell_count()) + "  (SYT " + syt_count(p).str() + ")");
  t.row("Poincare polynomial", poincare_text(paving.poincare));
  if (a.cells) {
    for (const auto& c : paving.cells) {
      std::ostringstream w;
      for (int v : c.w.one_line()) w << v;
      t.row("  dim " + std::to_string(c.dimension), w.str() + "  " + c.w.cycle_notation());
    }
  }
  return kOk;
}

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
  const auto records = summand_report(a.rank, a.bound);
  json recs = json::array();
  std::size_t total = 0;
  for (const auto& r : records) {
    total += r.characters.size();
    recs.push_back({{"partition", parts_json(r.partition)},
                    {"orbit_dimension", r.orbit_dimension},
                    {"d_x", r.fiber_dimension},
                    {"c", r.c},
                    {"characters", r.characters},
                    {"multiplicity_known", r.multiplicity_known}});
  }
  if (a.format == "json") {
    emit(out, {{"rank", a.rank}, {"record_count", records.size()}, {"total_characters", total}, {"records", recs}});
    return kOk;
  }
  out << "sl_" << a.rank + 1 << ": " << records.size() << " orbits, " << total
      << " (orbit, character) summands, multiplicities >= 1\n";
  out << std::left << std::setw(16) << "partition" << std::setw(8) << "dim O" << std::setw(6) << "d_x"
      << std::setw(4) << "c" << "characters k of Z/c\n";
  for (const auto& r : records) {
    std::ostringstream ks;
    for (std::size_t i = 0; i < r.characters.size(); ++i) ks << (i ? " " : "") << r.characters[i];
    out << std::left << std::setw(16) << r.partition.to_string() << std::setw(8) << r.orbit_dimension
        << std::setw(6) << r.fiber_dimension << std::setw(4) << r.c << ks.str() << '\n';
  }
  return kOk;
}

LieType table_type(const std::string& text) {
  const auto type = LieType::parse(text, std::nullopt);
  if (type.family() != Family::E6 && type.family() != Family::E7) {
    throw UnsupportedFamilyError("orbit tables exist for E6 and E7 only, not " + type.name());
  }
  return type;
}

int run_tables(const TablesArgs& a, std::ostream& out) {
  const auto type = table_type(a.type);
  const auto edition = a.edition == "printed" ? TableEdition::as_printed : TableEdition::corrected;

  if (!a.validate) {
    const auto& records = orbit_table(type, edition);
    if (a.format == "text") {
      out << dump_tsv(records);
      return kOk;
    }
    json recs = json::array();
    for (const auto& r : records) {
      json js = json::array();
      for (const auto& j : r.j_sets) js.push_back(subset_json(j));
      recs.push_back({{"bala_carter", r.bala_carter},
                      {"base_label", r.base_label.render()},
                      {"j_sets", js},
                      {"z", group_json(r.z_orbit)},
                      {"pi1", group_json(r.pi1)},
                      {"a_group", group_json(r.a_group())}});
    }
    emit(out, {{"type", type.name()}, {"edition", a.edition}, {"records", recs}});
    return kOk;
  }

  const auto v = validate_tables(type, edition);
  json errata = json::array();
  for (const auto& e : table_errata(type.family())) {
    errata.push_back({{"j", subset_json(erratum_subset(e, type.rank()))},
                      {"printed_in", e.printed_in.empty() ? json(nullptr) : json(std::string(e.printed_in))},
                      {"belongs_to", e.belongs_to.empty() ? json(nullptr) : json(std::string(e.belongs_to))}});
  }
  if (a.format == "json") {
    json checks = json::array();
    for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failures", c.failures}});
    json flagged = json::array();
    for (auto mask : v.flagged_subsets) flagged.push_back(subset_json(SubsetJ::from_mask(mask, type.rank())));
    emit(out, {{"type", v.type},
               {"edition", a.edition},
               {"records", v.records},
               {"subsets", v.subsets},
               {"checks", checks},
               {"flagged_subsets", flagged},
               {"errata", errata},
               {"ok", v.ok()}});
  } else {
    out << v.type << " (" << a.edition << "): " << v.records << " records, " << v.subsets << " subsets\n";
    for (const auto& c : v.checks) {
      out << "  " << std::left << std::setw(20) << c.name << std::setw(6) << c.checked
          << (c.passed() ? "ok" : std::to_string(c.failures.size()) + " failure(s)") << '\n';
      for (const auto& f : c.failures) out << "    - " << f << '\n';
    }
    out << (v.ok() ? "valid\n" : "INVALID\n");
  }
  return v.ok() ? kOk : kVerificationFailed;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.max_rank < 1 || a.max_rank > 10) throw InputError("--max-rank must be in [1, 10]");
  if (a.bound < 1 || a.bound > kMaxEnumerationBound) {
    throw InputError("--bound must be in [1, " + std::to_string(kMaxEnumerationBound) + "]");
  }
  VerifyOptions options;
  options.max_rank = a.max_rank;
  options.paving_bound = a.bound;
  const auto report = verify_all(options);

  if (a.format == "json") {
    json suites = json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
    }
    emit(out, {{"ok", report.ok()}, {"total_checks", report.total_checks()}, {"suites", suites}});
  } else {
    for (const auto& s : report.suites) {
      out << std::left << std::setw(22) << s.name << std::right << std::setw(8) << s.checks << " checks  "
          << (s.passed() ? "ok" : std::to_string(s.failures.size()) + " FAILED") << '\n';
      for (const auto& f : s.failures) out << "    - " << f << '\n';
    }
    out << report.total_checks() << " checks, " << (report.ok() ? "all passed" : "FAILURES") << '\n';
  }
  return report.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbits, toric strata and Springer fiber pavings"};
  app.name("nilorb");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "text"});

  OrbitArgs oa;
  auto* orbit = app.add_subcommand("orbit", "Invariants of the orbit through a torus stratum or partition");
  orbit->add_option("--type", oa.type, "A, B, C, D, E6, E7, E8, F4 or G2")->required();
  auto* orbit_rank = orbit->add_option("--rank", oa.rank, "Rank (classical families)");
  auto* orbit_j = orbit->add_option("--j", oa.j, "Subset J, ascending, e.g. 2,4");
  auto* orbit_p = orbit->add_option("--partition", oa.partition, "Partition, descending, e.g. 3,3,1");
  orbit_j->excludes(orbit_p);
  orbit->add_option("--format", oa.format)->check(formats);

  PavingArgs pa;
  auto* paving = app.add_subcommand("paving", "Tymoczko paving of the type A Springer fiber");
  paving->add_option("--partition", pa.partition, "Partition, descending")->required();
  paving->add_flag("--cells", pa.cells, "List every cell");
  paving->add_option("--bound", pa.bound, "Largest partition total to enumerate");
  paving->add_option("--format", pa.format)->check(formats);

  DecomposeArgs da;
  auto* decompose = app.add_subcommand("decompose", "Summands of the pushforward from Graham's variety, type A");
  decompose->add_option("--rank", da.rank)->required();
  decompose->add_option("--bound", da.bound, "Largest rank accepted");
  decompose->add_option("--format", da.format)->check(formats);

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "E6/E7 orbit tables: dump or validate");
  tables->add_option("--type", ta.type)->required();
  tables->add_option("--edition", ta.edition)->check(CLI::IsMember({"corrected", "printed"}));
  tables->add_flag("--validate", ta.validate);
  tables->add_option("--format", ta.format, "json, or text for TSV / a report")->check(formats);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run every cross-check suite");
  verify->add_option("--max-rank", va.max_rank, "Largest classical rank swept");
  verify->add_option("--bound", va.bound, "Largest partition total for the paving suite");
  verify->add_option("--format", va.format)->check(formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "nilorb: " << msg << '\n';
    return kInputError;
  }

  try {
    if (orbit->parsed()) return run_orbit(oa, orbit_rank->count() > 0, orbit_j->count() > 0, orbit_p->count() > 0, out);
    if (paving->parsed()) return run_paving(pa, out);
    if (decompose->parsed()) return run_decompose(da, out);
    if (tables->parsed()) return run_tables(ta, out);
    if (verify->parsed()) return run_verify(va, out);
  } catch (const InputError& e) {
    err << "nilorb: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "nilorb: " << e.what() << '\n';
    return kResourceError;
  } catch (const DataIntegrityError& e) {
    err << "nilorb: internal consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace nilorb::cli
