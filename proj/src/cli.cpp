#include "foxcolor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/errors.hpp"
#include "foxcolor/orbits.hpp"
#include "foxcolor/serialize.hpp"

namespace foxcolor {
namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;

struct Target {
  std::string name;  // catalog name, or "custom"
  PlanarDiagram diagram;
};

bool is_catalog_name(const std::string& text) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), text) != names.end();
}

PdCode parse_source(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InputError(std::string("malformed diagram JSON: ") + e.what());
    }
    return pd_from_json(j);
  }
  return parse_pd(text);
}

Target resolve_target(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {"custom", PlanarDiagram(parse_source(text))};
  }
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream file(spec.substr(1));
    if (!file) throw InputError("cannot read " + spec.substr(1));
    std::stringstream buf;
    buf << file.rdbuf();
    return {"custom", PlanarDiagram(parse_source(buf.str()))};
  }
  if (is_catalog_name(spec)) return {spec, PlanarDiagram(catalog(spec))};
  return {"custom", PlanarDiagram(parse_source(spec))};
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_fields(std::ostream& out,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
  std::size_t width = 0;
  for (const auto& [key, _] : fields) width = std::max(width, key.size() + 1);
  for (const auto& [key, value] : fields) {
    out << key << ':' << std::string(width - key.size(), ' ') << value << '\n';
  }
}

template <typename Range>
std::string join(const Range& values, const std::string& sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << sep;
    s << v;
    first = false;
  }
  return s.str();
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string target;
  int modulus = 0;
};

int cmd_analyze(const AnalyzeArgs& a, bool json, std::istream& in, std::ostream& out) {
  const auto t = resolve_target(a.target, in);
  const auto& d = t.diagram;
  const ColoringProfile profile(d);
  const auto& factors = profile.invariant_factors();

  if (json) {
    Json j{{"knot", t.name},
           {"diagram", pd_json(d.pd())},
           {"crossings", d.crossing_count()},
           {"arcs", d.arc_count()},
           {"components", d.component_count()},
           {"arc_ids", d.arc_ids()},
           {"determinant", integer_json(profile.determinant())}};
    Json f = Json::array();
    for (const auto& v : factors) f.push_back(integer_json(v));
    j["invariant_factors"] = f;
    j["coloring_matrix"] = matrix_json(d.crossing_count() == 0 ? IntegerMatrix(0, 1)
                                                               : coloring_matrix(d).matrix);
    if (a.modulus) {
      j["modulus"] = a.modulus;
      j["nullity"] = profile.zeros_mod(a.modulus);
      j["colorings"] = integer_json(profile.colorings(a.modulus));
    }
    emit_json(out, j);
    return kExitOk;
  }

  std::vector<std::pair<std::string, std::string>> fields{
      {"knot", t.name},
      {"crossings", std::to_string(d.crossing_count())},
      {"arcs", std::to_string(d.arc_count())},
      {"components", std::to_string(d.component_count())},
      {"invariant factors", join(factors)},
      {"determinant", profile.determinant().str()},
  };
  if (a.modulus) {
    fields.emplace_back("modulus", std::to_string(a.modulus));
    fields.emplace_back("nullity", std::to_string(profile.zeros_mod(a.modulus)));
    fields.emplace_back("colorings", profile.colorings(a.modulus).str());
  }
  print_fields(out, fields);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ClassesArgs {
  std::string target;
  int modulus = 0;
  std::string group = "aut";
  std::uint64_t budget = kDefaultEnumerationBudget;
};

int cmd_classes(const ClassesArgs& a, bool json, std::istream& in, std::ostream& out) {
  const auto kind = parse_group_kind(a.group);
  const auto t = resolve_target(a.target, in);
  const auto& d = t.diagram;
  const auto group = build_group(kind, a.modulus);
  const auto colorings = enumerate_colorings(d, a.modulus, true, a.budget);
  const auto partition = orbit_partition(colorings, group);

  if (json) {
    Json classes = Json::array();
    for (const auto& o : partition.orbits) {
      classes.push_back({{"size", o.size}, {"representative", coloring_json(d, o.representative)}});
    }
    emit_json(out, Json{{"knot", t.name},
                        {"modulus", a.modulus},
                        {"group", std::string(to_string(kind))},
                        {"group_order", group.elements.size()},
                        {"class_count", partition.class_count()},
                        {"orbit_sizes", partition.orbit_sizes()},
                        {"classes", classes}});
    return kExitOk;
  }

  print_fields(out, {{"knot", t.name},
                     {"modulus", std::to_string(a.modulus)},
                     {"group", std::string(to_string(kind))},
                     {"group order", std::to_string(group.elements.size())},
                     {"classes", std::to_string(partition.class_count())},
                     {"orbit sizes", partition.orbits.empty() ? "-" : join(partition.orbit_sizes())}});
  if (partition.orbits.empty()) return kExitOk;
  out << '\n';
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"class", "size"};
  for (int id : d.arc_ids()) header.push_back("a" + std::to_string(id));
  rows.push_back(std::move(header));
  for (std::size_t i = 0; i < partition.orbits.size(); ++i) {
    const auto& o = partition.orbits[i];
    std::vector<std::string> row{std::to_string(i + 1), std::to_string(o.size)};
    for (int v : o.representative.values) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  print_table(out, rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string target;
  int modulus = 0;
  bool nontrivial = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

int cmd_enumerate(const EnumerateArgs& a, bool json, std::istream& in, std::ostream& out) {
  const auto t = resolve_target(a.target, in);
  const auto& d = t.diagram;
  const auto colorings = enumerate_colorings(d, a.modulus, a.nontrivial, a.budget);

  if (json) {
    Json list = Json::array();
    for (const auto& c : colorings) list.push_back(coloring_json(d, c));
    emit_json(out, Json{{"knot", t.name},
                        {"modulus", a.modulus},
                        {"nontrivial_only", a.nontrivial},
                        {"count", colorings.size()},
                        {"colorings", list}});
    return kExitOk;
  }

  print_fields(out, {{"knot", t.name},
                     {"modulus", std::to_string(a.modulus)},
                     {"count", std::to_string(colorings.size())}});
  if (colorings.empty()) return kExitOk;
  out << '\n';
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"#"};
  for (int id : d.arc_ids()) header.push_back("a" + std::to_string(id));
  rows.push_back(std::move(header));
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (int v : colorings[i].values) row.push_back(std::to_string(v));
    rows.push_back(std::move(row));
  }
  print_table(out, rows);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  std::vector<int> primes{3, 5, 7, 11};
  int moves = 3;
  std::uint64_t seed = kDefaultSeed;
  bool r3 = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

bool counts_pass(const VariantCounts& v, const VerifyReport& r) {
  const std::size_t aut_order = static_cast<std::size_t>(r.p) * (r.p - 1);
  const std::size_t inn_order = 2 * static_cast<std::size_t>(r.p);
  return Integer(v.aut_classes) == r.predicted_aut &&
         Integer(v.inn_classes) == r.predicted_inn &&
         std::all_of(v.aut_orbit_sizes.begin(), v.aut_orbit_sizes.end(),
                     [&](std::size_t s) { return s == aut_order; }) &&
         std::all_of(v.inn_orbit_sizes.begin(), v.inn_orbit_sizes.end(),
                     [&](std::size_t s) { return s == inn_order; }) &&
         v.nullity == r.base.nullity;
}

int cmd_verify(const VerifyArgs& a, bool json, std::istream& in, std::ostream& out) {
  if (a.moves < 0) throw InputError("--moves must be non-negative");
  for (int p : a.primes) {
    if (!is_odd_prime(p)) throw InputError(std::to_string(p) + " is not an odd prime");
  }
  const auto t = resolve_target(a.target, in);
  VariantOptions options;
  options.allow_r3 = a.r3;
  const auto variants = move_variants(t.diagram, a.moves, a.seed, options);

  std::vector<VerifyReport> reports;
  for (int p : a.primes) {
    reports.push_back(verify_counts(t.diagram, p, variants, t.name, a.budget));
  }
  const bool passed = std::all_of(reports.begin(), reports.end(),
                                  [](const VerifyReport& r) { return r.passed(); });

  if (json) {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    Json diagrams = Json::array();
    for (const auto& v : variants) diagrams.push_back(pd_json(v.pd()));
    emit_json(out, Json{{"knot", t.name},
                        {"seed", a.seed},
                        {"moves", a.moves},
                        {"variant_diagrams", diagrams},
                        {"reports", list},
                        {"passed", passed}});
    return passed ? kExitOk : kExitVerify;
  }

  std::vector<std::vector<std::string>> rows{{"p", "diagram", "crossings", "nullity", "aut",
                                              "inn", "pred aut", "pred inn", "orbit sizes",
                                              "result"}};
  for (const auto& r : reports) {
    auto add = [&](const std::string& label, const VariantCounts& v) {
      std::string sizes = v.aut_orbit_sizes.empty() ? "-"
                          : std::to_string(v.aut_orbit_sizes.front()) + "/" +
                                std::to_string(v.inn_orbit_sizes.front());
      rows.push_back({std::to_string(r.p), label, std::to_string(v.crossings),
                      std::to_string(v.nullity), std::to_string(v.aut_classes),
                      std::to_string(v.inn_classes), r.predicted_aut.str(),
                      r.predicted_inn.str(), sizes, counts_pass(v, r) ? "PASS" : "FAIL"});
    };
    add("base", r.base);
    for (std::size_t i = 0; i < r.variants.size(); ++i) {
      add("variant " + std::to_string(i + 1), r.variants[i]);
    }
  }
  out << "knot: " << t.name << "  seed: " << a.seed << "  moves: " << a.moves << "\n\n";
  print_table(out, rows);
  out << '\n' << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------------------

int cmd_catalog(const std::string& name, bool json, std::ostream& out) {
  if (!name.empty()) {
    const PlanarDiagram d(catalog(name));
    const ColoringProfile profile(d);
    if (json) {
      emit_json(out, Json{{"knot", name},
                          {"diagram", pd_json(d.pd())},
                          {"crossings", d.crossing_count()},
                          {"determinant", integer_json(profile.determinant())}});
    } else {
      print_fields(out, {{"knot", name},
                         {"crossings", std::to_string(d.crossing_count())},
                         {"determinant", profile.determinant().str()},
                         {"pd", format_pd(d.pd())}});
    }
    return kExitOk;
  }

  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"name", "crossings", "determinant", "pd"}};
  for (const auto& n : catalog_names()) {
    const PlanarDiagram d(catalog(n));
    const ColoringProfile profile(d);
    list.push_back({{"knot", n},
                    {"crossings", d.crossing_count()},
                    {"determinant", integer_json(profile.determinant())},
                    {"diagram", pd_json(d.pd())}});
    rows.push_back({n, std::to_string(d.crossing_count()), profile.determinant().str(),
                    format_pd(d.pd())});
  }
  if (json) {
    emit_json(out, Json{{"knots", list}});
  } else {
    print_table(out, rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct MovesArgs {
  std::string target;
  std::vector<std::string> apply;
  std::string kind;
};

int cmd_moves(const MovesArgs& a, bool json, std::istream& in, std::ostream& out) {
  const auto t = resolve_target(a.target, in);

  if (!a.apply.empty()) {
    PlanarDiagram d = t.diagram;
    for (const auto& spec : a.apply) d = apply_move(d, parse_site(spec));
    if (json) {
      emit_json(out, Json{{"applied", a.apply},
                          {"diagram", pd_json(d.pd())},
                          {"crossings", d.crossing_count()}});
    } else {
      print_fields(out, {{"applied", join(a.apply)},
                         {"crossings", std::to_string(d.crossing_count())},
                         {"pd", format_pd(d.pd())}});
    }
    return kExitOk;
  }

  std::vector<MoveKind> kinds{MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                              MoveKind::R2Delete, MoveKind::R3};
  if (!a.kind.empty()) kinds = {parse_move_kind(a.kind)};
  std::vector<std::string> sites;
  for (auto k : kinds) {
    for (const auto& s : find_sites(t.diagram, k)) sites.push_back(format_site(s));
  }
  if (json) {
    emit_json(out, Json{{"knot", t.name}, {"sites", sites}});
  } else {
    for (const auto& s : sites) out << s << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fox coloring invariants and coloring classes of knot diagrams", "foxcolor"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  const std::string target_help = "Catalog name, PD code, @file, or - for stdin";

  AnalyzeArgs analyze;
  auto* sub_analyze = app.add_subcommand("analyze", "Invariant factors, determinant, counts");
  sub_analyze->add_option("target", analyze.target, target_help)->required();
  sub_analyze->add_option("--mod", analyze.modulus, "Report nullity and colorings mod M")
      ->check(CLI::Range(2, 1 << 20));
  sub_analyze->add_flag("--json", json);

  ClassesArgs classes;
  auto* sub_classes = app.add_subcommand("classes", "Orbit classes of non-trivial colorings");
  sub_classes->add_option("target", classes.target, target_help)->required();
  sub_classes->add_option("--mod", classes.modulus, "Modulus")->required()->check(
      CLI::Range(3, 1 << 20));
  sub_classes->add_option("--group", classes.group, "aut or inn")->capture_default_str();
  sub_classes->add_option("--budget", classes.budget, "Maximum colorings to enumerate")
      ->capture_default_str();
  sub_classes->add_flag("--json", json);

  EnumerateArgs enumerate;
  auto* sub_enumerate = app.add_subcommand("enumerate", "List colorings");
  sub_enumerate->add_option("target", enumerate.target, target_help)->required();
  sub_enumerate->add_option("--mod", enumerate.modulus, "Modulus")->required()->check(
      CLI::Range(2, 1 << 20));
  sub_enumerate->add_flag("--nontrivial", enumerate.nontrivial, "Skip constant colorings");
  sub_enumerate->add_option("--budget", enumerate.budget, "Maximum colorings to enumerate")
      ->capture_default_str();
  sub_enumerate->add_flag("--json", json);

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Check class counts against closed forms");
  sub_verify->add_option("target", verify.target, target_help)->required();
  sub_verify->add_option("--primes", verify.primes, "Odd primes")
      ->delimiter(',')
      ->capture_default_str();
  sub_verify->add_option("--moves", verify.moves, "Number of random move variants")
      ->capture_default_str();
  sub_verify->add_option("--seed", verify.seed, "Seed for move sites")->capture_default_str();
  sub_verify->add_flag("--r3", verify.r3, "Allow Reidemeister III moves in variants");
  sub_verify->add_option("--budget", verify.budget, "Maximum colorings per diagram")
      ->capture_default_str();
  sub_verify->add_flag("--json", json);

  std::string catalog_name;
  auto* sub_catalog = app.add_subcommand("catalog", "List stored knots or show one");
  sub_catalog->add_option("name", catalog_name, "Knot name");
  sub_catalog->add_flag("--json", json);

  MovesArgs moves;
  auto* sub_moves = app.add_subcommand("moves", "List move sites or apply moves");
  sub_moves->add_option("target", moves.target, target_help)->required();
  sub_moves->add_option("--apply", moves.apply, "Site KIND:e1,e2:variant, applied in order");
  sub_moves->add_option("--kind", moves.kind, "Only list sites of this kind");
  sub_moves->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sub_analyze) return cmd_analyze(analyze, json, in, out);
    if (*sub_classes) return cmd_classes(classes, json, in, out);
    if (*sub_enumerate) return cmd_enumerate(enumerate, json, in, out);
    if (*sub_verify) return cmd_verify(verify, json, in, out);
    if (*sub_catalog) return cmd_catalog(catalog_name, json, out);
    if (*sub_moves) return cmd_moves(moves, json, in, out);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace foxcolor
