#include "dprig/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dprig/anticanonical.hpp"
#include "dprig/curves.hpp"
#include "dprig/errors.hpp"
#include "dprig/fibrations.hpp"
#include "dprig/lct.hpp"
#include "dprig/picard.hpp"
#include "dprig/polynomial.hpp"
#include "dprig/rational.hpp"

namespace dprig {
namespace {

using nlohmann::json;

json json_header(const std::string& command) {
  json doc;
  doc["schema_version"] = kJsonSchemaVersion;
  doc["command"] = command;
  return doc;
}

void emit(const json& doc, const std::string& text, const std::string& format,
          std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << text;
  }
}

template <typename T>
std::string render_list(const std::vector<T>& values) {
  std::string text = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text += ", ";
    text += std::to_string(values[i]);
  }
  return text + "]";
}

std::string render_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  std::string text = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) text += ", ";
    text += render_list(rows[i]);
  }
  return text + "]";
}

LatticeVariant variant_from(const std::string& name) {
  return name == "quadric" ? LatticeVariant::quadric : LatticeVariant::blowup;
}

// ---------------------------------------------------------------------------
// census pipeline shared by `decomps` and the tables document

struct ShapeRow {
  DecompositionShape shape;
  std::string status;  // realizable | index-excluded | intersection-excluded
  std::optional<std::size_t> configurations;
};

struct CensusSummary {
  int degree = 0;
  int fano_index = 1;
  std::vector<ShapeRow> rows;
  int candidates = 0;
  int index_excluded = 0;
  int intersection_excluded = 0;
  int realizable = 0;
};

CensusSummary census_summary(int degree) {
  CensusSummary summary;
  summary.degree = degree;
  summary.fano_index = fano_index_of(degree, LatticeVariant::blowup).index;
  const std::vector<DecompositionShape> shapes = enumerate_shapes(degree);
  const ShapeFilter filtered = filter_fano_index(shapes, summary.fano_index);
  summary.candidates = static_cast<int>(shapes.size());
  for (const DecompositionShape& shape : shapes) {
    ShapeRow row{shape, "", std::nullopt};
    const bool excluded =
        std::find(filtered.excluded.begin(), filtered.excluded.end(), shape) !=
        filtered.excluded.end();
    if (excluded) {
      row.status = "index-excluded";
      ++summary.index_excluded;
    } else {
      const std::vector<Configuration> configurations =
          solve_configurations(shape);
      if (configurations.empty()) {
        row.status = "intersection-excluded";
        ++summary.intersection_excluded;
      } else {
        row.status = "realizable";
        row.configurations = configurations.size();
        ++summary.realizable;
      }
    }
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

// ---------------------------------------------------------------------------
// markdown rendering

struct MarkdownTable {
  std::vector<std::string> headers;
  std::vector<bool> numeric;  // right-aligned columns
  std::vector<std::vector<std::string>> rows;

  std::string render() const {
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
      width[c] = headers[c].size();
    }
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    const auto pad = [&](const std::string& cell, std::size_t c) {
      const std::string space(width[c] - cell.size(), ' ');
      return numeric[c] ? space + cell : cell + space;
    };
    std::string out = "|";
    for (std::size_t c = 0; c < headers.size(); ++c) {
      out += " " + pad(headers[c], c) + " |";
    }
    out += "\n|";
    for (std::size_t c = 0; c < headers.size(); ++c) {
      out += numeric[c] ? std::string(width[c] + 1, '-') + ":"
                        : std::string(width[c] + 2, '-');
      out += "|";
    }
    out += "\n";
    for (const auto& row : rows) {
      out += "|";
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += " " + pad(row[c], c) + " |";
      }
      out += "\n";
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// subcommand bodies

int cmd_lattice(int degree, const std::string& variant_name,
                const std::string& format, std::ostream& out) {
  const DelPezzoLattice lattice(degree, variant_from(variant_name));
  const DivisorClass canonical = lattice.canonical_class();
  const DivisorClass fundamental = lattice.fundamental_class();
  const std::int64_t self = intersect(canonical, canonical);

  json doc = json_header("lattice");
  doc["degree"] = degree;
  doc["variant"] = to_string(lattice.variant());
  doc["rank"] = lattice.rank();
  doc["fano_index"] = lattice.fano_index();
  doc["canonical_class"] = canonical.coefficients;
  doc["fundamental_class"] = fundamental.coefficients;
  doc["canonical_self_intersection"] = self;

  std::ostringstream text;
  text << "lattice: degree " << degree << " (" << to_string(lattice.variant())
       << ")\n"
       << "rank: " << lattice.rank() << "\n"
       << "fano index: " << lattice.fano_index() << "\n"
       << "canonical class: " << render_list(canonical.coefficients) << "\n"
       << "fundamental class: " << render_list(fundamental.coefficients)
       << "\n"
       << "canonical self-intersection: " << self << "\n";
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_curves(int degree, const std::string& variant_name, int h_degree,
               const std::string& format, std::ostream& out) {
  const DelPezzoLattice lattice(degree, variant_from(variant_name));
  const std::vector<CurveClass> curves = enumerate_curves(lattice, h_degree);

  json doc = json_header("curves");
  doc["degree"] = degree;
  doc["variant"] = to_string(lattice.variant());
  doc["h_degree"] = h_degree;
  doc["count"] = curves.size();
  json classes = json::array();
  for (const CurveClass& curve : curves) {
    json entry;
    entry["coefficients"] = curve.divisor.coefficients;
    entry["h_degree"] = curve.h_degree;
    entry["self_intersection"] = curve.self_intersection;
    entry["genus"] = curve.genus;
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);

  std::ostringstream text;
  text << curves.size() << " curve classes: degree " << degree << " ("
       << to_string(lattice.variant()) << "), h-degree " << h_degree << "\n";
  for (const CurveClass& curve : curves) {
    text << "  " << render_list(curve.divisor.coefficients)
         << "  C.C = " << curve.self_intersection
         << "  p_a = " << curve.genus << "\n";
  }
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_decomps(int degree, const std::string& format, std::ostream& out) {
  const CensusSummary summary = census_summary(degree);

  json doc = json_header("decomps");
  doc["degree"] = degree;
  doc["fano_index"] = summary.fano_index;
  doc["counts"] = {{"candidates", summary.candidates},
                   {"index_excluded", summary.index_excluded},
                   {"intersection_excluded", summary.intersection_excluded},
                   {"realizable", summary.realizable}};
  json shapes = json::array();
  for (const ShapeRow& row : summary.rows) {
    json entry;
    entry["shape"] = to_string(row.shape);
    entry["multiplicities"] = row.shape.multiplicities;
    entry["status"] = row.status;
    entry["configurations"] =
        row.configurations ? json(*row.configurations) : json(nullptr);
    shapes.push_back(std::move(entry));
  }
  doc["shapes"] = std::move(shapes);

  std::size_t width = 0;
  for (const ShapeRow& row : summary.rows) {
    width = std::max(width, to_string(row.shape).size());
  }
  std::ostringstream text;
  text << "decomposition census for degree " << degree << " (fano index "
       << summary.fano_index << "): " << summary.candidates
       << " candidate shapes\n";
  for (const ShapeRow& row : summary.rows) {
    const std::string name = to_string(row.shape);
    text << "  " << name << std::string(width - name.size() + 2, ' ')
         << row.status;
    if (row.configurations) {
      text << " (" << *row.configurations << " configuration"
           << (*row.configurations == 1 ? "" : "s") << ")";
    }
    text << "\n";
  }
  text << "totals: " << summary.candidates << " candidates, "
       << summary.index_excluded << " index-excluded, "
       << summary.intersection_excluded << " intersection-excluded, "
       << summary.realizable << " realizable\n";
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_classify(int degree, const std::string& format, std::ostream& out) {
  const std::vector<LcClassification> catalog = classify_degenerations(degree);

  json doc = json_header("classify");
  doc["degree"] = degree;
  doc["count"] = catalog.size();
  json entries = json::array();
  for (const LcClassification& item : catalog) {
    json entry;
    entry["shape"] = to_string(item.configuration.shape);
    entry["multiplicities"] = item.configuration.shape.multiplicities;
    entry["degrees"] = item.configuration.degrees;
    entry["self_intersections"] = item.configuration.self_intersections;
    entry["intersections"] = item.configuration.intersections;
    entry["label"] = to_string(item.label);
    entry["verdict"] = to_string(item.verdict);
    entry["lattice_only"] = item.lattice_only;
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);

  std::ostringstream text;
  text << "worse-than-lc degenerations for degree " << degree << ": "
       << catalog.size() << (catalog.size() == 1 ? " entry\n" : " entries\n");
  int index = 1;
  for (const LcClassification& item : catalog) {
    text << "  " << index++ << ". " << to_string(item.configuration.shape)
         << "  degrees " << render_list(item.configuration.degrees)
         << "  label " << to_string(item.label) << "\n"
         << "     intersections "
         << render_matrix(item.configuration.intersections) << "\n";
  }
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_lct_global(int degree, const std::string& variant_name,
                   const std::string& format, std::ostream& out) {
  const LatticeVariant variant = variant_from(variant_name);
  const Rational threshold = global_lct_bound(degree, variant);

  json doc = json_header("lct");
  doc["mode"] = "global";
  doc["degree"] = degree;
  doc["variant"] = to_string(variant);
  doc["threshold"] = to_string(threshold);

  std::ostringstream text;
  text << "global lc threshold for degree " << degree << " ("
       << to_string(variant) << "): " << to_string(threshold) << "\n";
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_lct_germ(const std::string& germ_text, const std::string& format,
                 std::ostream& out) {
  const Polynomial germ = parse_polynomial(germ_text, {"x", "y", "z", "t"});
  const Rational threshold = local_threshold(germ);

  json doc = json_header("lct");
  doc["mode"] = "germ";
  doc["germ"] = germ.to_string();
  doc["threshold"] = to_string(threshold);

  std::ostringstream text;
  text << "germ: " << germ.to_string() << "\n"
       << "local lc threshold: " << to_string(threshold) << "\n";
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_rigidity(const std::string& tau_x_text, const std::string& tau_y_text,
                 const std::string& format, std::ostream& out) {
  const Rational tau_x = parse_rational(tau_x_text);
  const Rational tau_y = parse_rational(tau_y_text);
  const bool condition = total_lct_condition(tau_x, tau_y);
  const RigidityCertificate certificate = rigidity_certificate(tau_x, tau_y);

  json doc = json_header("rigidity");
  doc["tau_x"] = to_string(tau_x);
  doc["tau_y"] = to_string(tau_y);
  doc["condition_holds"] = condition;
  doc["rigid"] = certificate.rigid;
  if (certificate.witness) {
    const RigidityLedger& witness = *certificate.witness;
    json ledger;
    ledger["a"] = to_string(witness.a);
    ledger["n"] = to_string(witness.n);
    ledger["l"] = to_string(witness.l);
    ledger["e"] = to_string(witness.e);
    ledger["b"] = witness.b;
    ledger["m"] = witness.m;
    ledger["verified"] = witness.verify();
    doc["witness"] = std::move(ledger);
  } else {
    doc["witness"] = nullptr;
  }

  std::ostringstream text;
  text << "tau_X = " << to_string(tau_x) << ", tau_Y = " << to_string(tau_y)
       << "\n"
       << "total threshold condition tau_X + tau_Y > 1: "
       << (condition ? "holds" : "fails") << "\n"
       << "rigid: " << (certificate.rigid ? "yes" : "no") << "\n";
  if (certificate.witness) {
    const RigidityLedger& witness = *certificate.witness;
    text << "witness ledger: a = " << to_string(witness.a)
         << ", n = " << to_string(witness.n)
         << ", l = " << to_string(witness.l)
         << ", e = " << to_string(witness.e) << ", b = " << witness.b
         << ", m = " << witness.m << "\n"
         << "ledger verified: " << (witness.verify() ? "yes" : "no") << "\n";
  } else {
    text << "no ledger exists: every birational map between such fibrations "
            "is an isomorphism in codimension 1\n";
  }
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_verify_example(const std::string& name,
                       const std::map<std::string, std::int64_t>& parameters,
                       const std::string& format, std::ostream& out) {
  const ExampleReport report = verify_example(name, parameters);

  json doc = json_header("verify-example");
  doc["name"] = report.name;
  doc["parameters"] = report.parameters;
  doc["map_valid"] = report.map_valid;
  doc["t_power"] = report.t_power;
  doc["transformed_divisor"] = report.transformed_divisor
                                   ? json(*report.transformed_divisor)
                                   : json(nullptr);
  doc["fiber_configuration"] = report.fiber_configuration
                                   ? json(*report.fiber_configuration)
                                   : json(nullptr);
  doc["local_lct"] =
      report.local_lct ? json(to_string(*report.local_lct)) : json(nullptr);
  doc["is_lc"] = report.is_lc ? json(*report.is_lc) : json(nullptr);

  std::ostringstream text;
  text << "example: " << report.name << "\n";
  text << "parameters: ";
  if (report.parameters.empty()) {
    text << "none";
  } else {
    bool first = true;
    for (const auto& [key, value] : report.parameters) {
      if (!first) text << ", ";
      text << key << " = " << value;
      first = false;
    }
  }
  text << "\n";
  text << "map: " << (report.map_valid ? "valid" : "INVALID") << ", t-power "
       << report.t_power << "\n";
  if (report.transformed_divisor) {
    text << "transformed divisor: " << *report.transformed_divisor << "\n";
  }
  if (report.fiber_configuration) {
    text << "fiber configuration: " << *report.fiber_configuration << "\n";
  }
  if (report.local_lct) {
    text << "local lct: " << to_string(*report.local_lct) << "\n";
  }
  if (report.is_lc) {
    text << "log canonical: " << (*report.is_lc ? "yes" : "no") << "\n";
  }
  emit(doc, text.str(), format, out);
  return 0;
}

int cmd_emit_tables(const std::string& format, std::ostream& out) {
  const std::string markdown = emit_tables();
  if (format == "json") {
    json doc = json_header("emit-tables");
    doc["markdown"] = markdown;
    out << doc.dump(2) << '\n';
  } else {
    out << markdown;
  }
  return 0;
}

}  // namespace

std::string emit_tables() {
  std::string doc = "# Del Pezzo fibration verification tables\n\n";

  doc += "## Global lc thresholds of anticanonical members\n\n";
  MarkdownTable thresholds;
  thresholds.headers = {"degree", "lattice", "threshold"};
  thresholds.numeric = {true, false, true};
  for (int degree = 1; degree <= 9; ++degree) {
    thresholds.rows.push_back({std::to_string(degree), "blowup",
                               to_string(global_lct_bound(degree))});
    if (degree == 8) {
      thresholds.rows.push_back(
          {"8", "quadric",
           to_string(global_lct_bound(8, LatticeVariant::quadric))});
    }
  }
  doc += thresholds.render() + "\n";

  doc += "## Anticanonical decomposition census\n\n";
  MarkdownTable census;
  census.headers = {"degree", "candidates", "index-excluded",
                    "intersection-excluded", "realizable"};
  census.numeric = {true, true, true, true, true};
  for (int degree = 1; degree <= 4; ++degree) {
    const CensusSummary summary = census_summary(degree);
    census.rows.push_back({std::to_string(degree),
                           std::to_string(summary.candidates),
                           std::to_string(summary.index_excluded),
                           std::to_string(summary.intersection_excluded),
                           std::to_string(summary.realizable)});
  }
  doc += census.render() + "\n";

  doc += "## Degeneration example reports\n\n";
  MarkdownTable examples;
  examples.headers = {"example",   "parameters", "t-power",
                      "fiber configuration", "local lct",  "lc"};
  examples.numeric = {false, false, true, false, false, false};
  for (const std::string& name : example_names()) {
    const ExampleFixture fixture = load_fixture(name);
    std::map<std::string, std::int64_t> parameters;
    if (!fixture.parameter.empty()) parameters[fixture.parameter] = 1;
    const ExampleReport report = verify_example(name, parameters);
    examples.rows.push_back(
        {report.name,
         fixture.parameter.empty() ? "-" : fixture.parameter + " = 1",
         std::to_string(report.t_power),
         report.fiber_configuration ? *report.fiber_configuration : "-",
         report.local_lct ? to_string(*report.local_lct) : "-",
         report.is_lc ? (*report.is_lc ? "yes" : "no") : "-"});
  }
  doc += examples.render();
  return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact verification toolkit for del Pezzo fibrations",
               "dprig"};
  app.require_subcommand(1);

  struct {
    int degree = 1;
    std::string variant = "blowup";
    int h_degree = 1;
    std::string germ;
    std::string tau_x;
    std::string tau_y;
    std::string name;
    std::int64_t n = 1;
    std::int64_t m = 1;
    std::string format = "text";
  } flags;

  const auto add_format = [&flags](CLI::App* sub) {
    sub->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_variant = [&flags](CLI::App* sub) {
    sub->add_option("--variant", flags.variant,
                    "lattice variant (quadric exists only in degree 8)")
        ->check(CLI::IsMember({"blowup", "quadric"}));
  };

  CLI::App* lattice = app.add_subcommand(
      "lattice", "intersection lattice of a del Pezzo surface");
  lattice->add_option("--degree", flags.degree, "surface degree")
      ->required()
      ->check(CLI::Range(1, 9));
  add_variant(lattice);
  add_format(lattice);

  CLI::App* curves = app.add_subcommand(
      "curves", "rational curve classes of small anticanonical degree");
  curves->add_option("--degree", flags.degree, "surface degree")
      ->required()
      ->check(CLI::Range(1, 9));
  curves
      ->add_option("--h-degree", flags.h_degree,
                   "anticanonical degree of the classes")
      ->required()
      ->check(CLI::Range(1, 3));
  add_variant(curves);
  add_format(curves);

  CLI::App* decomps = app.add_subcommand(
      "decomps", "census of anticanonical decomposition shapes");
  decomps->add_option("--degree", flags.degree, "surface degree")
      ->required()
      ->check(CLI::Range(1, 4));
  add_format(decomps);

  CLI::App* classify = app.add_subcommand(
      "classify", "worse-than-lc degenerations of anticanonical members");
  classify->add_option("--degree", flags.degree, "surface degree")
      ->required()
      ->check(CLI::Range(1, 4));
  add_format(classify);

  CLI::App* lct = app.add_subcommand("lct", "log canonical thresholds");
  CLI::Option* lct_degree = nullptr;
  CLI::Option* lct_germ = nullptr;
  {
    CLI::Option_group* mode =
        lct->add_option_group("mode", "exactly one of --degree / --germ");
    lct_degree = mode->add_option("--degree", flags.degree,
                                  "global threshold for this surface degree")
                     ->check(CLI::Range(1, 9));
    lct_germ = mode->add_option(
        "--germ", flags.germ,
        "local threshold of a curve germ in x, y, z and the base t");
    mode->require_option(1);
  }
  add_variant(lct);
  add_format(lct);

  CLI::App* rigidity =
      app.add_subcommand("rigidity", "total threshold rigidity certificate");
  rigidity
      ->add_option("--tau-x", flags.tau_x,
                   "minimal lc threshold of the source special fiber (p/q)")
      ->required();
  rigidity
      ->add_option("--tau-y", flags.tau_y,
                   "minimal lc threshold of the target special fiber (p/q)")
      ->required();
  add_format(rigidity);

  CLI::App* verify = app.add_subcommand(
      "verify-example", "verify one built-in degeneration example");
  verify->add_option("--name", flags.name, "example name")->required();
  CLI::Option* n_option =
      verify->add_option("--n", flags.n, "value for parameter n")
          ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  CLI::Option* m_option =
      verify->add_option("--m", flags.m, "value for parameter m")
          ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
  add_format(verify);

  CLI::App* tables = app.add_subcommand(
      "emit-tables", "render the verification tables as markdown");
  add_format(tables);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(lattice)) {
      return cmd_lattice(flags.degree, flags.variant, flags.format, out);
    }
    if (app.got_subcommand(curves)) {
      return cmd_curves(flags.degree, flags.variant, flags.h_degree,
                        flags.format, out);
    }
    if (app.got_subcommand(decomps)) {
      return cmd_decomps(flags.degree, flags.format, out);
    }
    if (app.got_subcommand(classify)) {
      return cmd_classify(flags.degree, flags.format, out);
    }
    if (app.got_subcommand(lct)) {
      if (lct_germ->count() > 0) {
        return cmd_lct_germ(flags.germ, flags.format, out);
      }
      (void)lct_degree;
      return cmd_lct_global(flags.degree, flags.variant, flags.format, out);
    }
    if (app.got_subcommand(rigidity)) {
      return cmd_rigidity(flags.tau_x, flags.tau_y, flags.format, out);
    }
    if (app.got_subcommand(verify)) {
      std::map<std::string, std::int64_t> parameters;
      if (n_option->count() > 0) parameters["n"] = flags.n;
      if (m_option->count() > 0) parameters["m"] = flags.m;
      return cmd_verify_example(flags.name, parameters, flags.format, out);
    }
    if (app.got_subcommand(tables)) {
      return cmd_emit_tables(flags.format, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dprig
