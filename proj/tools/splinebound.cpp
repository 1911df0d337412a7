// splinebound command-line front end.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "splinebound/analysis.hpp"
#include "splinebound/bounds.hpp"

using namespace splinebound;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCertification = 2, kTableMismatch = 3 };

struct Config {
  int precision = kDefaultDigits;
  int samples = 1000;
  std::string format = "json";
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + cfg.out);
  f << text;
}

std::string render(const ExtReal& v, int digits) { return v.to_string(digits); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  return line + "\n";
}

// ---- gen ----

BoundFn approximant_for(const std::string& target, int order, const std::string& direction) {
  if (order < 0) throw UsageError("order must be >= 0, got " + std::to_string(order));
  const Direction dir = parse_direction(direction);
  if (dir != Direction::lower && dir != Direction::upper) throw UsageError("direction must be lower or upper");
  const bool upper = dir == Direction::upper;
  if (target == "sin") return upper ? sine_upper(order) : sine_lower(order);
  if (target == "sinc") return to_sinc(upper ? sine_upper(order) : sine_lower(order));
  if (target == "cos") return reflect_to_cos(upper ? sine_upper(order) : sine_lower(order));
  if (target == "si") {
    if (upper) throw UsageError("no upper bounds for Si are provided");
    return si_lower(order);
  }
  throw UsageError("unknown target '" + target + "' (sin, sinc, cos, si)");
}

std::string variable_name(Target t) { return t == Target::cos ? "y" : "x"; }

int cmd_gen(const Config& cfg, const std::string& target, int order, const std::string& form, int digits,
            const std::string& direction) {
  if (form != "exact" && form != "decimal" && form != "both") throw UsageError("form must be exact, decimal or both");
  if (digits < 1) throw UsageError("digits must be >= 1");
  const BoundFn b = approximant_for(target, order, direction);
  const ExactPoly& p = *b.poly;
  const bool exact = form != "decimal";
  const bool decimal = form != "exact";
  std::ostringstream os;
  if (cfg.format == "json") {
    Json doc;
    doc["target"] = target;
    doc["order"] = order;
    doc["direction"] = to_string(b.direction);
    doc["variable"] = variable_name(b.target);
    doc["domain"] = {"0", "pi/2"};
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
      Json c;
      c["power"] = k;
      if (exact) {
        c["exact"] = Json::parse(to_json(p.coefficients()[k]).dump());
        c["exact_text"] = p.coefficients()[k].to_string();
      }
      if (decimal) c["decimal"] = render(to_ext_real(p.coefficients()[k], digits), digits);
      coeffs.push_back(c);
    }
    doc["coefficients"] = coeffs;
    os << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::vector<std::string> head{"power"};
    if (exact) head.push_back("exact");
    if (decimal) head.push_back("decimal");
    os << csv_line(head);
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
      std::vector<std::string> row{std::to_string(k)};
      if (exact) row.push_back(p.coefficients()[k].to_string());
      if (decimal) row.push_back(render(to_ext_real(p.coefficients()[k], digits), digits));
      os << csv_line(row);
    }
  } else {
    os << b.id() << "\n";
    if (exact) os << to_string(p) << "\n";
    if (decimal) {
      std::string line;
      for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (p.coefficients()[k].is_zero()) continue;
        if (!line.empty()) line += " + ";
        line += "(" + render(to_ext_real(p.coefficients()[k], digits), digits) + ")*" + variable_name(b.target) +
                "^" + std::to_string(k);
      }
      os << (line.empty() ? "0" : line) << "\n";
    }
  }
  emit(cfg, os.str());
  return kOk;
}

// ---- bounds ----

int cmd_bounds(const Config& cfg, const std::string& target, int order, const std::string& direction, int digits) {
  const BoundFn b = approximant_for(target, order, direction);
  const RelErrReport rep = re_bound_scan(b, Grid::standard(cfg.samples), 0, cfg.precision);
  const bool pass = rep.violations == 0;
  std::ostringstream os;
  if (cfg.format == "json") {
    Json doc;
    doc["bound"] = rep.bound_id;
    doc["samples"] = cfg.samples;
    doc["grid"] = "inclusive equally spaced on [0, pi/2]";
    doc["working_digits"] = rep.digits;
    doc["re_bound"] = render(rep.re_bound, digits);
    doc["argmax"] = render(rep.argmax, digits);
    doc["violations"] = rep.violations;
    doc["pass"] = pass;
    os << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << csv_line({"x", "re"});
    for (int i = 0; i < cfg.samples; ++i) {
      os << csv_line({render(rep.grid.point(i, rep.digits), digits), render(rep.re_values[static_cast<std::size_t>(i)], digits)});
    }
  } else {
    os << rep.bound_id << "\n"
       << "re_bound " << render(rep.re_bound, digits) << " at x = " << render(rep.argmax, digits) << "\n"
       << "working digits " << rep.digits << ", samples " << cfg.samples << "\n"
       << "direction " << (pass ? "pass" : "FAIL (" + std::to_string(rep.violations) + " violations)") << "\n";
  }
  emit(cfg, os.str());
  return pass ? kOk : kCertification;
}

// ---- table ----

int cmd_table(const Config& cfg, const std::string& id, int digits) {
  const TableResult t = reproduce_table(id, cfg.samples);
  std::ostringstream os;
  const auto computed = [&](const TableRow& r) { return r.computed ? render(*r.computed, digits) : std::string(); };
  const auto status = [](const TableRow& r) {
    if (!r.expected) return std::string("n/a");
    return std::string(r.pass ? "pass" : "fail");
  };
  if (cfg.format == "json") {
    Json doc;
    doc["table"] = id;
    doc["samples"] = cfg.samples;
    doc["compare_sig_figs"] = 3;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json j;
      j["row"] = r.row;
      j["column"] = r.column;
      if (!r.label.empty()) j["label"] = r.label;
      j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
      j["computed"] = r.computed ? Json(computed(r)) : Json(nullptr);
      if (r.digits) j["working_digits"] = r.digits;
      j["status"] = status(r);
      if (!r.note.empty()) j["note"] = r.note;
      rows.push_back(j);
    }
    doc["rows"] = rows;
    doc["all_pass"] = t.all_pass();
    os << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << csv_line({"row", "column", "label", "expected", "computed", "status", "note"});
    for (const auto& r : t.rows) {
      os << csv_line({r.row, r.column, r.label, r.expected.value_or(""), computed(r), status(r), r.note});
    }
  } else {
    os << "table " << id << " (" << cfg.samples << " samples, 3 significant figures)\n";
    for (const auto& r : t.rows) {
      os << r.column << " " << r.row << ": expected " << r.expected.value_or("-") << ", computed "
         << (r.computed ? computed(r) : "-") << " [" << status(r) << "]";
      if (!r.note.empty()) os << " " << r.note;
      os << "\n";
    }
  }
  emit(cfg, os.str());
  return t.all_pass() ? kOk : kTableMismatch;
}

// ---- figure ----

int cmd_figure(const Config& cfg, int id, int digits) {
  const Dataset d = figure_data(id, Grid::standard(cfg.samples), cfg.precision);
  std::ostringstream os;
  if (cfg.format == "json") {
    Json doc;
    doc["figure"] = d.id;
    doc["title"] = d.title;
    doc["samples"] = cfg.samples;
    Json cols = Json::object();
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
      Json values = Json::array();
      for (const auto& row : d.rows) values.push_back(render(row[c], digits));
      cols[d.columns[c]] = values;
    }
    doc["columns"] = cols;
    os << doc.dump(2) << "\n";
  } else {
    os << csv_line(d.columns);
    for (const auto& row : d.rows) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(render(v, digits));
      os << csv_line(cells);
    }
  }
  emit(cfg, os.str());
  return kOk;
}

// ---- codegen ----

int cmd_codegen(const Config& cfg, const std::string& target, int order, int digits) {
  if (digits < 1) throw UsageError("digits must be >= 1");
  if (target != "sin" && target != "cos" && target != "si") throw UsageError("codegen targets: sin, cos, si");
  const BoundFn exact = approximant_for(target, order, "lower");
  std::vector<std::string> coeffs;
  std::vector<PiRational> rounded;
  for (const auto& c : exact.poly->coefficients()) {
    coeffs.push_back(render(to_ext_real(c, digits), digits));
    rounded.push_back(PiRational::from_decimal(coeffs.back()));
  }
  BoundFn kernel = exact;
  kernel.family = "kernel";
  kernel.direction = Direction::approximation;
  kernel.poly = ExactPoly(rounded, Variable::X_on_0_halfpi);
  const RelErrReport rep = re_bound_scan(kernel, Grid::standard(cfg.samples), 0, cfg.precision);
  Json doc;
  doc["target"] = target;
  doc["order"] = order;
  doc["domain"] = {"0", "pi/2"};
  doc["horner_coefficients"] = coeffs;
  doc["certified_re_bound"] = render(rep.re_bound, 6);
  doc["samples"] = cfg.samples;
  if (cfg.format == "json") {
    emit(cfg, doc.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::string s = csv_line({"power", "coefficient"});
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += csv_line({std::to_string(k), coeffs[k]});
    emit(cfg, s);
  } else {
    std::string s = target + " order " + std::to_string(order) + ", " + std::to_string(digits) + " digits\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += "c" + std::to_string(k) + " = " + coeffs[k] + "\n";
    s += "certified re_bound " + render(rep.re_bound, 6) + "\n";
    emit(cfg, s);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("SPLINEBOUND_PRECISION")) {
    try {
      cfg.precision = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "SPLINEBOUND_PRECISION must be an integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Two-point spline approximants and bounds for sin, cos and Si on [0, pi/2]"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", cfg.precision, "working precision in significant digits (>= 10)");
  app.add_option("--samples", cfg.samples, "grid points on [0, pi/2], endpoints included (>= 2)");
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "output file (default: standard output)");

  std::string target = "sin";
  std::string direction = "lower";
  std::string form = "both";
  std::string table_id;
  int order = 0;
  int figure_id = 0;
  int digits = 10;

  auto* gen = app.add_subcommand("gen", "monomial coefficients of an approximant");
  gen->add_option("target", target, "sin, sinc, cos or si")->required();
  gen->add_option("order", order, "spline order")->required();
  gen->add_option("form", form, "exact, decimal or both");
  gen->add_option("--digits", digits, "significant digits for decimal output");
  gen->add_option("--direction", direction, "lower or upper");

  auto* bounds = app.add_subcommand("bounds", "grid certification of a bound");
  bounds->add_option("target", target, "sin, sinc, cos or si")->required();
  bounds->add_option("order", order, "spline order")->required();
  bounds->add_option("direction", direction, "lower or upper");
  bounds->add_option("--digits", digits, "significant digits in the report");

  auto* table = app.add_subcommand("table", "reproduce a relative-error table");
  table->add_option("id", table_id, "2.1, 3.1, 5.1 or 5.2")->required();
  table->add_option("--digits", digits, "significant digits in the report");

  auto* figure = app.add_subcommand("figure", "data behind a figure");
  figure->add_option("id", figure_id, "1..8")->required();
  figure->add_option("--digits", digits, "significant digits per value");

  auto* codegen = app.add_subcommand("codegen", "rounded Horner kernel with its certified relative error");
  codegen->add_option("target", target, "sin, cos or si")->required();
  codegen->add_option("order", order, "spline order")->required();
  codegen->add_option("--digits", digits, "significant digits per coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (cfg.precision < 10) throw UsageError("--precision must be >= 10");
    if (cfg.samples < 2) throw UsageError("--samples must be >= 2");
    if (gen->parsed()) return cmd_gen(cfg, target, order, form, digits, direction);
    if (bounds->parsed()) return cmd_bounds(cfg, target, order, direction, digits);
    if (table->parsed()) return cmd_table(cfg, table_id, digits);
    if (figure->parsed()) return cmd_figure(cfg, figure_id, digits);
    if (codegen->parsed()) return cmd_codegen(cfg, target, order, digits);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
