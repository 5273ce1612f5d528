#include "cli.hpp"

#include "palin/palin.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace palin::cli {

namespace {

/// Raised for malformed arguments that CLI11 itself accepts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IndexRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto to_uint = [&text](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) || s.size() > 9)
      throw UsageError("malformed range '" + text + "' (expected a or a..b)");
    return std::stoul(s);
  };
  if (dots == std::string::npos) {
    const std::size_t v = to_uint(text);
    return {v, v};
  }
  const IndexRange range{to_uint(text.substr(0, dots)), to_uint(text.substr(dots + 2))};
  if (range.first > range.last) throw UsageError("empty range '" + text + "'");
  return range;
}

Basis basis_arg(const std::string& name) {
  const auto b = parse_basis(name);
  if (!b) throw UsageError("unknown basis '" + name + "' (expected S, A or B)");
  return *b;
}

std::size_t darga_or_infer(const Polynomial& f, const std::optional<std::size_t>& n) {
  if (n) return *n;
  return darga(f);
}

struct Options {
  bool json = false;

  std::string poly;
  std::string poly_b;
  std::optional<std::size_t> darga;
  std::string basis;

  std::string family;
  std::vector<std::size_t> params;

  std::string r_range;
  std::string n_range;
  std::string csv_path;
  unsigned threads = 0;

  std::size_t matrix_n = 0;
  std::string from;
  std::string to;
  bool csv = false;
};

Format format_of(const Options& o) { return o.json ? Format::json : Format::text; }

void run_analyze(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  out << emit(analyze(f, o.darga), format_of(o));
}

void run_convert(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  const std::size_t n = darga_or_infer(f, o.darga);
  if (!is_palindromic(f, n))
    throw DomainError(to_string(f) + " is not a palindromic polynomial of darga " + std::to_string(n));
  out << emit(coords(f, n, basis_arg(o.to)), format_of(o));
}

void run_product(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.poly);
  const Polynomial g = parse_polynomial(o.poly_b);
  const Polynomial fg = f * g;

  std::optional<CoordinateVector> coordinates;
  if (!o.basis.empty()) {
    const Basis b = basis_arg(o.basis);
    if (fg.is_zero()) throw DomainError("product is the zero polynomial; its darga is undefined");
    if (!is_palindromic(f) || !is_palindromic(g))
      throw DomainError("basis coordinates need palindromic factors");
    coordinates = coords(fg, darga(fg), b);
    if (b == Basis::B) {
      const auto conv = b_product_convolution(gamma_vector(f, darga(f)), gamma_vector(g, darga(g)));
      if (conv != *coordinates) throw std::logic_error("B-coordinates of the product differ from the convolution");
    }
  }

  if (o.json) {
    nlohmann::ordered_json j;
    j["product"] = nlohmann::ordered_json::parse(to_json(fg));
    j["darga"] = fg.is_zero() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(darga(fg));
    j["coords"] = coordinates ? nlohmann::ordered_json::parse(to_json(*coordinates)) : nlohmann::ordered_json(nullptr);
    out << j.dump() << "\n";
    return;
  }
  out << "product  " << to_string(fg) << "\n";
  if (!fg.is_zero()) out << "darga    " << darga(fg) << "\n";
  if (coordinates) {
    out << "basis    " << basis_name(coordinates->basis) << "\n";
    out << "entries  " << format_entries(coordinates->entries) << "\n";
  }
}

void run_family(const Options& o, std::ostream& out) {
  FamilyId id{FamilyKind::chain, o.params};
  try {
    id.kind = parse_family_kind(o.family);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (id.params.size() != FamilyId::arity(id.kind))
    throw UsageError("family " + o.family + " takes " + std::to_string(FamilyId::arity(id.kind)) + " parameter(s)");
  const Polynomial f = generate(id);
  out << (o.json ? to_json(f) : to_string(f)) << "\n";
}

void run_scan(const Options& o, std::ostream& out) {
  const auto rows = scan_almkvist(parse_range(o.n_range), parse_range(o.r_range), o.threads);
  if (!o.csv_path.empty()) {
    if (o.csv_path == "-") {
      out << emit(rows, Format::csv);
      return;
    }
    std::ofstream file(o.csv_path, std::ios::binary);
    if (!file) throw DomainError("cannot write " + o.csv_path);
    file << emit(rows, Format::csv);
  }
  out << emit(rows, format_of(o));
}

void run_matrix(const Options& o, std::ostream& out) {
  const auto m = transition_matrix(o.matrix_n, basis_arg(o.from), basis_arg(o.to));
  out << emit(m, o.csv ? Format::csv : format_of(o));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for palindromic polynomials", "palin"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Positivity report for a polynomial");
  analyze_cmd->add_option("poly", o.poly, "Polynomial, e.g. \"1+4q+q^2\"")->required();
  analyze_cmd->add_option("--darga", o.darga, "Analyze as a member of P_n (default: darga of the input)");
  analyze_cmd->add_flag("--json", o.json, "JSON output");

  auto* convert_cmd = app.add_subcommand("convert", "Coordinates in the S, A or B basis");
  convert_cmd->add_option("poly", o.poly, "Polynomial")->required();
  convert_cmd->add_option("--darga", o.darga, "darga n of the space P_n (default: darga of the input)");
  convert_cmd->add_option("--to", o.to, "Target basis S|A|B")->required();
  convert_cmd->add_flag("--json", o.json, "JSON output");

  auto* product_cmd = app.add_subcommand("product", "Multiply two polynomials");
  product_cmd->add_option("polyA", o.poly, "First factor")->required();
  product_cmd->add_option("polyB", o.poly_b, "Second factor")->required();
  product_cmd->add_option("--basis", o.basis, "Report product coordinates in S|A|B");
  product_cmd->add_flag("--json", o.json, "JSON output");

  auto* family_cmd = app.add_subcommand("family", "Generate a family member");
  family_cmd->add_option("name", o.family, "chain|boolean|gaussian|partition|almkvist|eulerian|narayana|derangement")
      ->required();
  family_cmd->add_option("params", o.params, "Integer parameters")->required();
  family_cmd->add_flag("--json", o.json, "JSON coefficient-list output");

  auto* scan_cmd = app.add_subcommand("scan", "Scan f_{n,r} over a grid");
  scan_cmd->add_option("--r", o.r_range, "r range a..b")->required();
  scan_cmd->add_option("--n", o.n_range, "n range a..b")->required();
  scan_cmd->add_option("--csv", o.csv_path, "Also write CSV to this path ('-' for stdout only)");
  scan_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  scan_cmd->add_flag("--json", o.json, "JSON output");

  auto* matrix_cmd = app.add_subcommand("matrix", "Transition matrix M(from, to) on P_n");
  matrix_cmd->add_option("n", o.matrix_n, "darga")->required();
  matrix_cmd->add_option("from", o.from, "S|A|B")->required();
  matrix_cmd->add_option("to", o.to, "S|A|B")->required();
  matrix_cmd->add_flag("--csv", o.csv, "Row-major CSV output");
  matrix_cmd->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) run_analyze(o, out);
    else if (*convert_cmd) run_convert(o, out);
    else if (*product_cmd) run_product(o, out);
    else if (*family_cmd) run_family(o, out);
    else if (*scan_cmd) run_scan(o, out);
    else if (*matrix_cmd) run_matrix(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace palin::cli
