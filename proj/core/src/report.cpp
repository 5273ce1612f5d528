#include "palin/report.hpp"

#include "palin/positivity.hpp"
#include "palin/sturm.hpp"
#include "palin/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace palin {

using ordered_json = nlohmann::ordered_json;

AnalysisReport analyze(const Polynomial& f, std::optional<std::size_t> n) {
  if (f.is_zero()) throw DomainError("cannot analyze the zero polynomial");
  AnalysisReport r;
  r.polynomial = f;
  r.darga = n.value_or(darga(f));
  r.palindromic = is_palindromic(f, r.darga);
  r.unimodal = is_unimodal(f);
  r.log_concave = f.all_nonnegative() && is_log_concave(f);
  if (r.palindromic) {
    r.a_coords = coords(f, r.darga, Basis::A);
    r.gamma = gamma_vector(f, r.darga);
    r.a_positive = r.a_coords->all_nonnegative();
    r.b_positive = r.gamma->all_nonnegative();
    r.b_strictly_positive = r.gamma->all_positive();
  }
  r.newton_violations = newton_violations(f);
  const RootCount roots = real_root_count(f);
  r.real_root_count = roots.count;
  r.real_rooted = roots.real_rooted;
  return r;
}

std::string format_entries(const std::vector<Coefficient>& entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? ", " : "") + to_string(entries[i]);
  return out + ")";
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

ordered_json coordinate_json(const CoordinateVector& v) {
  ordered_json j;
  j["darga"] = v.darga;
  j["basis"] = std::string(basis_name(v.basis));
  j["entries"] = ordered_json::array();
  for (const auto& c : v.entries) j["entries"].push_back(to_string(c));
  return j;
}

std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

std::string index_set(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + std::to_string(idx[i]);
  return out + "}";
}

std::string violation_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

std::string to_json(const CoordinateVector& v) { return coordinate_json(v).dump(); }

CoordinateVector coordinate_vector_from_json(const std::string& json) {
  const auto j = nlohmann::json::parse(json);
  const auto basis = parse_basis(j.at("basis").get<std::string>());
  if (!basis) throw DomainError("unknown basis in coordinate vector");
  CoordinateVector v{j.at("darga").get<std::size_t>(), *basis, {}};
  for (const auto& e : j.at("entries")) v.entries.push_back(parse_coefficient(e.get<std::string>()));
  if (v.entries.size() != space_dim(v.darga)) throw DomainError("coordinate vector has the wrong length");
  return v;
}

std::string emit(const AnalysisReport& r, Format format) {
  if (format == Format::json) {
    ordered_json j;
    j["polynomial"] = to_string(r.polynomial);
    j["darga"] = r.darga;
    j["palindromic"] = r.palindromic;
    j["unimodal"] = r.unimodal;
    j["log_concave"] = r.log_concave;
    j["a_positive"] = r.a_positive;
    j["b_positive"] = r.b_positive;
    j["b_strictly_positive"] = r.b_strictly_positive;
    j["a_coords"] = r.a_coords ? coordinate_json(*r.a_coords) : ordered_json(nullptr);
    j["gamma"] = r.gamma ? coordinate_json(*r.gamma) : ordered_json(nullptr);
    j["newton_violations"] = r.newton_violations;
    j["real_root_count"] = r.real_root_count;
    j["real_rooted"] = r.real_rooted;
    return j.dump() + "\n";
  }
  const auto coords_str = [](const std::optional<CoordinateVector>& v) {
    return v ? format_entries(v->entries) : std::string("-");
  };
  return aligned({
      {"polynomial", to_string(r.polynomial)},
      {"darga", std::to_string(r.darga)},
      {"palindromic", bool_str(r.palindromic)},
      {"unimodal", bool_str(r.unimodal)},
      {"log_concave", bool_str(r.log_concave)},
      {"a_positive", bool_str(r.a_positive)},
      {"b_positive", bool_str(r.b_positive)},
      {"b_strictly_positive", bool_str(r.b_strictly_positive)},
      {"a_coords", coords_str(r.a_coords)},
      {"gamma", coords_str(r.gamma)},
      {"newton_violations", index_set(r.newton_violations)},
      {"real_root_count", std::to_string(r.real_root_count)},
      {"real_rooted", bool_str(r.real_rooted)},
  });
}

std::string emit(const std::vector<ScanRow>& rows, Format format) {
  static const std::vector<std::string> header{"r", "n", "darga", "palindromic", "unimodal", "lambda",
                                               "first_violation_index"};
  std::vector<std::vector<std::string>> table;
  for (const auto& row : rows)
    table.push_back({std::to_string(row.r), std::to_string(row.n), std::to_string(row.darga), bool_str(row.palindromic),
                     bool_str(row.unimodal), bool_str(row.lambda), violation_str(row.first_violation_index)});

  if (format == Format::json) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json o;
      o["r"] = row.r;
      o["n"] = row.n;
      o["darga"] = row.darga;
      o["palindromic"] = row.palindromic;
      o["unimodal"] = row.unimodal;
      o["lambda"] = row.lambda;
      o["first_violation_index"] = row.first_violation_index ? ordered_json(*row.first_violation_index) : ordered_json(nullptr);
      j.push_back(std::move(o));
    }
    return j.dump() + "\n";
  }

  std::string out;
  if (format == Format::csv) {
    const auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
      out += "\n";
    };
    line(header);
    for (const auto& cells : table) line(cells);
    return out;
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& cells : table) width[c] = std::max(width[c], cells[c].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string l;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) l += "  ";
      l += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    while (!l.empty() && l.back() == ' ') l.pop_back();
    out += l + "\n";
  };
  line(header);
  for (const auto& cells : table) line(cells);
  return out;
}

std::string emit(const TransitionMatrix& m, Format format) {
  const std::size_t d = m.dim();
  if (format == Format::json) {
    ordered_json j;
    j["darga"] = m.darga();
    j["from"] = std::string(basis_name(m.from()));
    j["to"] = std::string(basis_name(m.to()));
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < d; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < d; ++k) row.push_back(to_string(m(i, k)));
      j["rows"].push_back(std::move(row));
    }
    return j.dump() + "\n";
  }
  std::string out;
  if (format == Format::csv) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) out += (k ? "," : "") + to_string(m(i, k));
      out += "\n";
    }
    return out;
  }
  // Text: lower triangle only, right-aligned per column.
  std::vector<std::size_t> width(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k <= i; ++k) width[k] = std::max(width[k], to_string(m(i, k)).size());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      const std::string cell = to_string(m(i, k));
      out += (k ? " " : "") + std::string(width[k] - cell.size(), ' ') + cell;
    }
    out += "\n";
  }
  return out;
}

std::string emit(const CoordinateVector& v, Format format) {
  if (format == Format::json) return to_json(v) + "\n";
  if (format == Format::csv) {
    std::string out;
    for (std::size_t i = 0; i < v.entries.size(); ++i) out += (i ? "," : "") + to_string(v.entries[i]);
    return out + "\n";
  }
  return aligned({
      {"darga", std::to_string(v.darga)},
      {"basis", std::string(basis_name(v.basis))},
      {"entries", format_entries(v.entries)},
  });
}

}  // namespace palin
