#pragma once

#include "palin/basis.hpp"
#include "palin/polynomial.hpp"
#include "palin/scan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace palin {

/// Everything the positivity analytics say about one polynomial viewed as a
/// member of P_n(q).
struct AnalysisReport {
  Polynomial polynomial;
  std::size_t darga = 0;
  bool palindromic = false;
  bool unimodal = false;
  bool log_concave = false;
  bool a_positive = false;
  bool b_positive = false;
  bool b_strictly_positive = false;
  std::optional<CoordinateVector> a_coords;  // absent unless f is in P_n(q)
  std::optional<CoordinateVector> gamma;
  std::vector<std::size_t> newton_violations;
  std::size_t real_root_count = 0;
  bool real_rooted = false;
};

/// n defaults to darga(f). Throws DomainError for the zero polynomial.
AnalysisReport analyze(const Polynomial& f, std::optional<std::size_t> n = std::nullopt);

enum class Format { text, json, csv };

/// Byte-stable renderings. Every text/csv rendering ends with a newline;
/// json renderings are a single line followed by a newline.
std::string emit(const AnalysisReport& report, Format format);
std::string emit(const std::vector<ScanRow>& rows, Format format);
std::string emit(const TransitionMatrix& matrix, Format format);
std::string emit(const CoordinateVector& v, Format format);

/// {"darga": n, "basis": "A", "entries": ["1", ...]}
std::string to_json(const CoordinateVector& v);
CoordinateVector coordinate_vector_from_json(const std::string& json);

/// "(1, 0, 3)"
std::string format_entries(const std::vector<Coefficient>& entries);

}  // namespace palin
