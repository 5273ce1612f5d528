#include "palin/text.hpp"

#include "palin/polynomial.hpp"

#include "json.hpp"

#include <cctype>
#include <map>

namespace palin {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::map<std::size_t, Coefficient> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto [coeff, power] = term();
      terms[power] += negative ? Coefficient(-coeff) : coeff;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    if (terms.empty()) return {};
    const std::size_t lo = terms.begin()->first;
    const std::size_t hi = terms.rbegin()->first;
    std::vector<Coefficient> dense(hi - lo + 1);
    for (auto& [p, c] : terms) dense[p - lo] = c;
    return Polynomial(lo, std::move(dense));
  }

 private:
  std::pair<Coefficient, std::size_t> term() {
    skip_space();
    const std::size_t start = pos_;
    Coefficient coeff = 1;
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      has_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'q') fail("expected 'q' after '*'");
      }
    }
    std::size_t power = 0;
    if (!at_end() && peek() == 'q') {
      ++pos_;
      power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        power = uint_value();
      }
    } else if (!has_coeff) {
      pos_ = start;
      fail(at_end() ? "expected a term" : std::string("unexpected '") + peek() + "'");
    }
    return {coeff, power};
  }

  Coefficient rational() {
    Integer num(digits(), 10);
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      Integer den(digits(), 10);
      if (den == 0) throw ParseError("zero denominator", at);
      Coefficient c(num, den);
      c.canonicalize();
      return c;
    }
    return Coefficient(num);
  }

  std::size_t uint_value() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) throw ParseError("exponent too large", at);
    return std::stoul(d);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return polynomial_from_json(text);
  return TermParser(text).parse();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const Coefficient& c = f.coeffs()[k];
    if (c == 0) continue;
    const std::size_t power = f.ord() + k;
    const Coefficient mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (power == 0 || mag != 1) out += to_string(mag);
    if (power >= 1) out += 'q';
    if (power >= 2) out += '^' + std::to_string(power);
  }
  return out;
}

std::string to_json(const Polynomial& f) {
  nlohmann::ordered_json j;
  j["ord"] = f.ord();
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) j["coeffs"].push_back(to_string(c));
  return j.dump();
}

Polynomial polynomial_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("ord") || !j.contains("coeffs") || !j["ord"].is_number_unsigned() ||
      !j["coeffs"].is_array())
    throw ParseError("expected {\"ord\": uint, \"coeffs\": [...]}", 0);
  std::vector<Coefficient> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string())
      coeffs.push_back(parse_coefficient(c.get<std::string>()));
    else if (c.is_number_integer())
      coeffs.emplace_back(Integer(std::to_string(c.get<long long>()), 10));
    else
      throw ParseError("coefficients must be rational strings", 0);
  }
  return Polynomial(j["ord"].get<std::size_t>(), std::move(coeffs));
}

}  // namespace palin
