#include "lagmesh/reference.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace lagmesh {

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ConfigError("empty rational literal");

  auto parse_int = [](const std::string& part, const char* what) -> long long {
    if (part.empty() || part.find_first_not_of("0123456789-+") != std::string::npos) {
      throw ConfigError(std::string("malformed ") + what + " in rational literal");
    }
    try {
      return std::stoll(part);
    } catch (const std::exception&) {
      throw ConfigError(std::string("out-of-range ") + what + " in rational literal");
    }
  };

  Rational r;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    r.num = parse_int(s.substr(0, slash), "numerator");
    r.den = parse_int(s.substr(slash + 1), "denominator");
    if (r.den == 0) throw ConfigError("rational literal with zero denominator");
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 17) throw ConfigError("decimal literal too long for exact rational");
    const bool negative = s[0] == '-';
    const long long intpart = std::llabs(parse_int(s.substr(0, dot).empty() ? "0" : s.substr(0, dot), "integer part"));
    long long scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const long long fracpart = frac.empty() ? 0 : parse_int(frac, "fraction");
    r.num = intpart * scale + fracpart;
    if (negative) r.num = -r.num;
    r.den = scale;
  } else {
    r.num = parse_int(s, "integer");
    r.den = 1;
  }

  if (r.den < 0) {
    r.den = -r.den;
    r.num = -r.num;
  }
  const long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::string Rational::canonical() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

BigReal Rational::value(const PrecisionContext& ctx) const {
  return ctx.from_ratio(static_cast<long>(num), static_cast<long>(den));
}

ReferenceTable ReferenceTable::parse(std::istream& in) {
  ReferenceTable table;
  std::string line;
  long line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ConfigError("reference data line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    if (kind == "ref") {
      std::string lambda, digits;
      long state = 0;
      if (!(fields >> lambda >> state >> digits)) fail("ref needs <lambda> <state> <digits>");
      ReferenceEntry entry;
      entry.lambda_key = Rational::parse(lambda).canonical();
      entry.state = state;
      entry.digits = DecimalString::parse(digits);
      table.entries_.push_back(std::move(entry));
    } else if (kind == "marker") {
      std::string lambda;
      long state = 0, mesh = 0;
      int place = 0;
      if (!(fields >> lambda >> state >> mesh >> place)) {
        fail("marker needs <lambda> <state> <mesh-points> <decimal-place>");
      }
      const std::string key = Rational::parse(lambda).canonical();
      ReferenceEntry* owner = nullptr;
      for (auto& entry : table.entries_) {
        if (entry.lambda_key == key && entry.state == state) owner = &entry;
      }
      if (!owner) fail("marker before its ref line");
      owner->markers.push_back(Marker{mesh, place});
    } else {
      fail("unknown record '" + kind + "'");
    }
  }
  return table;
}

ReferenceTable ReferenceTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open reference data file: " + path);
  return parse(in);
}

const ReferenceTable& ReferenceTable::embedded() {
  static const ReferenceTable table = [] {
    std::istringstream in(embedded_reference_text());
    return parse(in);
  }();
  return table;
}

const ReferenceEntry* ReferenceTable::find(const std::string& lambda_key, long state) const {
  for (const auto& entry : entries_) {
    if (entry.lambda_key == lambda_key && entry.state == state) return &entry;
  }
  return nullptr;
}

const ReferenceEntry& ReferenceTable::require(const std::string& lambda_key, long state) const {
  const ReferenceEntry* entry = find(lambda_key, state);
  if (!entry) {
    throw MissingReference("no reference expansion for lambda = " + lambda_key + ", state " +
                           std::to_string(state));
  }
  return *entry;
}

int reference_check(const ReferenceTable& table, const std::string& lambda_key, long state,
                    const DecimalString& digits) {
  return matched_decimal_places(table.require(lambda_key, state).digits, digits);
}

}  // namespace lagmesh
