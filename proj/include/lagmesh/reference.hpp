#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lagmesh/decimal.hpp"

namespace lagmesh {

// Exact rational parsed from "p", "p/q" or a terminating decimal; the
// canonical string form keys reference lookups.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational parse(std::string_view text);
  std::string canonical() const;
  BigReal value(const PrecisionContext& ctx) const;
};

struct Marker {
  long mesh_points = 0;
  int decimal_place = 0;
};

// One published expansion: exact digit string plus its mesh-size markers.
struct ReferenceEntry {
  std::string lambda_key;
  long state = 0;
  DecimalString digits;
  std::vector<Marker> markers;
};

class ReferenceTable {
 public:
  static ReferenceTable parse(std::istream& in);
  static ReferenceTable load_file(const std::string& path);
  // Compiled-in copy of data/paper_reference.txt.
  static const ReferenceTable& embedded();

  const ReferenceEntry* find(const std::string& lambda_key, long state) const;
  const ReferenceEntry& require(const std::string& lambda_key, long state) const;
  const std::vector<ReferenceEntry>& entries() const { return entries_; }

 private:
  std::vector<ReferenceEntry> entries_;
};

const char* embedded_reference_text();

// Matched decimal places of `digits` against the stored expansion for
// (lambda_key, state); throws MissingReference when absent.
int reference_check(const ReferenceTable& table, const std::string& lambda_key, long state,
                    const DecimalString& digits);

}  // namespace lagmesh
