#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stablejones {

// One transcribed table row. Rows of the six-vertex table carry no c columns.
struct TableRow {
  std::string graph_id;                   // "G^9_1", "Gv^6_13"
  std::optional<std::array<long, 5>> c;   // c1, c2, c3, c41, c42
  std::array<long, 5> C{};                // C1..C5, C1 = 1 - c1 + c2
  std::string link_name;
  std::array<long, 6> phi{};              // coefficients of q^0..q^5
  std::string source;                     // text of the last "# source:" line
  std::string origin;                     // file:line

  // Superscript of the link name ("10^4_17" -> 4, "6_1^2" -> 2, "8_16" -> 1);
  // 0 when the name does not say (e.g. "L11a520").
  int link_components() const;
  // e for "G^e_i", -1 otherwise.
  int edge_group() const;
};

// Columns: graph_id,c1,c2,c3,c41,c42,C1..C5,link_name,phi0..phi5. Lines
// starting with '#' are comments; "# source: ..." sets the provenance of the
// rows that follow. Throws FixtureMissing on a missing file and ParseError on
// malformed rows.
std::vector<TableRow> parse_table_fixture(std::string_view text, const std::string& origin);
std::vector<TableRow> load_table_fixture(const std::string& path);

struct AtlasKey {
  std::string pattern;  // "c41", "c55", "c619"
  std::string row;      // graph_id of the row that pins it
};
std::vector<AtlasKey> load_atlas_keys(const std::string& path);

// $STABLE_JONES_DATA if set, else the data directory of the source tree.
std::string default_data_dir();

}  // namespace stablejones
