#include "fgc/group_io.hpp"

#include <fstream>
#include <sstream>

#include "fgc/descriptor.hpp"
#include "fgc/error.hpp"

namespace fgc {

namespace {

// Meaningful lines: comments and blanks stripped, CR trimmed.
std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

FiniteGroup parse_cayley(const std::vector<std::string>& lines, i64 n, const std::string& label) {
  if (n < 1) fail(ErrorCode::Parse, "group file: malformed header: order must be >= 1");
  if (i64(lines.size()) != n + 1)
    fail(ErrorCode::Parse, "group file: malformed: expected " + std::to_string(n) +
                               " table rows, found " + std::to_string(lines.size() - 1));
  std::vector<std::vector<i64>> rows;
  rows.reserve(n);
  for (i64 i = 1; i <= n; ++i) {
    std::istringstream row(lines[std::size_t(i)]);
    std::vector<i64> values;
    i64 v;
    while (row >> v) values.push_back(v);
    if (!row.eof())
      fail(ErrorCode::Parse,
           "group file: malformed: non-integer token in row " + std::to_string(i - 1));
    rows.push_back(std::move(values));
  }
  return FiniteGroup::from_rows(rows, label);
}

std::vector<int> parse_cycles(const std::string& line, int degree) {
  std::vector<int> image(degree);
  for (int i = 0; i < degree; ++i) image[i] = i;
  std::vector<char> moved(degree, 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < line.size()) {
    if (line[pos] != '(')
      fail(ErrorCode::Parse, "group file: malformed cycle: expected '(' in '" + line + "'");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < line.size() && line[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == start)
        fail(ErrorCode::Parse, "group file: malformed cycle: expected a point in '" + line + "'");
      i64 pt = std::stoll(line.substr(start, pos - start));
      if (pt < 1 || pt > degree)
        fail(ErrorCode::Parse, "group file: cycle point " + std::to_string(pt) +
                                   " outside degree " + std::to_string(degree));
      if (moved[pt - 1])
        fail(ErrorCode::Parse, "group file: point " + std::to_string(pt) + " repeated in '" +
                                   line + "'");
      moved[pt - 1] = 1;
      cycle.push_back(int(pt - 1));
      skip_ws();
      if (pos < line.size() && line[pos] == ',') ++pos;  // commas between points tolerated
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return image;
}

FiniteGroup parse_perm(const std::vector<std::string>& lines, i64 degree,
                       const std::string& label) {
  if (degree < 1 || degree > 5000)
    fail(ErrorCode::Parse, "group file: malformed header: bad permutation degree");
  std::vector<std::vector<int>> gens;
  for (std::size_t i = 1; i < lines.size(); ++i)
    gens.push_back(parse_cycles(lines[i], int(degree)));
  return build_from_permutations(gens, int(degree), label);
}

}  // namespace

FiniteGroup parse_group(std::istream& in, const std::string& label) {
  auto lines = read_lines(in);
  if (lines.empty()) fail(ErrorCode::Parse, "group file: malformed: empty input");
  std::istringstream header(lines[0]);
  std::string format;
  i64 param = 0;
  header >> format >> param;
  if (header.fail())
    fail(ErrorCode::Parse, "group file: malformed header '" + lines[0] + "'");
  if (format == "cayley") return parse_cayley(lines, param, label);
  if (format == "perm") return parse_perm(lines, param, label);
  fail(ErrorCode::Parse, "group file: malformed header: unknown format '" + format + "'");
}

FiniteGroup parse_group_text(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  return parse_group(in, label);
}

FiniteGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "group file: cannot open '" + path + "'");
  return parse_group(in, "file(" + path + ")");
}

void serialize_group(const FiniteGroup& g, std::ostream& out) {
  out << "# " << g.label() << "\n";
  out << "cayley " << g.order() << "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.op(i, j);
    }
    out << "\n";
  }
}

std::string serialize_group_text(const FiniteGroup& g) {
  std::ostringstream out;
  serialize_group(g, out);
  return out.str();
}

void serialize_group_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!out) fail(ErrorCode::Io, "group file: cannot write '" + path + "'");
  serialize_group(g, out);
  if (!out) fail(ErrorCode::Io, "group file: write failed for '" + path + "'");
}

}  // namespace fgc
