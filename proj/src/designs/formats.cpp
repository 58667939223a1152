#include <istream>
#include <sstream>

#include "domlab/designs.hpp"
#include "domlab/errors.hpp"

namespace domlab {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<int> ints(const char* what, std::size_t expected = 0) {
    std::string line;
    while (std::getline(in_, line)) {
      const std::size_t start = offset_;
      offset_ += line.size() + 1;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream row(line);
      std::vector<int> out;
      int x = 0;
      while (row >> x) out.push_back(x);
      if (!row.eof()) throw FormatError(std::string(what) + ": non-integer token", start);
      if (expected != 0 && out.size() != expected) {
        throw FormatError(std::string(what) + ": expected " + std::to_string(expected) + " values", start);
      }
      return out;
    }
    throw FormatError(std::string(what) + ": unexpected end of input", offset_);
  }

  std::size_t offset() const { return offset_; }

 private:
  std::istream& in_;
  std::size_t offset_ = 0;
};

template <typename Rows>
void write_rows(std::ostringstream& out, const Rows& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

}  // namespace

std::string format_oa(const OrthogonalArray& a) {
  std::ostringstream out;
  out << a.columns << ' ' << a.symbols << '\n';
  write_rows(out, a.rows);
  return out.str();
}

OrthogonalArray parse_oa(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.ints("orthogonal array header", 2);
  OrthogonalArray a;
  a.columns = header[0];
  a.symbols = header[1];
  if (a.columns < 2 || a.symbols < 1 || a.symbols > 256) throw FormatError("orthogonal array: bad header", 0);
  for (int r = 0; r < a.symbols * a.symbols; ++r) {
    a.rows.push_back(reader.ints("orthogonal array row", static_cast<std::size_t>(a.columns)));
  }
  return a;
}

std::string format_latin_square(const LatinSquare& l) {
  std::ostringstream out;
  const int q = l.order();
  out << q << '\n';
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) out << (j ? " " : "") << l.at(i, j);
    out << '\n';
  }
  return out.str();
}

LatinSquare parse_latin_square(std::istream& in) {
  LineReader reader(in);
  const int q = reader.ints("latin square header", 1)[0];
  if (q < 1 || q > 256) throw FormatError("latin square: bad order", 0);
  std::vector<int> cells;
  for (int i = 0; i < q; ++i) {
    const auto row = reader.ints("latin square row", static_cast<std::size_t>(q));
    cells.insert(cells.end(), row.begin(), row.end());
  }
  try {
    return LatinSquare(q, std::move(cells));
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("latin square: ") + e.what(), reader.offset());
  }
}

std::string format_design(const Design& d) {
  std::ostringstream out;
  out << d.points << ' ' << d.blocks.size() << ' ' << d.block_size << ' ' << d.lambda << '\n';
  write_rows(out, d.blocks);
  return out.str();
}

Design parse_design(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.ints("design header", 4);
  Design d;
  d.points = header[0];
  d.block_size = header[2];
  d.lambda = header[3];
  if (header[1] < 0) throw FormatError("design: negative block count", 0);
  for (int b = 0; b < header[1]; ++b) d.blocks.push_back(reader.ints("design block"));
  return d;
}

}  // namespace domlab
