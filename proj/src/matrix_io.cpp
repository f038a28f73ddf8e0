#include "specnorm/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace specnorm {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
  throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

double parse_real(const std::string& tok, std::size_t lineno) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects a leading +
  double v = 0.0;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    fail(lineno, "cannot parse '" + tok + "' as a real number");
  }
  if (!std::isfinite(v)) fail(lineno, "non-finite value '" + tok + "'");
  return v;
}

std::size_t parse_count(const std::string& tok, std::size_t lineno) {
  std::size_t v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    fail(lineno, "cannot parse '" + tok + "' as a nonnegative integer");
  }
  return v;
}

// Feeds whitespace-separated tokens from content lines, skipping comments
// and blank lines while tracking the physical line number.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in, std::size_t lineno)
      : in_(in), lineno_(lineno) {}

  bool next_line_tokens(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '%') continue;
      tokens = split_ws(line);
      if (tokens.empty()) continue;
      return true;
    }
    return false;
  }

  bool next_token(std::string& tok) {
    while (queue_pos_ >= queue_.size()) {
      if (!next_line_tokens(queue_)) return false;
      queue_pos_ = 0;
    }
    tok = queue_[queue_pos_++];
    return true;
  }

  bool has_more_tokens() {
    std::string tok;
    if (!next_token(tok)) return false;
    --queue_pos_;
    return true;
  }

  std::size_t lineno() const { return lineno_; }

 private:
  std::istream& in_;
  std::size_t lineno_;
  std::vector<std::string> queue_;
  std::size_t queue_pos_ = 0;
};

}  // namespace

Matrix read_matrix_market(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) fail(1, "empty file");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const std::vector<std::string> h = split_ws(lowercase(header));
  if (h.size() < 5 || h[0] != "%%matrixmarket" || h[1] != "matrix") {
    fail(1, "malformed Matrix Market header");
  }
  const std::string& format = h[2];
  const std::string& field = h[3];
  const std::string& symmetry = h[4];
  if (format != "coordinate" && format != "array") {
    fail(1, "unsupported format '" + format + "'");
  }
  if (field != "real" && field != "integer") {
    fail(1, "unsupported field '" + field + "' (only real and integer)");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    fail(1, "unsupported symmetry '" + symmetry + "' (only general and symmetric)");
  }
  const bool symmetric = symmetry == "symmetric";

  TokenReader reader(in, 1);
  std::vector<std::string> size_line;
  if (!reader.next_line_tokens(size_line)) {
    fail(reader.lineno() + 1, "missing size line");
  }

  if (format == "coordinate") {
    if (size_line.size() != 3) fail(reader.lineno(), "size line must be 'rows cols nnz'");
    const std::size_t n = parse_count(size_line[0], reader.lineno());
    const std::size_t m = parse_count(size_line[1], reader.lineno());
    const std::size_t nnz = parse_count(size_line[2], reader.lineno());
    if (symmetric && n != m) fail(reader.lineno(), "symmetric matrix must be square");
    std::vector<Triplet> entries;
    entries.reserve(symmetric ? 2 * nnz : nnz);
    std::vector<std::string> toks;
    for (std::size_t k = 0; k < nnz; ++k) {
      if (!reader.next_line_tokens(toks)) {
        fail(reader.lineno() + 1, "expected " + std::to_string(nnz) +
                                      " entries, file ended after " +
                                      std::to_string(k));
      }
      if (toks.size() != 3) fail(reader.lineno(), "entry must be 'row col value'");
      const std::size_t i = parse_count(toks[0], reader.lineno());
      const std::size_t j = parse_count(toks[1], reader.lineno());
      const double v = parse_real(toks[2], reader.lineno());
      if (i < 1 || i > n || j < 1 || j > m) {
        fail(reader.lineno(), "index (" + toks[0] + ", " + toks[1] +
                                  ") outside declared " + std::to_string(n) +
                                  "x" + std::to_string(m));
      }
      if (symmetric && j > i) {
        fail(reader.lineno(), "symmetric coordinate entries must satisfy row >= col");
      }
      entries.push_back({i - 1, j - 1, v});
      if (symmetric && i != j) entries.push_back({j - 1, i - 1, v});
    }
    if (reader.next_line_tokens(toks)) {
      fail(reader.lineno(), "unexpected data after the declared entries");
    }
    return Matrix::from_triplets(n, m, std::move(entries));
  }

  // array
  if (size_line.size() != 2) fail(reader.lineno(), "size line must be 'rows cols'");
  const std::size_t n = parse_count(size_line[0], reader.lineno());
  const std::size_t m = parse_count(size_line[1], reader.lineno());
  if (n < 1 || m < 1) fail(reader.lineno(), "dimensions must be at least 1");
  if (symmetric && n != m) fail(reader.lineno(), "symmetric matrix must be square");
  Vector values(n * m, 0.0);
  std::string tok;
  if (symmetric) {
    // Lower triangle including the diagonal, column by column.
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = j; i < n; ++i) {
        if (!reader.next_token(tok)) fail(reader.lineno() + 1, "file ended before all array values were read");
        const double v = parse_real(tok, reader.lineno());
        values[i * m + j] = v;
        values[j * m + i] = v;
      }
    }
  } else {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!reader.next_token(tok)) fail(reader.lineno() + 1, "file ended before all array values were read");
        values[i * m + j] = parse_real(tok, reader.lineno());
      }
    }
  }
  if (reader.has_more_tokens()) {
    fail(reader.lineno(), "unexpected data after the declared entries");
  }
  return Matrix::dense(n, m, std::move(values));
}

Matrix read_dense_csv(std::istream& in) {
  std::vector<Vector> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Vector row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      std::string cell = line.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      // trim surrounding spaces
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) fail(lineno, "empty cell");
      cell = cell.substr(b, e - b + 1);
      row.push_back(parse_real(cell, lineno));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(lineno, "row has " + std::to_string(row.size()) +
                       " cells, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(lineno == 0 ? 1 : lineno, "no data rows");
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  Vector values;
  values.reserve(n * m);
  for (const Vector& r : rows) values.insert(values.end(), r.begin(), r.end());
  return Matrix::dense(n, m, std::move(values));
}

Matrix read_matrix(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  switch (format) {
    case MatrixFormat::kMatrixMarket: return read_matrix_market(in);
    case MatrixFormat::kDenseCsv: return read_dense_csv(in);
  }
  throw ParseError("unknown matrix format");
}

namespace {

// Shortest decimal that round-trips to the same double.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_matrix_market(const Matrix& m, std::ostream& out) {
  if (m.is_sparse()) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << m.n_rows() << " " << m.n_cols() << " " << m.nnz() << "\n";
    const auto& row_ptr = m.row_ptr();
    const auto& col_idx = m.col_idx();
    const auto& val = m.values();
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
        out << i + 1 << " " << col_idx[k] + 1 << " " << format_double(val[k])
            << "\n";
      }
    }
  } else {
    out << "%%MatrixMarket matrix array real general\n";
    out << m.n_rows() << " " << m.n_cols() << "\n";
    const auto& values = m.dense_values();
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      for (std::size_t i = 0; i < m.n_rows(); ++i) {
        out << format_double(values[i * m.n_cols() + j]) << "\n";
      }
    }
  }
}

void write_matrix_market(const Matrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_matrix_market(m, out);
}

}  // namespace specnorm
