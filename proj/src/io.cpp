#include "orthopath/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace orthopath {

namespace {

std::ifstream open_in(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw std::runtime_error("cannot read " + filename);
  return in;
}

std::ofstream open_out(const std::string& filename) {
  std::ofstream out(filename, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + filename);
  return out;
}

std::vector<double> parse_csv_row(const std::string& line, const std::string& filename) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      row.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw std::runtime_error("bad numeric cell '" + cell + "' in " + filename);
    }
  }
  return row;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

LatticePath load_path_csv(const std::string& filename) {
  auto in = open_in(filename);
  std::vector<double> values;
  std::size_t dim = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto row = parse_csv_row(line, filename);
    if (dim == 0) dim = row.size();
    if (row.size() != dim) {
      throw std::runtime_error("ragged row in " + filename);
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  if (dim == 0) throw std::runtime_error("empty path file " + filename);
  return LatticePath(static_cast<int>(dim), std::move(values));
}

void save_path_csv(const LatticePath& path, const std::string& filename) {
  auto out = open_out(filename);
  for (std::int64_t k = 0; k <= path.length(); ++k) {
    for (int c = 0; c < path.dim(); ++c) {
      if (c) out << ',';
      out << format_double(path.at(k, c));
    }
    out << '\n';
  }
}

LatticePath load_path_json(const std::string& filename) {
  auto in = open_in(filename);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (!doc.is_array() || doc.empty()) {
    throw std::runtime_error("path JSON must be a nonempty array of arrays");
  }
  std::size_t dim = 0;
  std::vector<double> values;
  for (const auto& row : doc) {
    if (!row.is_array()) throw std::runtime_error("path JSON must be an array of arrays");
    if (dim == 0) dim = row.size();
    if (row.size() != dim || dim == 0) throw std::runtime_error("ragged path JSON");
    for (const auto& v : row) values.push_back(v.get<double>());
  }
  return LatticePath(static_cast<int>(dim), std::move(values));
}

void save_path_json(const LatticePath& path, const std::string& filename) {
  auto out = open_out(filename);
  nlohmann::json doc = nlohmann::json::array();
  for (std::int64_t k = 0; k <= path.length(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < path.dim(); ++c) row.push_back(path.at(k, c));
    doc.push_back(std::move(row));
  }
  out << doc.dump() << '\n';
}

CoefficientSeq load_coeffs_csv(const std::string& filename) {
  auto in = open_in(filename);
  std::string line;
  if (!std::getline(in, line) || line.rfind("index,re,im", 0) != 0) {
    throw std::runtime_error("coefficient CSV must start with header index,re,im");
  }
  CoefficientSeq c;
  c.label = filename;
  std::size_t expect = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto row = parse_csv_row(line, filename);
    if (row.size() != 3) throw std::runtime_error("coefficient rows need index,re,im");
    if (static_cast<std::size_t>(row[0]) != expect) {
      throw std::runtime_error("coefficient indices must be consecutive from 0");
    }
    c.c.emplace_back(row[1], row[2]);
    ++expect;
  }
  if (c.c.empty()) throw std::runtime_error("no coefficients in " + filename);
  return c;
}

void save_coeffs_csv(const CoefficientSeq& c, const std::string& filename) {
  auto out = open_out(filename);
  out << "index,re,im\n";
  for (std::int64_t n = 0; n < c.size(); ++n) {
    out << n << ',' << format_double(c.c[n].real()) << ','
        << format_double(c.c[n].imag()) << '\n';
  }
}

}  // namespace orthopath
