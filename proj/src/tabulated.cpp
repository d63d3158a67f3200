#include "rcwall/tabulated.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rcwall {

Table1D::Table1D(std::string header, std::vector<double> x, std::vector<double> y)
    : header_(std::move(header)), x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.size() < 2) {
    throw std::invalid_argument("table '" + header_ + "' needs at least two rows");
  }
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1])) {
      throw std::invalid_argument("table '" + header_ + "' abscissae must be strictly increasing");
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_number(std::string_view s, double& v) {
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  return ec == std::errc{} && p == end && std::isfinite(v);
}

}  // namespace

Table1D Table1D::parse(std::string_view text, const std::string& source) {
  std::string header;
  std::vector<double> xs, ys;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (header.empty()) {
      if (fields.size() != 2) throw TableParseError(source, line_no, "header must name two columns");
      header = std::string(line);
      continue;
    }
    if (fields.size() != 2) throw TableParseError(source, line_no, "expected two columns");
    double x = 0.0, y = 0.0;
    if (!parse_number(fields[0], x) || !parse_number(fields[1], y)) {
      throw TableParseError(source, line_no, "malformed number");
    }
    if (!xs.empty() && !(x > xs.back())) {
      throw TableParseError(source, line_no, "abscissae must be strictly increasing");
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (header.empty()) throw TableParseError(source, line_no, "missing header line");
  if (xs.size() < 2) throw TableParseError(source, line_no, "need at least two rows");
  return Table1D(std::move(header), std::move(xs), std::move(ys));
}

Table1D Table1D::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

std::size_t Table1D::segment(double x) const {
  if (!(x >= x_.front() && x <= x_.back())) {
    std::ostringstream msg;
    msg << "'" << header_ << "' queried at " << x << ", outside [" << x_.front() << ", "
        << x_.back() << "]";
    throw OutOfRange(msg.str());
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - x_.begin());
  if (i == 0) i = 1;
  if (i >= x_.size()) i = x_.size() - 1;
  return i - 1;
}

double Table1D::operator()(double x) const {
  const std::size_t i = segment(x);
  const double t = (x - x_[i]) / (x_[i + 1] - x_[i]);
  return y_[i] + t * (y_[i + 1] - y_[i]);
}

double Table1D::slope(double x) const {
  const std::size_t i = segment(x);
  return (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
}

const FixtureSet& FixtureSet::builtin() {
  static const FixtureSet set = [] {
    FixtureSet s;
    for (const auto& f : detail::embedded_fixtures()) {
      s.insert(f.name, Table1D::parse(f.text, std::string(f.name) + ".tsv"));
    }
    return s;
  }();
  return set;
}

FixtureSet FixtureSet::from_directory(const std::filesystem::path& dir) {
  FixtureSet s;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".tsv") {
      s.insert(entry.path().stem().string(), Table1D::load(entry.path()));
    }
  }
  return s;
}

const Table1D& FixtureSet::at(const std::string& name) const {
  auto it = tables_.find(name);
  if (it == tables_.end()) throw std::out_of_range("no fixture table named '" + name + "'");
  return it->second;
}

std::vector<std::string> FixtureSet::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : tables_) out.push_back(k);
  return out;
}

}  // namespace rcwall
