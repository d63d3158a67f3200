#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcwall {

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class TableParseError : public std::runtime_error {
 public:
  TableParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Two-column table (abscissa, value) with linear interpolation between rows.
/// Queries outside [front, back] throw OutOfRange; nothing is extrapolated.
///
/// Text format: optional `#` comment lines, one header line naming both
/// columns with their units (e.g. `temperature_C  k_c_-`), then one row per
/// line, whitespace or comma separated, abscissae strictly increasing.
class Table1D {
 public:
  Table1D() = default;
  Table1D(std::string header, std::vector<double> x, std::vector<double> y);

  static Table1D parse(std::string_view text, const std::string& source = "<table>");
  static Table1D load(const std::filesystem::path& path);

  double operator()(double x) const;
  /// Slope of the segment containing x (right-hand segment at breakpoints).
  double slope(double x) const;

  std::span<const double> x() const { return x_; }
  std::span<const double> y() const { return y_; }
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  const std::string& header() const { return header_; }

 private:
  std::size_t segment(double x) const;

  std::string header_;
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Named collection of material fixture tables.
class FixtureSet {
 public:
  /// Tables compiled in from data/fixtures.
  static const FixtureSet& builtin();
  /// Every *.tsv file in `dir`, keyed by file stem.
  static FixtureSet from_directory(const std::filesystem::path& dir);

  const Table1D& at(const std::string& name) const;
  bool contains(const std::string& name) const { return tables_.count(name) != 0; }
  std::vector<std::string> names() const;

  void insert(std::string name, Table1D table) { tables_[std::move(name)] = std::move(table); }

 private:
  std::map<std::string, Table1D> tables_;
};

namespace detail {
struct EmbeddedFixture {
  const char* name;
  const char* text;
};
const std::vector<EmbeddedFixture>& embedded_fixtures();
}  // namespace detail

}  // namespace rcwall
