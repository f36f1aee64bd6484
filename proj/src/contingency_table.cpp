#include "bdt/contingency_table.hpp"

#include <charconv>
#include <string>
#include <utility>

#include "bdt/error.hpp"

namespace bdt {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(Errc::malformed_input, "unterminated quote in CSV line");
  fields.push_back(trim(field));
  return fields;
}

bool parse_count(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

ContingencyTable::ContingencyTable(std::vector<std::string> stratum_headers,
                                   std::vector<std::string> count_headers,
                                   std::vector<Row> rows)
    : stratum_headers_(std::move(stratum_headers)),
      count_headers_(std::move(count_headers)),
      rows_(std::move(rows)) {
  if (count_headers_.empty()) {
    throw Error(Errc::malformed_input, "contingency table needs at least one count column");
  }
  for (const auto& row : rows_) {
    if (row.strata.size() != stratum_headers_.size() ||
        row.counts.size() != count_headers_.size()) {
      throw Error(Errc::malformed_input, "contingency table row has the wrong number of cells");
    }
  }
}

std::size_t ContingencyTable::stratum_index(std::string_view header) const {
  for (std::size_t i = 0; i < stratum_headers_.size(); ++i) {
    if (stratum_headers_[i] == header) return i;
  }
  throw Error(Errc::invalid_parameter, "no stratum column named '" + std::string(header) + "'");
}

std::uint64_t ContingencyTable::count(const std::function<bool(const Row&)>& rows,
                                      const std::function<bool(std::string_view)>& columns) const {
  std::uint64_t sum = 0;
  for (const auto& row : rows_) {
    if (!rows(row)) continue;
    for (std::size_t j = 0; j < count_headers_.size(); ++j) {
      if (columns(count_headers_[j])) sum += row.counts[j];
    }
  }
  return sum;
}

std::uint64_t ContingencyTable::total() const { return count(all_rows(), all_columns()); }

RowPredicate all_rows() {
  return [](const ContingencyTable::Row&) { return true; };
}

RowPredicate stratum_equals(const ContingencyTable& table, std::string_view header,
                            std::string value) {
  const std::size_t idx = table.stratum_index(header);
  return [idx, value = std::move(value)](const ContingencyTable::Row& row) {
    return row.strata[idx] == value;
  };
}

ColumnPredicate all_columns() {
  return [](std::string_view) { return true; };
}

ColumnPredicate column_equals(std::string name) {
  return [name = std::move(name)](std::string_view column) { return column == name; };
}

double table_conditional(const ContingencyTable& table, const RowPredicate& given,
                         const ColumnPredicate& event) {
  const std::uint64_t marginal = table.count(given, all_columns());
  if (marginal == 0) {
    throw Error(Errc::zero_marginal, "table conditional: no observations in the conditioning rows");
  }
  const std::uint64_t joint = table.count(given, event);
  return static_cast<double>(joint) / static_cast<double>(marginal);
}

ContingencyTable read_contingency_csv(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> records;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    records.push_back(split_csv_line(line));
  }
  if (records.size() < 2) {
    throw Error(Errc::malformed_input, "contingency CSV needs a header and at least one row");
  }
  const auto& header = records.front();
  const std::size_t width = header.size();
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw Error(Errc::malformed_input,
                  "contingency CSV row " + std::to_string(r + 1) + " has " +
                      std::to_string(records[r].size()) + " cells, expected " +
                      std::to_string(width));
    }
  }

  // First column from which every remaining column holds counts.
  std::size_t first_count = width;
  while (first_count > 0) {
    bool numeric = true;
    for (std::size_t r = 1; r < records.size() && numeric; ++r) {
      std::uint64_t ignored = 0;
      numeric = parse_count(records[r][first_count - 1], ignored);
    }
    if (!numeric) break;
    --first_count;
  }
  if (first_count == width) {
    throw Error(Errc::malformed_input,
                "contingency CSV: last column does not hold nonnegative integer counts");
  }

  std::vector<std::string> strata(header.begin(), header.begin() + first_count);
  std::vector<std::string> counts(header.begin() + first_count, header.end());
  std::vector<ContingencyTable::Row> rows;
  std::vector<std::string> previous(first_count);
  for (std::size_t r = 1; r < records.size(); ++r) {
    ContingencyTable::Row row;
    for (std::size_t c = 0; c < first_count; ++c) {
      std::string cell = records[r][c];
      if (cell.empty()) {
        if (previous[c].empty()) {
          throw Error(Errc::malformed_input, "contingency CSV: empty stratum label with nothing to repeat");
        }
        cell = previous[c];
      }
      previous[c] = cell;
      row.strata.push_back(std::move(cell));
    }
    for (std::size_t c = first_count; c < width; ++c) {
      std::uint64_t value = 0;
      parse_count(records[r][c], value);
      row.counts.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return ContingencyTable(std::move(strata), std::move(counts), std::move(rows));
}

}  // namespace bdt
