#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace bdt {

/// Stratified count table: each row carries one or more stratum labels
/// (e.g. gender, race) followed by one count per outcome column.
class ContingencyTable {
 public:
  struct Row {
    std::vector<std::string> strata;
    std::vector<std::uint64_t> counts;
  };

  ContingencyTable(std::vector<std::string> stratum_headers,
                   std::vector<std::string> count_headers, std::vector<Row> rows);

  const std::vector<std::string>& stratum_headers() const noexcept { return stratum_headers_; }
  const std::vector<std::string>& count_headers() const noexcept { return count_headers_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  std::size_t stratum_index(std::string_view header) const;

  /// Sum of the selected cells. Exact integer arithmetic.
  std::uint64_t count(const std::function<bool(const Row&)>& rows,
                      const std::function<bool(std::string_view)>& columns) const;

  std::uint64_t total() const;

 private:
  std::vector<std::string> stratum_headers_;
  std::vector<std::string> count_headers_;
  std::vector<Row> rows_;
};

using RowPredicate = std::function<bool(const ContingencyTable::Row&)>;
using ColumnPredicate = std::function<bool(std::string_view)>;

RowPredicate all_rows();
RowPredicate stratum_equals(const ContingencyTable& table, std::string_view header,
                            std::string value);
ColumnPredicate all_columns();
ColumnPredicate column_equals(std::string name);

/// P(event | given), computed as an integer ratio with a single division.
double table_conditional(const ContingencyTable& table, const RowPredicate& given,
                         const ColumnPredicate& event);

/// Reads a table from CSV. The header row names every column; leading
/// columns whose cells are not all nonnegative integers are stratum labels,
/// the remaining columns are counts. An empty stratum cell repeats the value
/// from the row above, so grouped layouts such as
///
///   Gender,Race,Yes,No
///   Male,Caucasian,56,79
///   ,African American,56,80
///
/// read naturally.
ContingencyTable read_contingency_csv(std::istream& in);

}  // namespace bdt
