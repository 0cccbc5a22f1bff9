#include "poplab/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace poplab {

namespace {

std::string cell(const std::optional<BigInt>& v) { return v ? v->str() : "-"; }

nlohmann::json value_or_null(const std::optional<BigInt>& v) {
  return v ? nlohmann::json(v->str()) : nlohmann::json(nullptr);
}

nlohmann::json to_json_object(const Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back({{"id", r.id},
                    {"method", r.method},
                    {"n", row.n},
                    {"formula_value", value_or_null(row.formula_value)},
                    {"brute_value", value_or_null(row.brute_value)},
                    {"table_value", value_or_null(row.table_value)},
                    {"match", row.match}});
  }
  return {{"id", r.id},         {"kind", r.kind},   {"method", r.method}, {"pop", r.pop},
          {"oeis", r.oeis},     {"status", r.status}, {"pass", r.pass},   {"notes", r.notes},
          {"rows", std::move(rows)}};
}

}  // namespace

std::vector<BigInt> Report::terms() const {
  std::vector<BigInt> out;
  for (const ReportRow& row : rows) {
    if (row.n < 1) continue;
    if (row.brute_value) {
      out.push_back(*row.brute_value);
    } else if (row.formula_value) {
      out.push_back(*row.formula_value);
    }
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << id << "  " << kind << "  " << (oeis.empty() ? "-" : oeis) << "  method=" << method << "  pop=\"" << pop
     << "\"\n";
  os << std::setw(5) << "n" << std::setw(14) << "formula" << std::setw(14) << "brute" << std::setw(14) << "table"
     << "  match\n";
  for (const ReportRow& row : rows) {
    os << std::setw(5) << row.n << std::setw(14) << cell(row.formula_value) << std::setw(14) << cell(row.brute_value)
       << std::setw(14) << cell(row.table_value) << "  " << (row.match ? "yes" : "NO") << "\n";
  }
  for (const std::string& note : notes) os << "  note: " << note << "\n";
  os << status << " " << id << "\n";
  return os.str();
}

std::string Report::to_json() const { return to_json_object(*this).dump(2); }

std::string reports_to_json(const std::vector<Report>& reports) {
  nlohmann::json doc = {{"schema", 1}, {"reports", nlohmann::json::array()}};
  for (const Report& r : reports) doc["reports"].push_back(to_json_object(r));
  return doc.dump(2) + "\n";
}

}  // namespace poplab
