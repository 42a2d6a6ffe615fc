#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "pentparity/errors.hpp"
#include "pentparity/search.hpp"

namespace pentparity {
namespace {

long parse_field(std::string_view field, std::size_t line) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("line " + std::to_string(line) + ": bad integer '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv(std::ostream& out, std::span<const SearchRecord> records) {
  for (const SearchRecord& r : records) {
    out << r.n << ',' << r.s << ',' << outcome_code(r.outcome) << ',' << r.elapsed.count() << '\n';
  }
}

void write_jsonl(std::ostream& out, std::span<const SearchRecord> records) {
  for (const SearchRecord& r : records) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["outcome"] = outcome_code(r.outcome);
    j["elapsed_us"] = r.elapsed.count();
    out << j.dump() << '\n';
  }
}

std::vector<SearchRecord> read_csv(std::istream& in) {
  std::vector<SearchRecord> out;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError("unexpected CSV header '" + line + "'");

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view rest = line;
    std::string_view fields[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if (i < 3 && comma == std::string_view::npos) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 4 fields");
      }
      fields[i] = (i < 3) ? rest.substr(0, comma) : rest;
      if (i < 3) rest.remove_prefix(comma + 1);
    }
    if (fields[3].find(',') != std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 4 fields");
    }
    const auto outcome = outcome_from_code(fields[2]);
    if (!outcome) {
      throw ParseError("line " + std::to_string(lineno) + ": unknown outcome '" +
                       std::string(fields[2]) + "'");
    }
    SearchRecord r;
    r.n = static_cast<int>(parse_field(fields[0], lineno));
    r.s = static_cast<int>(parse_field(fields[1], lineno));
    r.outcome = *outcome;
    r.elapsed = std::chrono::microseconds(parse_field(fields[3], lineno));
    out.push_back(r);
  }
  return out;
}

std::string stats_json(const SurveyStats& st) {
  nlohmann::ordered_json j;
  j["total_checked"] = st.total_checked;
  j["total_irreducible"] = st.total_irreducible;
  nlohmann::ordered_json nm = nlohmann::ordered_json::object();
  nlohmann::ordered_json sm = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < 8; ++r) {
    nm[std::to_string(r)] = st.n_mod8[r];
    sm[std::to_string(r)] = st.s_mod8[r];
  }
  j["n_mod8"] = nm;
  j["s_mod8"] = sm;
  j["distinct_n_checked"] = st.distinct_n_checked;
  j["distinct_n_with_irr"] = st.distinct_n_with_irr;
  j["frequency"] = st.frequency();
  j["frequency_n_pm1_mod8"] = st.frequency_n_pm1();
  j["baseline_frequency_arbitrary"] = kArbitraryPolynomialBaseline;
  return j.dump(2);
}

}  // namespace pentparity
