#include "poplab/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

namespace poplab {

const std::vector<BigInt>* OeisDb::find(std::string_view a_number) const {
  auto it = sequences.find(std::string(a_number));
  return it == sequences.end() ? nullptr : &it->second;
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// "Annnnnn ,t1,t2,...," with at least one term. Returns an error message or
// an empty string.
std::string parse_line(std::string_view line, std::string& id, std::vector<BigInt>& terms) {
  if (line.size() < 10 || line[0] != 'A' || !is_digits(line.substr(1, 6))) return "expected an A-number";
  if (line.substr(7, 2) != " ,") return "expected \" ,\" after the A-number";
  if (line.back() != ',') return "missing trailing comma";
  id = std::string(line.substr(0, 7));
  terms.clear();
  std::string_view rest = line.substr(9, line.size() - 10);
  while (true) {
    const std::size_t comma = std::min(rest.find(','), rest.size());
    std::string_view tok = rest.substr(0, comma);
    const std::string_view digits = (!tok.empty() && tok[0] == '-') ? tok.substr(1) : tok;
    if (!is_digits(digits)) return "bad term \"" + std::string(tok) + "\"";
    terms.emplace_back(std::string(tok));
    if (comma == rest.size()) break;
    rest = rest.substr(comma + 1);
  }
  return {};
}

}  // namespace

OeisDb parse_stripped(std::istream& in, const std::string& source) {
  OeisDb db;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) {
      throw ParseError(source + ": UTF-8 byte order mark is not accepted");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string id;
    std::vector<BigInt> terms;
    const std::string error = parse_line(line, id, terms);
    if (!error.empty()) {
      db.warnings.push_back("line " + std::to_string(number) + ": " + error + ", skipped");
      continue;
    }
    if (!db.sequences.emplace(id, std::move(terms)).second) {
      db.warnings.push_back("line " + std::to_string(number) + ": duplicate " + id + ", skipped");
    }
  }
  if (db.sequences.empty()) throw ParseError(source + ": no valid sequence lines");
  return db;
}

OeisDb parse_stripped_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_stripped(in);
}

OeisDb load_stripped(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open OEIS file " + path);
  return parse_stripped(in, path);
}

std::vector<Match> match_sequence(const OeisDb& db, const std::vector<BigInt>& terms, int min_overlap, int max_shift) {
  if (min_overlap < 1) throw std::invalid_argument("min_overlap must be positive");
  if (static_cast<int>(terms.size()) < min_overlap) {
    throw std::invalid_argument("need at least " + std::to_string(min_overlap) + " terms to match, got " +
                                std::to_string(terms.size()));
  }
  std::vector<Match> out;
  for (const auto& [id, prefix] : db.sequences) {
    const int len = static_cast<int>(prefix.size());
    int leading_zeros = 0;
    while (leading_zeros < len && prefix[static_cast<std::size_t>(leading_zeros)] == 0) ++leading_zeros;
    for (int shift = 0; shift <= max_shift; ++shift) {
      Match m{id, shift, 0, 0, -1};
      bool ok = true;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const int idx = shift + static_cast<int>(i);
        if (idx >= len) break;
        const BigInt& published = prefix[static_cast<std::size_t>(idx)];
        if (published == terms[i]) {
          if (m.first_agreement < 0) m.first_agreement = idx;
          ++m.overlap;
        } else if (idx < leading_zeros && m.first_agreement < 0) {
          ++m.placeholders;
          ++m.overlap;
        } else {
          ok = false;
          break;
        }
      }
      if (ok && m.first_agreement >= 0 && m.overlap >= min_overlap) out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Match& a, const Match& b) { return std::tie(a.offset, a.a_number) < std::tie(b.offset, b.a_number); });
  return out;
}

}  // namespace poplab
