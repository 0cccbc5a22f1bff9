#include "poplab/scan.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace poplab {

ScanResult scan_pops(const ScanOptions& options) {
  if (options.n_max < 1) throw std::invalid_argument("scan needs n_max >= 1");
  ScanResult result;
  result.length = options.length;
  result.n_max = options.n_max;

  std::map<ClassKey, ScanOrbit> orbits;
  std::map<ClassKey, Pop> members;
  for_each_pop(options.length, [&](const Pop& p) {
    ++result.pops_processed;
    const ClassKey key = canonical_class(p);
    ScanOrbit& orbit = orbits[key];
    orbit.key = key;
    ++orbit.size;
    if (p.matrix_code() == key.code) {
      orbit.pop = p.to_string();
      members.emplace(key, p);
    }
  });
  result.orbit_count = static_cast<int>(orbits.size());

  std::map<std::vector<BigInt>, ScanClass> classes;
  for (const auto& [key, orbit] : orbits) {
    std::vector<BigInt> counts;
    for (int n = 1; n <= options.n_max; ++n) counts.push_back(count_avoiders(members.at(key), n, options.count));
    ScanClass& c = classes[counts];
    if (c.orbits.empty()) {
      c.counts = counts;
      c.representative = orbit;
    }
    c.orbits.push_back(orbit);
    c.pop_count += orbit.size;
  }

  for (auto& [counts, c] : classes) {
    if (options.db != nullptr && static_cast<int>(counts.size()) >= options.min_overlap) {
      for (const Match& m : match_sequence(*options.db, counts, options.min_overlap)) c.matches.push_back(m.a_number);
    }
    result.classes.push_back(std::move(c));
  }
  return result;
}

std::string ScanResult::to_json() const {
  auto orbit_json = [](const ScanOrbit& o) {
    return nlohmann::json{{"class_key", o.key.to_string()}, {"pop", o.pop}, {"size", o.size}, {"equivalence", "proved"}};
  };
  nlohmann::json doc = {{"schema", 1},
                        {"length", length},
                        {"n_max", n_max},
                        {"pops_processed", pops_processed},
                        {"orbits", orbit_count},
                        {"classes", nlohmann::json::array()}};
  for (const ScanClass& c : classes) {
    nlohmann::json counts = nlohmann::json::array();
    for (const BigInt& v : c.counts) counts.push_back(v.str());
    nlohmann::json orbit_list = nlohmann::json::array();
    for (const ScanOrbit& o : c.orbits) orbit_list.push_back(orbit_json(o));
    doc["classes"].push_back({{"pop", c.representative.pop},
                              {"class_key", c.representative.key.to_string()},
                              {"orbit_representative", true},
                              {"counts", std::move(counts)},
                              {"matches", c.matches},
                              {"pop_count", c.pop_count},
                              {"wilf_class", "empirical at n <= " + std::to_string(n_max)},
                              {"orbits", std::move(orbit_list)}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace poplab
