#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paracon/structures.hpp"

namespace paracon {

namespace {

using nlohmann::json;

constexpr std::string_view kFormatTag = "paracon-structure/1";

std::string json_string(const std::string& s) { return json(s).dump(); }

std::string label_list(const FiniteConsequenceStructure& s, Subset a) {
  std::string out = "[";
  bool first = true;
  for (const auto& label : s.labels_of(a)) {
    if (!first) out += ", ";
    out += json_string(label);
    first = false;
  }
  return out + "]";
}

[[noreturn]] void bad(const std::string& what) { throw StructureFormatError("structure file: " + what); }

Subset subset_from(const json& list, const std::vector<std::string>& domain, std::string_view context) {
  if (!list.is_array()) bad(std::string(context) + " must be a list of labels");
  Subset out = 0;
  for (const auto& item : list) {
    if (!item.is_string()) bad(std::string(context) + " must contain only string labels");
    const auto& label = item.get_ref<const std::string&>();
    auto it = std::find(domain.begin(), domain.end(), label);
    if (it == domain.end()) bad("unknown atom '" + label + "' in " + std::string(context));
    const Subset bit = Subset{1} << (it - domain.begin());
    if (out & bit) bad("atom '" + label + "' repeated in " + std::string(context));
    out |= bit;
  }
  return out;
}

}  // namespace

std::string serialize_structure(const FiniteConsequenceStructure& s) {
  std::ostringstream out;
  out << "{\n  \"format\": " << json_string(std::string(kFormatTag)) << ",\n  \"domain\": [";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << json_string(s.domain()[i]);
  out << "],\n  \"cn\": [\n";
  const auto table = s.table();
  for (std::size_t a = 0; a < table.size(); ++a) {
    out << "    [" << label_list(s, static_cast<Subset>(a)) << ", " << label_list(s, table[a]) << "]"
        << (a + 1 < table.size() ? ",\n" : "\n");
  }
  out << "  ]";
  if (s.has_negation()) {
    out << ",\n  \"negation\": [\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << "    [" << json_string(s.domain()[i]) << ", " << json_string(s.domain()[s.negate(i)]) << "]"
          << (i + 1 < s.size() ? ",\n" : "\n");
    }
    out << "  ]";
  }
  out << "\n}\n";
  return out.str();
}

FiniteConsequenceStructure parse_structure(std::string_view text, std::size_t domain_cap) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "format" && key != "domain" && key != "cn" && key != "negation") bad("unknown field '" + key + "'");
  }
  if (doc.contains("format") && doc["format"] != kFormatTag) {
    bad("unsupported format tag " + doc["format"].dump());
  }
  if (!doc.contains("domain") || !doc["domain"].is_array()) bad("missing 'domain' list");
  std::vector<std::string> domain;
  for (const auto& item : doc["domain"]) {
    if (!item.is_string()) bad("domain labels must be strings");
    domain.push_back(item.get<std::string>());
  }
  if (domain.empty()) bad("domain must be non-empty");
  const std::size_t cap = std::min(domain_cap, kHardDomainCap);
  if (domain.size() > cap) {
    throw CapExceeded("structure file: domain of " + std::to_string(domain.size()) + " atoms exceeds the cap of " +
                      std::to_string(cap));
  }

  if (!doc.contains("cn") || !doc["cn"].is_array()) bad("missing 'cn' list");
  std::vector<std::optional<Subset>> entries(std::size_t{1} << domain.size());
  for (const auto& pair : doc["cn"]) {
    if (!pair.is_array() || pair.size() != 2) bad("each cn entry must be a pair [subset, subset]");
    const Subset a = subset_from(pair[0], domain, "cn argument");
    const Subset c = subset_from(pair[1], domain, "cn value");
    if (entries[a]) bad("duplicate cn entry for " + pair[0].dump());
    entries[a] = c;
  }
  std::vector<Subset> table(entries.size());
  for (std::size_t a = 0; a < entries.size(); ++a) {
    if (!entries[a]) {
      json missing = json::array();
      for (std::size_t i = 0; i < domain.size(); ++i) {
        if ((a >> i) & 1U) missing.push_back(domain[i]);
      }
      bad("missing cn entry for " + missing.dump());
    }
    table[a] = *entries[a];
  }

  std::optional<std::vector<std::size_t>> negation;
  if (doc.contains("negation")) {
    const auto& neg = doc["negation"];
    if (!neg.is_array()) bad("'negation' must be a list of pairs");
    std::vector<std::optional<std::size_t>> map(domain.size());
    for (const auto& pair : neg) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        bad("each negation entry must be a pair [label, label]");
      }
      auto index = [&](const json& j) {
        auto it = std::find(domain.begin(), domain.end(), j.get<std::string>());
        if (it == domain.end()) bad("unknown atom " + j.dump() + " in negation");
        return static_cast<std::size_t>(it - domain.begin());
      };
      const std::size_t from = index(pair[0]);
      if (map[from]) bad("negation of " + pair[0].dump() + " given twice");
      map[from] = index(pair[1]);
    }
    negation.emplace();
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (!map[i]) bad("negation map is missing atom " + json_string(domain[i]));
      negation->push_back(*map[i]);
    }
  }

  try {
    return FiniteConsequenceStructure(std::move(domain), std::move(table), std::move(negation), cap);
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

FiniteConsequenceStructure load_structure(const std::filesystem::path& path, std::size_t domain_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str(), domain_cap);
}

void save_structure(const FiniteConsequenceStructure& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_structure(s);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace paracon
