#include "lct/records.hpp"

#include "lct/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lct {

namespace {

std::string kind_name(ThresholdValue::Kind k) {
  switch (k) {
    case ThresholdValue::Kind::Zero: return "zero";
    case ThresholdValue::Kind::Finite: return "finite";
    case ThresholdValue::Kind::Infinite: return "infinite";
  }
  return "unknown";
}

Json provenance_json(const ThresholdSetSample& s) {
  Json p = Json::object();
  for (const auto& [k, v] : s.provenance) p[k] = v;
  return p;
}

}  // namespace

Json rat_json(const Rat& q) { return to_fraction_string(q); }

Json to_json(const ThresholdValue& v) {
  Json j;
  j["kind"] = kind_name(v.kind());
  if (v.is_finite()) j["value"] = rat_json(v.value());
  else if (v.is_zero()) j["value"] = rat_json(Rat(0));
  else j["value"] = "inf";
  return j;
}

Json to_json(const Facet& f) {
  Json j;
  Json normal = Json::array();
  for (const auto& a : f.normal) normal.push_back(a.get_str());
  j["normal"] = std::move(normal);
  j["offset"] = f.offset.get_str();
  j["compact"] = f.compact();
  j["face_bound"] = rat_json(face_bound(f));
  return j;
}

Json to_json(const ThresholdReport& r) {
  Json j = to_json(r.value);
  j["exact"] = r.exactness == Exactness::Exact;
  Json w;
  w["rule"] = r.witness.rule;
  if (r.witness.diagonal) w["t_star"] = rat_json(*r.witness.diagonal);
  if (r.witness.facet) w["facet"] = to_json(*r.witness.facet);
  j["witness"] = std::move(w);
  if (r.bounds) j["bounds"] = {{"lower", rat_json(r.bounds->lower)}, {"upper", rat_json(r.bounds->upper)}};
  return j;
}

Json to_json(const ThresholdSetSample& s) {
  Json j;
  j["dimension"] = s.dimension;
  j["size"] = s.values.size();
  j["provenance"] = provenance_json(s);
  Json values = Json::array();
  for (const auto& q : s.values) values.push_back(rat_json(q));
  j["values"] = std::move(values);
  return j;
}

Json to_json(const std::vector<AccumulationInterval>& intervals) {
  Json arr = Json::array();
  for (const auto& iv : intervals)
    arr.push_back({{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}, {"count", iv.count}});
  return {{"intervals", std::move(arr)}};
}

Json to_json(const FamilyCheck& c) {
  Json values = Json::array();
  for (const auto& q : c.values) values.push_back(rat_json(q));
  return {{"base", rat_json(c.base)}, {"first_m", c.first_m}, {"last_m", c.last_m},
          {"empty", c.empty},         {"passed", c.passed},   {"values", std::move(values)}};
}

Json to_json(const GapResult& g) {
  return {{"n", g.n}, {"max", rat_json(g.max)}, {"witness", g.witness}, {"nodes", g.nodes}};
}

Json to_json(const SubadditivityCheck& c) {
  return {{"f", to_json(c.f)}, {"g", to_json(c.g)}, {"sum", to_json(c.sum)}, {"holds", c.holds}};
}

Json to_json(const RestrictionCheck& c) {
  return {{"restricted", to_json(c.restricted)}, {"full", to_json(c.full)}, {"holds", c.holds}};
}

std::string input_digest(const std::vector<std::string>& input) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  bool first = true;
  for (const auto& arg : input) {
    if (!first) {
      h ^= 0x1f;  // unit separator between arguments
      h *= 0x100000001b3ULL;
    }
    first = false;
    for (unsigned char c : arg) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

Json make_record(std::string_view command, const std::vector<std::string>& input, Json result) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = input;
  j["digest"] = input_digest(input);
  j["result"] = std::move(result);
  return j;
}

void write_csv(const ThresholdSetSample& s, std::ostream& out) {
  out << "value_num,value_den,value_decimal\n";
  for (const auto& q : s.values)
    out << q.get_num().get_str() << ',' << q.get_den().get_str() << ',' << to_decimal_string(q, 20) << '\n';
}

void emit_csv(const ThresholdSetSample& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(s, out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

ThresholdSetSample read_set(std::istream& in) {
  ThresholdSetSample s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::string body = line.substr(start, line.find_last_not_of(" \t") - start + 1);
    if (body.rfind("value_num", 0) == 0) continue;

    Rat q;
    try {
      const auto comma = body.find(',');
      if (comma == std::string::npos) {
        q = parse_rat(body);
      } else {
        const auto second = body.find(',', comma + 1);
        q = parse_rat(body.substr(0, comma) + "/" + body.substr(comma + 1, second - comma - 1));
      }
    } catch (const ParseError& e) {
      throw ParseError("set file line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
    if (q < 0 || q > 1) throw ParseError("set file line " + std::to_string(line_no) + ": value outside [0, 1]", 0);
    s.values.push_back(std::move(q));
  }
  std::sort(s.values.begin(), s.values.end());
  s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
  return s;
}

ThresholdSetSample read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  auto s = read_set(in);
  s.provenance = {{"file", path.string()}};
  return s;
}

}  // namespace lct
