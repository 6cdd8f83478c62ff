#pragma once

#include "lct/engine.hpp"
#include "lct/newton_hull.hpp"
#include "lct/threshold_sets.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "lct/1";

/// Rationals are always "p/q" strings in records.
Json rat_json(const Rat& q);
Json to_json(const ThresholdValue& v);
Json to_json(const Facet& f);
Json to_json(const ThresholdReport& r);
Json to_json(const ThresholdSetSample& s);
Json to_json(const std::vector<AccumulationInterval>& intervals);
Json to_json(const FamilyCheck& c);
Json to_json(const GapResult& g);
Json to_json(const SubadditivityCheck& c);
Json to_json(const RestrictionCheck& c);

/// 16 hex digits of 64-bit FNV-1a over the joined input arguments.
std::string input_digest(const std::vector<std::string>& input);

/// {"schema", "command", "input", "digest", "result"}.
Json make_record(std::string_view command, const std::vector<std::string>& input, Json result);

/// Header `value_num,value_den,value_decimal`, one ascending row per value.
void write_csv(const ThresholdSetSample& s, std::ostream& out);

/// write_csv to a file. Throws std::runtime_error on I/O failure.
void emit_csv(const ThresholdSetSample& s, const std::filesystem::path& path);

/// Reads a set written by emit_csv, or one rational per line. Blank lines and
/// lines starting with '#' are skipped. Values are sorted and deduplicated;
/// anything outside [0, 1] is rejected with ParseError.
ThresholdSetSample read_set_file(const std::filesystem::path& path);
ThresholdSetSample read_set(std::istream& in);

}  // namespace lct
