#include "apdisc/record.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace apdisc::io {

using json = nlohmann::ordered_json;

std::string Record::key() const {
  return cmd + "|" + case_id + "|" + std::to_string(d) + "|" + std::to_string(c) + "|" +
         std::to_string(n);
}

std::string serialize(const Record& r) {
  json j;
  j["cmd"] = r.cmd;
  j["case"] = r.case_id;
  j["d"] = r.d;
  j["c"] = r.c;
  j["n"] = r.n;
  j["least_m"] = r.least_m;
  j["predicted"] = r.predicted;
  j["match"] = r.match;
  j["ms"] = r.ms;
  if (r.m_class) j["m_class"] = *r.m_class;
  if (r.m1_class) j["m1_class"] = *r.m1_class;
  if (r.certificate) j["certificate"] = *r.certificate;
  return j.dump();
}

std::optional<Record> parse_record(std::string_view line) {
  const json j = json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    Record r;
    r.cmd = j.at("cmd").get<std::string>();
    r.case_id = j.at("case").get<std::string>();
    r.d = j.at("d").get<i64>();
    r.c = j.at("c").get<i64>();
    r.n = j.at("n").get<u64>();
    r.least_m = j.at("least_m").get<u64>();
    r.predicted = j.at("predicted").get<u64>();
    r.match = j.at("match").get<bool>();
    r.ms = j.at("ms").get<std::int64_t>();
    if (j.contains("m_class")) r.m_class = j["m_class"].get<bool>();
    if (j.contains("m1_class")) r.m1_class = j["m1_class"].get<bool>();
    if (j.contains("certificate")) r.certificate = j["certificate"].get<std::string>();
    return r;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

namespace {

std::int64_t to_ms(std::chrono::nanoseconds ns, bool timing) {
  return timing ? std::chrono::duration_cast<std::chrono::milliseconds>(ns).count() : 0;
}

}  // namespace

Record from_verification(std::string cmd, const verify::VerificationRecord& v, bool timing) {
  Record r;
  r.cmd = std::move(cmd);
  r.case_id = v.case_id;
  r.d = v.d;
  r.c = v.c;
  r.n = v.n;
  r.least_m = v.least_m;
  r.predicted = v.predicted;
  r.match = v.match;
  r.ms = to_ms(v.elapsed, timing);
  return r;
}

Record from_conjecture(std::string cmd, const conj::ConjectureReport& c, bool timing) {
  Record r;
  r.cmd = std::move(cmd);
  r.case_id = c.id + (c.params.empty() ? "" : " " + c.params);
  r.n = c.n;
  r.least_m = c.observed;
  r.predicted = c.predicted;
  r.match = c.agrees;
  r.ms = to_ms(c.elapsed, timing);
  r.m_class = c.m_class;
  r.m1_class = c.m1_class;
  r.certificate = c.certificate;
  return r;
}

ResumeState resume_scan(const std::string& path, std::ostream& log) {
  ResumeState state;
  if (!std::filesystem::exists(path)) return state;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  state.ends_mid_line = !content.empty() && content.back() != '\n';

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    const bool terminated = end != std::string::npos;
    if (!terminated) end = content.size();
    std::string_view line(content.data() + pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    auto rec = terminated ? parse_record(line) : std::nullopt;
    if (!rec) {
      ++state.corrupt;
      log << "warning: " << path << ":" << line_no << ": skipping corrupt record\n";
      continue;
    }
    state.keys.insert(rec->key());
    state.records.push_back(std::move(*rec));
  }
  return state;
}

}  // namespace apdisc::io
