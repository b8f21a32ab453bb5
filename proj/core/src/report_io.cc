#include "cvm/report_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cvm/error.hpp"

namespace cvm {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw ValidationError("cannot format number");
  return std::string(buf, ptr);
}

namespace {

json trace_json(std::span<const TracePoint> trace) {
  json out = json::array();
  for (const auto& p : trace) {
    out.push_back({{"time", p.time}, {"event", p.event}, {"count", p.value}});
  }
  return out;
}

json estimate_json(const Estimate& e) { return {{"mean", e.mean}, {"radius", e.radius}}; }

json values_json(const OpinionConfig& c) { return json(std::vector<double>(c.begin(), c.end())); }

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json spec_json(const ExperimentSpec& s) {
  return {{"graph", s.graph},
          {"epsilons", s.epsilons},
          {"replicates", s.replicates},
          {"master_seed", s.master_seed},
          {"t_max", optional_json(s.t_max)},
          {"max_events", s.max_events}};
}

}  // namespace

json to_json(const SimReport& r) {
  return {{"final_opinions", values_json(r.final_opinions)},
          {"time", r.time},
          {"events", r.events},
          {"absorbed", r.absorbed},
          {"opinion_trace", trace_json(r.opinion_trace)},
          {"extremist_trace", trace_json(r.extremist_trace)}};
}

json to_json(const IndexBounds& b) {
  return {{"lower", b.lower},
          {"upper", b.upper},
          {"exact", optional_json(b.exact)},
          {"exact_coloring", b.exact_coloring},
          {"exact_peel", b.exact_peel},
          {"lower_witness", values_json(b.lower_witness)},
          {"exact_witness", b.exact_witness ? values_json(*b.exact_witness) : json(nullptr)}};
}

json to_json(const ExperimentReport& r, bool include_timing) {
  json records = json::array();
  for (const auto& rec : r.records) {
    json j = {{"replicate", rec.replicate},
              {"seed", rec.seed},
              {"epsilon", rec.epsilon},
              {"nu", rec.nu},
              {"absorbed", rec.absorbed},
              {"consensus", rec.consensus},
              {"initially_absorbing", rec.initially_absorbing},
              {"theta_initial", optional_json(rec.theta_initial)},
              {"theta_final", optional_json(rec.theta_final)},
              {"theta_inf_zero", optional_json(rec.theta_inf_zero)},
              {"events", rec.events},
              {"time", rec.time}};
    if (include_timing) j["wall_seconds"] = rec.wall_seconds;
    records.push_back(std::move(j));
  }
  json aggregates = json::array();
  for (const auto& a : r.aggregates) {
    aggregates.push_back(
        {{"epsilon", a.epsilon},
         {"replicates", a.replicates},
         {"nu", estimate_json(a.nu)},
         {"nu_fraction", estimate_json(a.nu_fraction)},
         {"nu_min", a.nu_min},
         {"nu_max", a.nu_max},
         {"consensus", estimate_json(a.consensus)},
         {"absorbed", estimate_json(a.absorbed)},
         {"initially_absorbing", estimate_json(a.initially_absorbing)},
         {"theta_initial", a.theta_initial ? estimate_json(*a.theta_initial) : json(nullptr)},
         {"theta_inf_zero", a.theta_inf_zero ? estimate_json(*a.theta_inf_zero) : json(nullptr)},
         {"extremist_identity_violations", a.extremist_identity_violations},
         {"reference", a.reference}});
  }
  return {{"kind", r.kind},
          {"spec", spec_json(r.spec)},
          {"records", std::move(records)},
          {"aggregates", std::move(aggregates)}};
}

std::string opinions_csv(const OpinionConfig& c) {
  std::string out;
  for (double v : c) {
    out += format_double(v);
    out += '\n';
  }
  return out;
}

OpinionConfig parse_opinions_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      throw ParseError(line_no, "expected a number, got '" + std::string(line) + "'");
    }
    if (!(v >= 0.0 && v <= 1.0)) throw ParseError(line_no, "opinion outside [0, 1]");
    values.push_back(v);
  }
  return OpinionConfig(std::move(values));
}

std::string records_csv(const ExperimentReport& r) {
  std::string out = "replicate,seed,nu,absorbed,consensus,theta_inf_zero,events\n";
  for (const auto& rec : r.records) {
    out += std::to_string(rec.replicate) + ',' + std::to_string(rec.seed) + ',' +
           std::to_string(rec.nu) + ',' + (rec.absorbed ? "1" : "0") + ',' +
           (rec.consensus ? "1" : "0") + ',' +
           (rec.theta_inf_zero ? (*rec.theta_inf_zero ? "1" : "0") : "") + ',' +
           std::to_string(rec.events) + '\n';
  }
  return out;
}

std::string census_csv(std::span<const CensusSample> trace) {
  std::size_t J = 0;
  for (const auto& s : trace) J = std::max(J, s.census.counts.size() - 1);
  std::string out = "time,event_index";
  for (std::size_t j = 0; j <= J; ++j) out += ",X" + std::to_string(j);
  out += ",boundary\n";
  for (const auto& s : trace) {
    out += format_double(s.time) + ',' + std::to_string(s.event);
    for (std::size_t j = 0; j <= J; ++j) {
      out += ',' + std::to_string(j < s.census.counts.size() ? s.census.counts[j] : 0);
    }
    out += ',' + std::to_string(s.census.boundary) + '\n';
  }
  return out;
}

std::string urn_trajectory_csv(std::span<const UrnState> trajectory) {
  std::size_t boxes = 0;
  for (const auto& s : trajectory) boxes = std::max(boxes, s.counts.size());
  std::string out = "step";
  for (std::size_t j = 0; j < boxes; ++j) out += ",box" + std::to_string(j);
  out += '\n';
  for (const auto& s : trajectory) {
    out += std::to_string(s.step);
    for (std::size_t j = 0; j < boxes; ++j) {
      out += ',' + std::to_string(j < s.counts.size() ? s.counts[j] : 0);
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace cvm
