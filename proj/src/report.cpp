#include "xch/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace xch {

namespace {

using json = nlohmann::ordered_json;

std::string status(const Report& r) {
  if (r.exit_code == 0) return "pass";
  return r.error_kind.empty() ? "fail" : "error";
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

json sequence_json(const ExactnessReport& s) {
  json terms = json::array();
  for (std::size_t i = 0; i < s.labels.size(); ++i) terms.push_back({{"label", s.labels[i]}, {"dim", s.dims[i]}});
  json positions = json::array();
  for (const auto& p : s.positions) {
    positions.push_back({{"label", p.label},
                         {"dim", p.dim},
                         {"composition_zero", p.composition_zero},
                         {"ker_dim", p.ker_dim},
                         {"im_dim", p.im_dim},
                         {"exact", p.exact}});
  }
  return {{"name", s.name}, {"exact", s.exact()}, {"terms", terms}, {"positions", positions}};
}

std::string join_dims(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string render_json(const Report& r) {
  json out;
  out["command"] = r.command;
  out["file"] = r.file;
  out["field"] = r.field;
  json task = json::object();
  for (const auto& [k, v] : r.task) task[k] = v;
  out["task"] = task;
  out["status"] = status(r);
  out["exit_code"] = r.exit_code;

  json validations = json::array();
  for (const auto& v : r.validations) {
    validations.push_back({{"kind", v.kind}, {"name", v.name}, {"valid", v.failures.empty()}, {"failures", v.failures}});
  }
  out["validations"] = validations;

  json tables = json::array();
  for (const auto& t : r.tables) {
    json degrees = json::array();
    for (std::size_t i = 0; i < t.dims.size(); ++i) {
      json d = {{"n", t.first_degree + i}, {"dim", t.dims[i]}};
      if (!t.bases.empty()) d["basis"] = t.bases[i];
      degrees.push_back(d);
    }
    tables.push_back({{"object", t.object}, {"what", t.what}, {"degrees", degrees}});
  }
  out["homology"] = tables;

  json verifications = json::array();
  for (const auto& v : r.verifications) {
    json checks = json::array();
    for (const auto& c : v.report.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json sequences = json::array();
    for (const auto& s : v.report.sequences) sequences.push_back(sequence_json(s));
    json rtables = json::array();
    for (const auto& t : v.report.tables) {
      rtables.push_back({{"name", t.name}, {"first_degree", t.first_degree}, {"dims", t.dims}});
    }
    verifications.push_back({{"object", v.object},
                             {"theorem", v.report.theorem},
                             {"passed", v.report.passed()},
                             {"qualifiers", v.report.qualifiers},
                             {"checks", checks},
                             {"sequences", sequences},
                             {"tables", rtables}});
  }
  out["verifications"] = verifications;

  if (!r.error_kind.empty()) {
    json e = {{"kind", r.error_kind}, {"message", r.error}};
    if (r.error_line) e["line"] = *r.error_line;
    if (r.error_column) e["column"] = *r.error_column;
    if (r.estimate) e["estimate"] = *r.estimate;
    if (r.budget) e["budget"] = *r.budget;
    out["error"] = e;
  }
  if (r.seconds) out["seconds"] = *r.seconds;
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " " << r.file;
  if (!r.field.empty()) os << " [" << r.field << "]";
  for (const auto& [k, v] : r.task) os << " " << k << "=" << v;
  os << "\n";

  for (const auto& v : r.validations) {
    os << (v.failures.empty() ? "valid   " : "INVALID ") << v.kind << " " << v.name << "\n";
    for (const auto& f : v.failures) os << "    " << f << "\n";
  }

  for (const auto& t : r.tables) {
    os << t.what << "(" << t.object << ")\n";
    for (std::size_t i = 0; i < t.dims.size(); ++i) {
      os << "  n=" << t.first_degree + i << "  dim " << t.dims[i] << "\n";
      if (!t.bases.empty()) {
        for (const auto& b : t.bases[i]) os << "      " << b << "\n";
      }
    }
  }

  for (const auto& v : r.verifications) {
    const auto& rep = v.report;
    os << rep.theorem << " on " << v.object << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& q : rep.qualifiers) os << "  (" << q << ")\n";
    for (const auto& s : rep.sequences) {
      os << "  " << s.name << ": " << (s.exact() ? "exact" : "NOT EXACT") << "\n";
      os << "    ";
      for (std::size_t i = 0; i < s.labels.size(); ++i) {
        os << (i ? " -> " : "") << s.labels[i] << "[" << s.dims[i] << "]";
      }
      os << "\n";
      for (const auto& p : s.positions) {
        if (p.exact) continue;
        os << "    not exact at " << p.label << ": composition " << (p.composition_zero ? "zero" : "nonzero")
           << ", ker " << p.ker_dim << ", im " << p.im_dim << "\n";
      }
    }
    for (const auto& t : rep.tables) {
      os << "  " << t.name << " from degree " << t.first_degree << ": " << join_dims(t.dims) << "\n";
    }
    for (const auto& c : rep.checks) {
      os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name;
      if (!c.ok || c.detail != "ok") os << ": " << c.detail;
      os << "\n";
    }
  }

  if (!r.error_kind.empty()) {
    os << r.error_kind << " error";
    if (r.error_line) os << " at line " << *r.error_line << ", column " << r.error_column.value_or(0);
    os << ": " << r.error << "\n";
  }
  os << "status: " << status(r) << "\n";
  if (r.seconds) os << "time: " << seconds_text(*r.seconds) << " s\n";
  return os.str();
}

}  // namespace xch
