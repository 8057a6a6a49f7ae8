#include "cdiff/report.hpp"

#include <sstream>

namespace cdiff {

namespace {

std::string modulus_text(const std::vector<std::uint32_t>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(m[i]);
  }
  return s;
}

std::string field_text(const CaseKey& key) {
  return std::to_string(key.p) + "^" + std::to_string(key.n) + "/" + modulus_text(key.modulus);
}

std::vector<std::uint32_t> element_digits(const CaseKey& key, Elem e) {
  std::vector<std::uint32_t> digits(key.n, 0);
  std::uint32_t v = e.v;
  for (auto& d : digits) {
    d = v % key.p;
    v /= key.p;
  }
  return digits;
}

std::string omega_text(const std::map<unsigned, std::uint64_t>& omega) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, w] : omega) {
    if (!first) s += ", ";
    first = false;
    s += "w" + std::to_string(i) + "=" + std::to_string(w);
  }
  return s + "}";
}

std::string omega_text(const std::map<unsigned, Ratio>& omega) {
  std::string s = "{";
  bool first = true;
  for (const auto& [i, w] : omega) {
    if (!first) s += ", ";
    first = false;
    s += "w" + std::to_string(i) + "=" + w.str();
  }
  return s + "}";
}

Json identities_json(const IdentityReport& id) {
  Json j;
  j["sum_omega"] = id.sum_omega;
  j["sum_i_omega"] = id.sum_i_omega;
  j["sum_i2_omega"] = id.sum_i2_omega;
  j["eq1"] = id.eq1_ok() ? "PASSED" : "FAILED";
  j["eq2"] = to_string(id.eq2);
  j["n4"] = id.n4 ? Json(*id.n4) : Json(nullptr);
  j["gcd_term"] = id.gcd_term;
  j["violations"] = id.violations;
  return j;
}

std::string eq1_text(const IdentityReport& id) { return id.eq1_ok() ? "PASSED" : "FAILED"; }

}  // namespace

std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "json";
}

Json omega_json(const std::map<unsigned, std::uint64_t>& omega) {
  Json j = Json::object();
  for (const auto& [i, w] : omega) j[std::to_string(i)] = w;
  return j;
}

Json omega_json(const std::map<unsigned, Ratio>& omega) {
  Json j = Json::object();
  for (const auto& [i, w] : omega) {
    if (w.integral()) j[std::to_string(i)] = w.num;
    else j[std::to_string(i)] = w.str();
  }
  return j;
}

Json to_json(const CaseKey& key) {
  Json j;
  j["p"] = key.p;
  j["n"] = key.n;
  j["modulus"] = key.modulus;
  j["field"] = field_text(key);
  j["d"] = key.d;
  j["c"] = key.c.v;
  j["c_digits"] = element_digits(key, key.c);
  return j;
}

Json spectrum_json(const CaseKey& key, const CDiffSpectrum& s, const CUniformity& u) {
  Json j;
  j["case"] = to_json(key);
  j["omega"] = omega_json(s.omega);
  j["uniformity"] = u.value;
  j["spectrum_uniformity"] = u.spectrum_max;
  j["zero_row_max"] = u.zero_row_max;
  j["class"] = to_string(u.cls);
  return j;
}

Json to_json(const SpectrumPrediction& p) {
  Json j;
  j["theorem"] = to_string(p.theorem);
  Json cond = Json::object();
  for (const auto& [name, value] : p.conditions) cond[name] = value;
  j["conditions"] = cond;
  j["omega"] = omega_json(p.omega);
  j["consistent"] = p.consistent;
  j["repaired_omega_0"] = p.repaired_omega0 ? Json(*p.repaired_omega0) : Json(nullptr);
  j["notes"] = p.notes;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["case"] = to_json(r.key);
  j["computed"] = spectrum_json(r.key, r.computed, r.uniformity);
  j["computed"].erase("case");
  j["identities"] = identities_json(r.identities);
  Json preds = Json::array();
  for (const auto& out : r.predictions) {
    Json pj = to_json(out.prediction);
    pj["matches"] = out.matches;
    pj["repaired_matches"] = out.repaired_matches;
    preds.push_back(std::move(pj));
  }
  j["predictions"] = std::move(preds);
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json to_json(const SweepResult& r) {
  Json j;
  j["d"] = r.d;
  j["pcn_count"] = r.pcn_count;
  j["apcn_count"] = r.apcn_count;
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(to_json(rep));
  j["reports"] = std::move(reports);
  return j;
}

Json to_json(const ScanResult& r) {
  Json j;
  Json field = to_json(r.field);
  field.erase("d");
  j["case"] = std::move(field);
  j["max_uniformity"] = r.max_uniformity;
  j["dedup_exact"] = r.dedup_exact;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json rj;
    rj["d"] = row.d;
    rj["class_members"] = row.class_members;
    rj["omega"] = omega_json(row.spectrum.omega);
    rj["uniformity"] = row.uniformity.value;
    rj["spectrum_uniformity"] = row.uniformity.spectrum_max;
    rj["class"] = to_string(row.uniformity.cls);
    rj["digest"] = row.digest;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const FuzzReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["count"] = r.count;
  j["budget_q"] = r.budget_q;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json cj;
    cj["case"] = to_json(c.key);
    cj["q"] = c.q;
    cj["gcd_term"] = c.gcd_term;
    cj["identities"] = identities_json(c.identities);
    cj["passed"] = c.passed;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j;
}

Json to_json(const GammaReport& r) {
  Json j;
  j["n"] = r.n;
  j["closed"] = r.closed;
  j["direct"] = r.direct ? Json(*r.direct) : Json(nullptr);
  j["equal"] = r.direct ? Json(r.equal) : Json(nullptr);
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string spectrum_csv(const CaseKey& key, const CDiffSpectrum& s, const CUniformity& u) {
  std::ostringstream os;
  os << "p,n,modulus,d,c,uniformity,spectrum_uniformity,class,omega_json\n";
  os << key.p << ',' << key.n << ',' << csv_field(modulus_text(key.modulus)) << ',' << key.d << ','
     << key.c.v << ',' << u.value << ',' << u.spectrum_max << ',' << to_string(u.cls) << ','
     << csv_field(omega_json(s.omega).dump()) << '\n';
  return os.str();
}

std::string verify_csv(std::span<const VerifyReport> reports) {
  std::ostringstream os;
  os << "p,n,modulus,d,c,verdict,uniformity,omega_json,eq1,eq2\n";
  for (const auto& r : reports) {
    os << r.key.p << ',' << r.key.n << ',' << csv_field(modulus_text(r.key.modulus)) << ',' << r.key.d << ','
       << r.key.c.v << ',' << to_string(r.verdict) << ',' << r.uniformity.value << ','
       << csv_field(omega_json(r.computed.omega).dump()) << ',' << eq1_text(r.identities) << ','
       << to_string(r.identities.eq2) << '\n';
  }
  return os.str();
}

std::string scan_csv(const ScanResult& r) {
  std::ostringstream os;
  os << "p,n,modulus,c,d,class_members,uniformity,spectrum_uniformity,class,omega_json\n";
  for (const auto& row : r.rows) {
    std::string members;
    for (auto m : row.class_members) members += (members.empty() ? "" : " ") + std::to_string(m);
    os << r.field.p << ',' << r.field.n << ',' << csv_field(modulus_text(r.field.modulus)) << ',' << r.c.v
       << ',' << row.d << ',' << members << ',' << row.uniformity.value << ',' << row.uniformity.spectrum_max
       << ',' << to_string(row.uniformity.cls) << ',' << csv_field(omega_json(row.spectrum.omega).dump())
       << '\n';
  }
  return os.str();
}

std::string fuzz_csv(const FuzzReport& r) {
  std::ostringstream os;
  os << "p,n,modulus,d,c,gcd_term,sum_i2_omega,n4,eq1,eq2\n";
  for (const auto& c : r.cases) {
    os << c.key.p << ',' << c.key.n << ',' << csv_field(modulus_text(c.key.modulus)) << ',' << c.key.d << ','
       << c.key.c.v << ',' << c.gcd_term << ',' << c.identities.sum_i2_omega << ','
       << (c.identities.n4 ? std::to_string(*c.identities.n4) : "") << ',' << eq1_text(c.identities) << ','
       << to_string(c.identities.eq2) << '\n';
  }
  return os.str();
}

std::string gamma_csv(const GammaReport& r) {
  std::ostringstream os;
  os << "n,closed,direct,equal\n";
  os << r.n << ',' << r.closed << ',' << (r.direct ? std::to_string(*r.direct) : "") << ','
     << (r.direct ? (r.equal ? "true" : "false") : "") << '\n';
  return os.str();
}

std::string spectrum_text(const CaseKey& key, const CDiffSpectrum& s, const CUniformity& u) {
  std::ostringstream os;
  os << "field " << field_text(key) << "  d=" << key.d << "  c=" << key.c.v << '\n';
  os << "spectrum " << omega_text(s.omega) << '\n';
  os << "uniformity " << u.value << " (a=1 row " << u.spectrum_max << ", a=0 row " << u.zero_row_max << ")  "
     << to_string(u.cls) << '\n';
  return os.str();
}

std::string verify_text(const VerifyReport& r) {
  std::ostringstream os;
  os << spectrum_text(r.key, r.computed, r.uniformity);
  os << "eq1 " << eq1_text(r.identities) << "  eq2 " << to_string(r.identities.eq2);
  if (r.identities.n4) os << "  N4=" << *r.identities.n4;
  os << '\n';
  for (const auto& v : r.identities.violations) os << "  ! " << v << '\n';
  for (const auto& out : r.predictions) {
    const auto& p = out.prediction;
    os << to_string(p.theorem) << ' ' << omega_text(p.omega) << (p.consistent ? "" : "  inconsistent")
       << (out.matches ? "  matches" : "") << '\n';
    if (p.repaired_omega0) {
      os << "  repaired w0=" << *p.repaired_omega0 << (out.repaired_matches ? " (matches)" : " (differs)") << '\n';
    }
    if (!p.notes.empty()) os << "  " << p.notes << '\n';
  }
  os << "verdict " << to_string(r.verdict) << '\n';
  return os.str();
}

std::string sweep_text(const SweepResult& r) {
  std::ostringstream os;
  for (const auto& rep : r.reports) {
    os << "c=" << rep.key.c.v << "  " << omega_text(rep.computed.omega) << "  uniformity " << rep.uniformity.value
       << "  " << to_string(rep.verdict) << '\n';
  }
  os << "PcN " << r.pcn_count << "  APcN " << r.apcn_count << "  of " << r.reports.size() << '\n';
  return os.str();
}

std::string scan_text(const ScanResult& r) {
  std::ostringstream os;
  os << "field " << field_text(r.field) << "  c=" << r.c.v << "  max uniformity " << r.max_uniformity
     << (r.dedup_exact ? "" : "  (c outside GF(p): class members may differ)") << '\n';
  for (const auto& row : r.rows) {
    os << "d=" << row.d << "  uniformity " << row.uniformity.value << "  " << row.digest << '\n';
  }
  return os.str();
}

std::string fuzz_text(const FuzzReport& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    if (c.passed) continue;
    os << "FAIL " << field_text(c.key) << " d=" << c.key.d << " c=" << c.key.c.v << '\n';
    for (const auto& v : c.identities.violations) os << "  " << v << '\n';
  }
  os << "seed " << r.seed << "  cases " << r.cases.size() << "  passed " << r.passed << "  failed " << r.failed
     << '\n';
  return os.str();
}

std::string gamma_text(const GammaReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << "  closed=" << r.closed;
  if (r.direct) os << "  direct=" << *r.direct << "  equal=" << (r.equal ? "true" : "false");
  os << '\n';
  return os.str();
}

}  // namespace cdiff
