#pragma once

// JSON, CSV and plain-text renderings of engine and verifier results.
// JSON objects use sorted keys and integers only, so parsing an emitted
// document and dumping it again reproduces the same bytes.

#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cdiff/spectrum.hpp"
#include "cdiff/verifier.hpp"

namespace cdiff {

using Json = nlohmann::json;

enum class Format { Json, Csv, Text };

std::string_view to_string(Format f) noexcept;

Json omega_json(const std::map<unsigned, std::uint64_t>& omega);
Json omega_json(const std::map<unsigned, Ratio>& omega);
Json to_json(const CaseKey& key);
Json spectrum_json(const CaseKey& key, const CDiffSpectrum& s, const CUniformity& u);
Json to_json(const SpectrumPrediction& p);
Json to_json(const VerifyReport& r);
Json to_json(const SweepResult& r);
Json to_json(const ScanResult& r);
Json to_json(const FuzzReport& r);
Json to_json(const GammaReport& r);

/// Two-space indented dump followed by a newline.
std::string render_json(const Json& j);

/// One RFC 4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(std::string_view text);

std::string spectrum_csv(const CaseKey& key, const CDiffSpectrum& s, const CUniformity& u);
/// Header p,n,modulus,d,c,verdict,uniformity,omega_json,eq1,eq2 and one row per report.
std::string verify_csv(std::span<const VerifyReport> reports);
std::string scan_csv(const ScanResult& r);
std::string fuzz_csv(const FuzzReport& r);
std::string gamma_csv(const GammaReport& r);

std::string spectrum_text(const CaseKey& key, const CDiffSpectrum& s, const CUniformity& u);
std::string verify_text(const VerifyReport& r);
std::string sweep_text(const SweepResult& r);
std::string scan_text(const ScanResult& r);
std::string fuzz_text(const FuzzReport& r);
std::string gamma_text(const GammaReport& r);

}  // namespace cdiff
