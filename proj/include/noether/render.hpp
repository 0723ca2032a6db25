#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "noether/moduli.hpp"
#include "noether/oracle.hpp"

// Output documents for the CLI: one JSON document, one CSV table, or one
// aligned text table per invocation. Rationals serialize as "p/q" strings in
// lowest terms, never floats; JSON key order is fixed so that parsing and
// re-rendering a document is byte-identical.
namespace noether::render {

enum class OutputFormat { Table, Csv, Json };

using json = nlohmann::ordered_json;

inline constexpr const char* kCsvHeader = "d0,h0_branch,dim_aut,delta,singularity,status";

const char* status_token(moduli::StratumStatus s);
const char* model_token(fibration::ModelStatus s);

json stratum_json(const fibration::FibrationType& f);
json moduli_json(const moduli::ModuliSummary& summary);
json profile_json(const moduli::DeltaProfile& profile,
                  const std::vector<moduli::StratumRecord>& rows);
json verify_json(const oracle::VerificationReport& report);

/// dump(2) plus a trailing newline; the canonical JSON byte form.
std::string dump_json(const json& doc);

std::string render_stratum(const fibration::FibrationType& f, OutputFormat format);
std::string render_moduli(const moduli::ModuliSummary& summary, OutputFormat format);
std::string render_profile(const moduli::DeltaProfile& profile,
                           const std::vector<moduli::StratumRecord>& rows, OutputFormat format);
std::string render_verify(const oracle::VerificationReport& report, OutputFormat format);

/// The per-integer stratum table of a profile, ascending d0.
std::vector<moduli::StratumRecord> profile_rows(std::int64_t d);

} // namespace noether::render
