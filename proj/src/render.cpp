#include "noether/render.hpp"

#include <sstream>

namespace noether::render {

namespace {

using fibration::CanonicalImage;
using fibration::FibrationType;
using fibration::SingularityClass;
using moduli::StratumRecord;

json interval_json(const RationalInterval& iv) {
    return json{{"lo", iv.lo.str()},
                {"hi", iv.hi.str()},
                {"lo_closed", iv.lo_closed},
                {"hi_closed", iv.hi_closed}};
}

json singularity_json(const SingularityClass& s) {
    json j;
    j["name"] = s.name();
    if (s.kind == SingularityClass::Kind::Terminal) j["count"] = s.terminal_count;
    j["ratio_interval"] = interval_json(s.matched);
    return j;
}

json image_json(const CanonicalImage& img) {
    switch (img.kind) {
    case CanonicalImage::Kind::RationalNormalCurve:
        return json{{"kind", "rational_normal_curve"}, {"degree", img.degree}};
    case CanonicalImage::Kind::ConeOverRationalNormalCurve:
        return json{{"kind", "cone_over_rational_normal_curve"}, {"degree", img.degree}};
    case CanonicalImage::Kind::HirzebruchSurface:
        return json{{"kind", "hirzebruch_surface"}, {"e", img.e}};
    }
    throw std::logic_error("image_json: bad kind");
}

std::string image_text(const CanonicalImage& img) {
    switch (img.kind) {
    case CanonicalImage::Kind::RationalNormalCurve:
        return "rational normal curve of degree " + std::to_string(img.degree);
    case CanonicalImage::Kind::ConeOverRationalNormalCurve:
        return "cone over rational normal curve of degree " + std::to_string(img.degree);
    case CanonicalImage::Kind::HirzebruchSurface:
        return "Hirzebruch surface F_" + std::to_string(img.e);
    }
    throw std::logic_error("image_text: bad kind");
}

std::string singularity_text(const SingularityClass& s) {
    std::string text = s.name();
    if (s.kind == SingularityClass::Kind::Terminal)
        text += " (count " + std::to_string(s.terminal_count) + ")";
    return text + ", d0/d in " + s.matched.str();
}

json stratum_row_json(const StratumRecord& rec) {
    json j;
    j["d0"] = rec.d0;
    j["h0_branch"] = rec.h0_branch;
    j["dim_aut"] = rec.dim_aut;
    j["delta"] = rec.delta;
    j["singularity"] = singularity_json(rec.singularity);
    j["image"] = image_json(rec.image);
    j["model"] = model_token(rec.model);
    if (rec.status) {
        j["status"] = status_token(*rec.status);
    } else {
        j["status"] = nullptr;
    }
    return j;
}

std::string csv_row(const StratumRecord& rec) {
    std::string status = rec.status ? status_token(*rec.status) : "n/a";
    return std::to_string(rec.d0) + "," + std::to_string(rec.h0_branch) + "," +
           std::to_string(rec.dim_aut) + "," + std::to_string(rec.delta) + "," +
           rec.singularity.name() + "," + status;
}

std::string strata_table(const std::vector<StratumRecord>& rows) {
    std::ostringstream out;
    out << "   d0  h0_branch  dim_aut   delta  singularity  status\n";
    for (const StratumRecord& rec : rows) {
        char line[128];
        std::snprintf(line, sizeof(line), "  %3lld  %9lld  %7lld  %6lld  %-11s  %s\n",
                      static_cast<long long>(rec.d0), static_cast<long long>(rec.h0_branch),
                      static_cast<long long>(rec.dim_aut), static_cast<long long>(rec.delta),
                      rec.singularity.name().c_str(),
                      rec.status ? status_token(*rec.status) : "n/a: d < 5");
        out << line;
    }
    return out.str();
}

} // namespace

const char* status_token(moduli::StratumStatus s) {
    switch (s) {
    case moduli::StratumStatus::TopStratum: return "top_stratum";
    case moduli::StratumStatus::InClosureOfTop: return "in_closure_of_top";
    case moduli::StratumStatus::DenseInComponent: return "dense_in_component";
    case moduli::StratumStatus::Undetermined: return "undetermined";
    }
    throw std::logic_error("status_token: bad status");
}

const char* model_token(fibration::ModelStatus s) {
    switch (s) {
    case fibration::ModelStatus::CanonicalModel: return "canonical_model";
    case fibration::ModelStatus::MinimalNotCanonical: return "minimal_not_canonical";
    case fibration::ModelStatus::NotOnNoetherLineOrNotGeneralType:
        return "not_on_noether_line_or_not_general_type";
    }
    throw std::logic_error("model_token: bad status");
}

std::string dump_json(const json& doc) {
    return doc.dump(2) + "\n";
}

json stratum_json(const FibrationType& f) {
    const StratumRecord rec = moduli::make_stratum_record(f);
    const fibration::NumericalInvariants inv = fibration::invariants(f);

    json j;
    j["kind"] = "stratum";
    j["d"] = f.d;
    j["d0"] = f.d0;
    j["e"] = f.e;
    j["p_g"] = inv.pg;
    j["q"] = inv.q;
    j["K3"] = inv.k3;
    j["h0_branch"] = rec.h0_branch;
    j["dim_aut"] = rec.dim_aut;
    j["delta"] = rec.delta;
    j["singularity"] = singularity_json(rec.singularity);
    j["image"] = image_json(rec.image);
    j["model"] = model_token(rec.model);
    j["canonical_model_is_isomorphic"] = fibration::model_status(f).canonical_model_is_isomorphic;
    j["status"] = rec.status ? json(status_token(*rec.status)) : json(nullptr);
    json vanishing = json::array();
    for (const grading::XMonomial& m : fibration::vanishing_monomials(f)) {
        vanishing.push_back(json{{"exponents", {m.a0, m.a1, m.a2, m.a3}}, {"text", m.str()}});
    }
    j["vanishing_monomials"] = vanishing;
    return j;
}

json moduli_json(const moduli::ModuliSummary& summary) {
    json j;
    j["kind"] = "moduli_summary";
    j["p_g"] = summary.pg;
    j["nonempty"] = summary.nonempty;
    if (summary.nonempty) {
        j["d"] = *summary.d;
        j["components_upper"] = summary.components->upper;
        j["components_lower"] = summary.components->lower;
        j["dimension"] = *summary.dimension;
        j["argmax_d0"] = *summary.argmax_d0;
    }
    json strata = json::array();
    for (const StratumRecord& rec : summary.strata) strata.push_back(stratum_row_json(rec));
    j["strata"] = strata;
    return j;
}

json profile_json(const moduli::DeltaProfile& profile,
                  const std::vector<StratumRecord>& rows) {
    json j;
    j["kind"] = "delta_profile";
    j["d"] = profile.d;
    json segments = json::array();
    for (const moduli::ProfileSegment& s : profile.segments) {
        json seg = interval_json(s.d0_range);
        seg["slope"] = s.slope;
        seg["intercept_d"] = s.intercept_d;
        seg["intercept_const"] = s.intercept_const;
        segments.push_back(seg);
    }
    j["segments"] = segments;
    json gaps = json::array();
    for (const moduli::Discontinuity& disc : profile.discontinuities) {
        gaps.push_back(json{{"d0", disc.d0.str()}, {"gap", disc.gap}});
    }
    j["discontinuities"] = gaps;
    json table = json::array();
    for (const StratumRecord& rec : rows) table.push_back(stratum_row_json(rec));
    j["rows"] = table;
    return j;
}

json verify_json(const oracle::VerificationReport& report) {
    json j;
    j["kind"] = "verification_report";
    j["d_min"] = report.d_min;
    j["d_max"] = report.d_max;
    j["checks_run"] = report.checks_run;
    j["passed"] = report.passed();
    json failures = json::array();
    for (const oracle::CheckFailure& f : report.failures) {
        failures.push_back(json{{"d", f.d},
                                {"d0", f.d0},
                                {"check", f.check},
                                {"expected", f.expected},
                                {"actual", f.actual}});
    }
    j["failures"] = failures;
    return j;
}

std::vector<StratumRecord> profile_rows(std::int64_t d) {
    std::vector<StratumRecord> rows;
    const std::int64_t d0_min = checked::ceil_div(d, 4);
    const std::int64_t d0_max = checked::floor_div(checked::mul(3, d), 2);
    for (std::int64_t d0 = d0_min; d0 <= d0_max; ++d0) {
        rows.push_back(moduli::make_stratum_record(fibration::validate(d, d0)));
    }
    return rows;
}

std::string render_stratum(const FibrationType& f, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return dump_json(stratum_json(f));
    case OutputFormat::Csv:
        return std::string(kCsvHeader) + "\n" + csv_row(moduli::make_stratum_record(f)) + "\n";
    case OutputFormat::Table: {
        const StratumRecord rec = moduli::make_stratum_record(f);
        const fibration::NumericalInvariants inv = fibration::invariants(f);
        std::ostringstream out;
        out << "stratum (d, d0) = (" << f.d << ", " << f.d0 << ")\n";
        out << "  e           : " << f.e << "\n";
        out << "  p_g         : " << inv.pg << "\n";
        out << "  q           : " << inv.q << "\n";
        out << "  K^3         : " << inv.k3 << "\n";
        out << "  image       : " << image_text(rec.image) << "\n";
        out << "  model       : " << model_token(rec.model) << "\n";
        out << "  singularity : " << singularity_text(rec.singularity) << "\n";
        out << "  status      : " << (rec.status ? status_token(*rec.status) : "n/a: d < 5")
            << "\n";
        out << "  h0_branch   : " << rec.h0_branch << "\n";
        out << "  dim_aut     : " << rec.dim_aut << "\n";
        out << "  delta       : " << rec.delta << "\n";
        std::string vanishing;
        for (const grading::XMonomial& m : fibration::vanishing_monomials(f)) {
            if (!vanishing.empty()) vanishing += ", ";
            vanishing += m.str();
        }
        out << "  vanishing   : " << (vanishing.empty() ? "none" : vanishing) << "\n";
        return out.str();
    }
    }
    throw std::logic_error("render_stratum: bad format");
}

std::string render_moduli(const moduli::ModuliSummary& summary, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return dump_json(moduli_json(summary));
    case OutputFormat::Csv: {
        std::string out = std::string(kCsvHeader) + "\n";
        for (const StratumRecord& rec : summary.strata) out += csv_row(rec) + "\n";
        return out;
    }
    case OutputFormat::Table: {
        std::ostringstream out;
        out << "moduli space at p_g = " << summary.pg << "\n";
        out << "  nonempty   : " << (summary.nonempty ? "true" : "false") << "\n";
        if (!summary.nonempty) {
            out << "  (empty: p_g is not 1 mod 3)\n";
            return out.str();
        }
        out << "  d          : " << *summary.d << "\n";
        out << "  strata     : " << summary.strata.size() << "  (d0 = "
            << summary.strata.front().d0 << ".." << summary.strata.back().d0 << ")\n";
        out << "  components : between " << summary.components->lower << " and "
            << summary.components->upper << "\n";
        out << "  dimension  : " << *summary.dimension << "  (at d0 = " << *summary.argmax_d0
            << ")\n";
        out << strata_table(summary.strata);
        return out.str();
    }
    }
    throw std::logic_error("render_moduli: bad format");
}

std::string render_profile(const moduli::DeltaProfile& profile,
                           const std::vector<StratumRecord>& rows, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return dump_json(profile_json(profile, rows));
    case OutputFormat::Csv: {
        std::string out = std::string(kCsvHeader) + "\n";
        for (const StratumRecord& rec : rows) out += csv_row(rec) + "\n";
        return out;
    }
    case OutputFormat::Table: {
        std::ostringstream out;
        out << "delta profile for d = " << profile.d << "\n";
        out << "segments (value = slope*d0 + intercept):\n";
        for (const moduli::ProfileSegment& s : profile.segments) {
            out << "  d0 in " << s.d0_range.str() << ": " << s.slope << "*d0 + ("
                << s.intercept_d << "*d + " << s.intercept_const << ")\n";
        }
        out << "discontinuities (gap = value minus left limit):\n";
        for (const moduli::Discontinuity& disc : profile.discontinuities) {
            out << "  d0 = " << disc.d0.str() << ": gap " << disc.gap << "\n";
        }
        out << strata_table(rows);
        return out.str();
    }
    }
    throw std::logic_error("render_profile: bad format");
}

std::string render_verify(const oracle::VerificationReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return dump_json(verify_json(report));
    case OutputFormat::Csv: {
        auto escape = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string quoted = "\"";
            for (char c : s) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        };
        std::string out = "d,d0,check,expected,actual\n";
        for (const oracle::CheckFailure& f : report.failures) {
            out += std::to_string(f.d) + "," + std::to_string(f.d0) + "," + f.check + "," +
                   escape(f.expected) + "," + escape(f.actual) + "\n";
        }
        return out;
    }
    case OutputFormat::Table: {
        std::ostringstream out;
        out << "verify d = " << report.d_min << ".." << report.d_max << "\n";
        out << "  checks run : " << report.checks_run << "\n";
        out << "  failures   : " << report.failures.size() << "\n";
        for (const oracle::CheckFailure& f : report.failures) {
            out << "  FAIL (d=" << f.d << ", d0=" << f.d0 << ") " << f.check << ": expected "
                << f.expected << ", got " << f.actual << "\n";
        }
        return out.str();
    }
    }
    throw std::logic_error("render_verify: bad format");
}

} // namespace noether::render
