#ifndef GLASSER_REPORT_HPP
#define GLASSER_REPORT_HPP

// Report and catalog serialisation: JSON with 17 significant digits, flat
// CSV, and an aligned text table.

#include <glasser/catalog.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace glasser {

enum class report_format { json, csv, text };

inline report_format parse_format(const std::string& name)
{
    if (name == "json")
        return report_format::json;
    if (name == "csv")
        return report_format::csv;
    if (name == "text")
        return report_format::text;
    throw domain_error("unknown format '" + name + "'");
}

/// Section and equation label, e.g. "3.6 Ct2d".
inline std::string paper_eq(const catalog_entry& e)
{
    return e.section + " " + e.id;
}

namespace detail {

/// %.17g, or null for values JSON cannot hold.
inline std::string number(double x)
{
    if (!std::isfinite(x))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string quoted(const std::string& s)
{
    return nlohmann::json(s).dump();
}

inline std::string complex_object(cplx z)
{
    return "{\"re\":" + number(z.real()) + ",\"im\":" + number(z.imag()) + "}";
}

inline std::string params_object(const param_map& p)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [name, value] : p) {
        if (!first)
            out += ",";
        first = false;
        out += quoted(name) + ":" + number(value);
    }
    return out + "}";
}

inline double read_number(const nlohmann::json& j)
{
    return j.is_null() ? std::nan("") : j.get<double>();
}

inline cplx read_complex(const nlohmann::json& j)
{
    return {read_number(j.at("re")), read_number(j.at("im"))};
}

} // namespace detail

struct labelled_report {
    std::string paper_eq;
    verification_report report;
};

/// One report as a JSON object, keys in schema order.
inline std::string report_json(const labelled_report& lr)
{
    const verification_report& r = lr.report;
    std::string out = "{\"id\":" + detail::quoted(r.id);
    out += ",\"paper_eq\":" + detail::quoted(lr.paper_eq);
    out += ",\"params\":" + detail::params_object(r.params);
    out += ",\"lhs\":{\"re\":" + detail::number(r.lhs.real()) + ",\"im\":" + detail::number(r.lhs.imag()) +
           ",\"err\":" + detail::number(r.lhs_error) + "}";
    out += ",\"rhs_closed\":" + detail::complex_object(r.rhs_closed);
    out += ",\"rhs_residues\":" + detail::complex_object(r.rhs_residues);
    out += ",\"criterion_dev\":" + detail::number(r.criterion_deviation);
    out += ",\"residual_closed\":" + detail::number(r.residual_closed);
    out += ",\"residual_residues\":" + detail::number(r.residual_residues);
    out += ",\"pass\":" + std::string(r.pass ? "true" : "false");
    out += ",\"seconds\":" + detail::number(r.seconds);
    if (!r.error.empty())
        out += ",\"error\":" + detail::quoted(r.error);
    return out + "}";
}

inline labelled_report report_from_json(const nlohmann::json& j)
{
    labelled_report lr;
    verification_report& r = lr.report;
    r.id = j.at("id").get<std::string>();
    lr.paper_eq = j.at("paper_eq").get<std::string>();
    for (const auto& [name, value] : j.at("params").items())
        r.params[name] = detail::read_number(value);
    r.lhs = detail::read_complex(j.at("lhs"));
    r.lhs_error = detail::read_number(j.at("lhs").at("err"));
    r.rhs_closed = detail::read_complex(j.at("rhs_closed"));
    r.rhs_residues = detail::read_complex(j.at("rhs_residues"));
    r.criterion_deviation = detail::read_number(j.at("criterion_dev"));
    r.residual_closed = detail::read_number(j.at("residual_closed"));
    r.residual_residues = detail::read_number(j.at("residual_residues"));
    r.pass = j.at("pass").get<bool>();
    r.seconds = detail::read_number(j.at("seconds"));
    if (j.contains("error"))
        r.error = j.at("error").get<std::string>();
    return lr;
}

inline std::string reports_json(const std::vector<labelled_report>& reports)
{
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
        out += "  " + report_json(reports[i]) + (i + 1 < reports.size() ? ",\n" : "\n");
    return out + "]\n";
}

inline std::vector<labelled_report> reports_from_json(const std::string& text)
{
    std::vector<labelled_report> out;
    for (const nlohmann::json& j : nlohmann::json::parse(text))
        out.push_back(report_from_json(j));
    return out;
}

inline std::string reports_csv(const std::vector<labelled_report>& reports)
{
    std::string out = "id,paper_eq,params,lhs_re,lhs_im,lhs_err,rhs_closed_re,rhs_closed_im,rhs_residues_re,"
                      "rhs_residues_im,criterion_dev,residual_closed,residual_residues,pass,seconds,error\n";
    for (const labelled_report& lr : reports) {
        const verification_report& r = lr.report;
        std::string params;
        for (const auto& [name, value] : r.params)
            params += (params.empty() ? "" : ";") + name + "=" + detail::number(value);
        std::string error = r.error;
        for (char& c : error)
            if (c == '"')
                c = '\'';
        const std::vector<std::string> cells = {
            r.id,
            lr.paper_eq,
            params,
            detail::number(r.lhs.real()),
            detail::number(r.lhs.imag()),
            detail::number(r.lhs_error),
            detail::number(r.rhs_closed.real()),
            detail::number(r.rhs_closed.imag()),
            detail::number(r.rhs_residues.real()),
            detail::number(r.rhs_residues.imag()),
            detail::number(r.criterion_deviation),
            detail::number(r.residual_closed),
            detail::number(r.residual_residues),
            r.pass ? "true" : "false",
            detail::number(r.seconds),
            "\"" + error + "\""};
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += cells[i] + (i + 1 < cells.size() ? "," : "\n");
    }
    return out;
}

inline std::string reports_text(const std::vector<labelled_report>& reports)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %-4s %-24s %-10s %-10s %-10s %8s\n", "equation", "pass", "lhs (re)",
                  "res_closed", "res_resid", "crit_dev", "seconds");
    out << line;
    int passed = 0;
    for (const labelled_report& lr : reports) {
        const verification_report& r = lr.report;
        passed += r.pass ? 1 : 0;
        std::snprintf(line, sizeof line, "%-18s %-4s %-24.16g %-10.2e %-10.2e %-10.2e %8.2f", lr.paper_eq.c_str(),
                      r.pass ? "ok" : "FAIL", r.lhs.real(), r.residual_closed, r.residual_residues,
                      r.criterion_deviation, r.seconds);
        out << line;
        if (!r.error.empty())
            out << "  " << r.error;
        out << "\n";
    }
    out << passed << "/" << reports.size() << " passed\n";
    return out.str();
}

inline std::string emit_reports(const std::vector<labelled_report>& reports, report_format f)
{
    switch (f) {
    case report_format::json:
        return reports_json(reports);
    case report_format::csv:
        return reports_csv(reports);
    case report_format::text:
        return reports_text(reports);
    }
    return {};
}

/// The catalog listing: id, section, family, parameter ranges, closed form, notes.
inline std::string catalog_json(const std::vector<catalog_entry>& entries)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const catalog_entry& e : entries) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const param_range& p : e.params)
            params[p.name] = {{"default", p.default_value},
                              {"min", p.min},
                              {"max", p.max},
                              {"open_min", p.open_min},
                              {"open_max", p.open_max}};
        arr.push_back({{"id", e.id},
                       {"section", e.section},
                       {"family", e.family},
                       {"params", params},
                       {"closed_form_expr", e.closed_form_expr},
                       {"notes", e.notes}});
    }
    return arr.dump(2) + "\n";
}

} // namespace glasser

#endif
