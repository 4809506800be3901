#include "donut/format.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace donut {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json quad_json(const Quad& q) { return ordered_json::array({q.a, q.b, q.x, q.y}); }

std::string json_line(const ordered_json& j) { return j.dump() + '\n'; }

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    return std::nullopt;
}

std::string format_validation(const Quad& q, const ValidationReport& report, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json j;
            j["donut"] = quad_json(q);
            j["valid"] = report.valid;
            j["violations"] = report.violations;
            return json_line(j);
        }
        case OutputFormat::Csv:
            os << "a,b,x,y,valid,violations\n";
            os << q.a << ',' << q.b << ',' << q.x << ',' << q.y << ',' << (report.valid ? 1 : 0) << ',';
            for (std::size_t i = 0; i < report.violations.size(); ++i) {
                os << (i ? ";" : "") << report.violations[i];
            }
            os << '\n';
            return os.str();
        case OutputFormat::Plain:
            os << q << (report.valid ? " is a donut\n" : " is not a donut\n");
            for (const auto& v : report.violations) os << "  violated: " << v << '\n';
            return os.str();
    }
    return {};
}

std::string format_configurations(u64 D, const std::vector<DonutConfig>& configs,
                                  const DonutClass& cls, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json j;
            j["D"] = D;
            j["configs"] = ordered_json::array();
            for (const auto& d : configs) j["configs"].push_back(quad_json(d.quad()));
            j["class"] = kind_name(cls.kind);
            j["coprime_count"] = cls.coprime_config_count;
            j["total_count"] = cls.total_config_count;
            return json_line(j);
        }
        case OutputFormat::Csv:
            os << "D,a,b,x,y,coprime\n";
            for (const auto& d : configs) {
                os << D << ',' << d.a() << ',' << d.b() << ',' << d.x() << ',' << d.y() << ','
                   << (is_coprime_config(d) ? 1 : 0) << '\n';
            }
            return os.str();
        case OutputFormat::Plain:
            for (const auto& d : configs) os << d << '\n';
            return os.str();
    }
    return {};
}

std::string format_classification(u64 D, const DonutClass& cls, OutputFormat fmt, bool header) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json j;
            j["D"] = D;
            j["class"] = kind_name(cls.kind);
            j["coprime_count"] = cls.coprime_config_count;
            j["total_count"] = cls.total_config_count;
            j["coprime_orbit_count"] = cls.coprime_orbit_count;
            return json_line(j);
        }
        case OutputFormat::Csv:
            if (header) os << "D,class,coprime_count,total_count,coprime_orbit_count\n";
            os << D << ',' << kind_name(cls.kind) << ',' << cls.coprime_config_count << ','
               << cls.total_config_count << ',' << cls.coprime_orbit_count << '\n';
            return os.str();
        case OutputFormat::Plain:
            os << D << ": " << kind_name(cls.kind) << " (" << cls.coprime_config_count << " coprime of "
               << cls.total_config_count << " configurations)\n";
            return os.str();
    }
    return {};
}

std::string format_square_family(std::string_view family, u64 n,
                                 const std::vector<DonutConfig>& donuts, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json j;
            j["n"] = n;
            j["family"] = family;
            j["configs"] = ordered_json::array();
            for (const auto& d : donuts) j["configs"].push_back(quad_json(d.quad()));
            return json_line(j);
        }
        case OutputFormat::Csv:
            os << "n,a,b,x,y\n";
            for (const auto& d : donuts) {
                os << n << ',' << d.a() << ',' << d.b() << ',' << d.x() << ',' << d.y() << '\n';
            }
            return os.str();
        case OutputFormat::Plain:
            for (const auto& d : donuts) os << d << '\n';
            return os.str();
    }
    return {};
}

std::string format_sequence(u64 limit, const std::vector<u64>& terms,
                            const std::vector<u64>* multiplicity, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json j;
            j["limit"] = limit;
            j["terms"] = terms;
            if (multiplicity) j["multiplicity"] = *multiplicity;
            return json_line(j);
        }
        case OutputFormat::Csv:
            os << (multiplicity ? "n,multiplicity\n" : "n\n");
            for (std::size_t i = 0; i < terms.size(); ++i) {
                os << terms[i];
                if (multiplicity) os << ',' << (*multiplicity)[i];
                os << '\n';
            }
            return os.str();
        case OutputFormat::Plain:
            for (std::size_t i = 0; i < terms.size(); ++i) {
                os << (i ? " " : "") << terms[i];
                if (multiplicity) os << 'x' << (*multiplicity)[i];
            }
            if (!terms.empty()) os << '\n';
            return os.str();
    }
    return {};
}

std::string format_report(const VerificationReport& report, OutputFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
        case OutputFormat::Json: {
            ordered_json j;
            j["sweep"] = report.name;
            j["limit"] = report.limit;
            j["complete"] = report.complete;
            j["checked_through"] = report.checked_through;
            j["counterexample_count"] = report.counterexamples.size();
            j["counterexamples"] = ordered_json::array();
            for (const auto& c : report.counterexamples) {
                j["counterexamples"].push_back({{"n", c.n}, {"detail", c.detail}});
            }
            ordered_json tallies = ordered_json::object();
            for (const auto& [name, value] : report.tallies) tallies[name] = value;
            j["tallies"] = tallies;
            return json_line(j);
        }
        case OutputFormat::Csv:
            os << "key,value\n";
            os << "sweep," << report.name << '\n';
            os << "limit," << report.limit << '\n';
            os << "complete," << (report.complete ? 1 : 0) << '\n';
            os << "checked_through," << report.checked_through << '\n';
            os << "counterexamples," << report.counterexamples.size() << '\n';
            for (const auto& [name, value] : report.tallies) os << name << ',' << value << '\n';
            return os.str();
        case OutputFormat::Plain:
            os << "sweep: " << report.name << '\n';
            os << "limit: " << report.limit << '\n';
            os << "complete: " << (report.complete ? "yes" : "no (interrupted)") << '\n';
            os << "checked_through: " << report.checked_through << '\n';
            os << "counterexamples: " << report.counterexamples.size() << '\n';
            for (const auto& [name, value] : report.tallies) os << name << ": " << value << '\n';
            for (const auto& c : report.counterexamples) {
                os << "counterexample " << c.n << ": " << c.detail << '\n';
            }
            return os.str();
    }
    return {};
}

std::string render_svg(const DonutConfig& d, u64 scale) {
    if (scale == 0) throw DomainError("render scale must be >= 1");
    const u64 margin = 40;
    const u64 outer_w = checked_mul(d.a(), scale);
    const u64 outer_h = checked_mul(d.b(), scale);
    const u64 hole_w = d.x() * scale;
    const u64 hole_h = d.y() * scale;
    // centred; the offset may land on a half pixel
    const double hole_left = static_cast<double>(margin) + static_cast<double>(outer_w - hole_w) / 2.0;
    const double hole_top = static_cast<double>(margin) + static_cast<double>(outer_h - hole_h) / 2.0;
    const u64 width = outer_w + 2 * margin;
    const u64 height = outer_h + 2 * margin;

    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "  <title>donut " << d << "</title>\n"
       << "  <rect id=\"exterior\" x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << outer_w
       << "\" height=\"" << outer_h << "\" fill=\"#d9a066\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
       << "  <rect id=\"hole\" x=\"" << hole_left << "\" y=\"" << hole_top << "\" width=\"" << hole_w
       << "\" height=\"" << hole_h << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n"
       << "  <g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n"
       << "    <text x=\"" << margin + outer_w / 2.0 << "\" y=\"" << margin - 8 << "\">a = " << d.a()
       << "</text>\n"
       << "    <text x=\"" << margin / 2 << "\" y=\"" << margin + outer_h / 2.0 << "\">b = " << d.b()
       << "</text>\n"
       << "    <text x=\"" << hole_left + hole_w / 2.0 << "\" y=\"" << hole_top + hole_h / 2.0
       << "\">x = " << d.x() << "</text>\n"
       << "    <text x=\"" << hole_left + hole_w / 2.0 << "\" y=\"" << hole_top + hole_h / 2.0 + 14
       << "\">y = " << d.y() << "</text>\n"
       << "  </g>\n"
       << "</svg>\n";
    return os.str();
}

}  // namespace donut
