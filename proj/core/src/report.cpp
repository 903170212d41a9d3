#include "dec/error.hpp"
#include "dec/experiment.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <set>

namespace dec {

ReportFormat parse_report_format(std::string_view name)
{
    if (name == "markdown")
        return ReportFormat::markdown;
    if (name == "csv")
        return ReportFormat::csv;
    throw InvalidArgument(fmt::format("unknown report format '{}'", name));
}

namespace {

std::string markdown(const ConvergenceReport& report)
{
    const auto names = report.norms();
    std::string out = fmt::format("k = {}, {} mesh", report.k, to_string(report.family));
    if (report.family == MeshFamily::perturbed)
        out += fmt::format(" (seed {}, alpha {})", report.seed, report.alpha);
    out += "\n\n| h |";
    std::string rule = "|---|";
    for (const auto& n : names) {
        out += fmt::format(" ||{}|| | rate |", n);
        rule += "---|---|";
    }
    out += "\n" + rule + "\n";

    std::vector<std::vector<double>> rates;
    for (const auto& n : names)
        rates.push_back(report.rates(n));
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& rec = report.records[i];
        out += fmt::format("| 2^-{} |", rec.level);
        for (std::size_t j = 0; j < names.size(); ++j) {
            out += fmt::format(" {:.2e} |", rec.norms.at(names[j]));
            out += i == 0 ? std::string(" -- |") : fmt::format(" {:.2f} |", rates[j][i - 1]);
        }
        out += "\n";
    }
    return out;
}

std::string csv(const ConvergenceReport& report)
{
    const auto names = report.norms();
    std::string out = fmt::format("# k={} family={} seed={} alpha={}\n", report.k,
                                  to_string(report.family), report.seed, report.alpha);
    out += "level,h";
    for (const auto& n : names)
        out += fmt::format(",{},rate_{}", n, n);
    out += ",iterations,residual\n";

    std::vector<std::vector<double>> rates;
    for (const auto& n : names)
        rates.push_back(report.rates(n));
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& rec = report.records[i];
        out += fmt::format("{},{:.17g}", rec.level, rec.h);
        for (std::size_t j = 0; j < names.size(); ++j) {
            out += fmt::format(",{:.17g},", rec.norms.at(names[j]));
            if (i > 0)
                out += fmt::format("{:.17g}", rates[j][i - 1]);
        }
        out += fmt::format(",{},{:.17g}\n", rec.iterations, rec.residual);
    }
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string_view::npos ? s.size() - pos : next - pos));
        if (next == std::string_view::npos)
            return out;
        pos = next + 1;
    }
}

template <class T>
T parse_number(std::string_view s, std::size_t line)
{
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError(fmt::format("report line {}: invalid number '{}'", line, s));
    return v;
}

void parse_metadata(std::string_view line, ConvergenceReport& report)
{
    for (auto field : split(line, ' ')) {
        const auto eq = field.find('=');
        if (eq == std::string_view::npos)
            continue;
        const auto key = field.substr(0, eq);
        const auto value = field.substr(eq + 1);
        if (key == "k")
            report.k = parse_number<int>(value, 1);
        else if (key == "family")
            report.family = parse_mesh_family(value);
        else if (key == "seed")
            report.seed = parse_number<std::uint64_t>(value, 1);
        else if (key == "alpha")
            report.alpha = parse_number<double>(value, 1);
    }
}

}  // namespace

std::string render_report(const ConvergenceReport& report, ReportFormat format)
{
    return format == ReportFormat::markdown ? markdown(report) : csv(report);
}

ConvergenceReport parse_csv_report(std::string_view text)
{
    ConvergenceReport report;
    std::vector<std::string_view> header;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            parse_metadata(line.substr(1), report);
            continue;
        }
        const auto fields = split(line, ',');
        if (header.empty()) {
            header = fields;
            if (header.size() < 2 || header[0] != "level" || header[1] != "h")
                throw FormatError("report: header must start with 'level,h'");
            std::set<std::string> norms;
            for (auto h : header)
                if (h == kNormEu || h == kNormDeu || h == kNormErho || h == kNormDerho)
                    norms.insert(std::string(h));
            for (int k = 0; k <= 2; ++k) {
                const auto expected = norm_names(k);
                if (std::set<std::string>(expected.begin(), expected.end()) == norms)
                    report.k = k;
            }
            continue;
        }
        if (fields.size() != header.size())
            throw FormatError(fmt::format("report line {}: expected {} fields, found {}", line_no,
                                          header.size(), fields.size()));
        ErrorRecord rec;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto col = header[i];
            if (col == "level")
                rec.level = parse_number<int>(fields[i], line_no);
            else if (col == "h")
                rec.h = parse_number<double>(fields[i], line_no);
            else if (col == "iterations")
                rec.iterations = parse_number<int>(fields[i], line_no);
            else if (col == "residual")
                rec.residual = parse_number<double>(fields[i], line_no);
            else if (col.starts_with("rate_"))
                continue;
            else
                rec.norms[std::string(col)] = parse_number<double>(fields[i], line_no);
        }
        report.records.push_back(std::move(rec));
    }
    if (header.empty())
        throw FormatError("report: missing header");
    return report;
}

}  // namespace dec
