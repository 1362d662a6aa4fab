#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "higgs/report.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

long long parse_integer(const std::string& s, const char* what) {
    std::size_t consumed = 0;
    long long value = 0;
    try {
        value = std::stoll(s, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": '" + s + "' is not an integer");
    }
    if (consumed != s.size())
        throw std::invalid_argument(std::string(what) + ": '" + s + "' is not an integer");
    return value;
}

int run_report(const higgs::ReportRequest& request) {
    std::cout << higgs::render_report(request);
    return 0;
}

int run_index(int genus, const std::string& ranks_csv, const std::string& degrees_csv) {
    const std::vector<std::string> rank_parts = split_commas(ranks_csv);
    const std::vector<std::string> degree_parts = split_commas(degrees_csv);
    if (rank_parts.size() != degree_parts.size())
        throw std::invalid_argument("--ranks and --degrees must have the same length (got " +
                                    std::to_string(rank_parts.size()) + " and " +
                                    std::to_string(degree_parts.size()) + ")");
    std::vector<int> ranks;
    std::vector<long long> degrees;
    for (const std::string& part : rank_parts)
        ranks.push_back(static_cast<int>(parse_integer(part, "--ranks")));
    for (const std::string& part : degree_parts)
        degrees.push_back(parse_integer(part, "--degrees"));

    const higgs::CurveContext ctx(genus);
    const higgs::VHSType type(std::move(ranks), std::move(degrees));
    std::cout << higgs::morse_index(ctx, type) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological invariants of Higgs bundle moduli spaces on a curve"};
    app.require_subcommand(1);

    int genus = 0;
    int rank = 0;
    long long degree = 1;
    std::string flavor = "GL";
    std::string format = "text";
    std::string sections;

    CLI::App* report = app.add_subcommand(
        "report", "dimensions, spectral data, fixed points and Betti numbers for one (g, r, d)");
    report->add_option("--genus", genus, "curve genus")->required()->check(CLI::Range(1, 1000000));
    report->add_option("--rank", rank, "bundle rank")->required()->check(CLI::Range(1, 10000));
    report->add_option("--degree", degree, "bundle degree (default 1)")
        ->check(CLI::Range(-1000000000000LL, 1000000000000LL));
    report->add_option("--flavor", flavor, "group flavor: GL, SL or PGL (default GL)")
        ->check(CLI::IsMember({"GL", "SL", "PGL"}));
    report->add_option("--format", format, "output format: text, json or csv (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    report->add_option("--sections", sections,
                       "comma list from dims,spectral,fixed_points,betti (default: all defined)");

    int index_genus = 0;
    std::string ranks_csv;
    std::string degrees_csv;

    CLI::App* index = app.add_subcommand("index", "Morse index of a fixed-point chain type");
    index->add_option("--genus", index_genus, "curve genus")->required()->check(CLI::Range(2, 1000000));
    index->add_option("--ranks", ranks_csv, "comma list of chain ranks, e.g. 1,1")->required();
    index->add_option("--degrees", degrees_csv, "comma list of chain degrees, e.g. 1,0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*report) {
            higgs::ReportRequest request;
            request.genus = genus;
            request.rank = rank;
            request.degree = degree;
            request.flavor = higgs::parse_flavor(flavor);
            request.format = higgs::parse_format(format);
            if (!sections.empty()) {
                std::vector<higgs::Section> parsed;
                for (const std::string& name : split_commas(sections))
                    parsed.push_back(higgs::parse_section(name));
                request.sections = std::move(parsed);
            }
            return run_report(request);
        }
        return run_index(index_genus, ranks_csv, degrees_csv);
    } catch (const higgs::DomainError& e) {
        std::cerr << higgs::error_json(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
