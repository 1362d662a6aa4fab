#include "higgs/report.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace higgs {

namespace {

using nlohmann::ordered_json;

std::int64_t json_int(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi)
        throw JsonIntegerRange("value " + v.str() +
                               " exceeds the 64-bit range JSON consumers parse losslessly; "
                               "use text or csv output");
    return v.convert_to<std::int64_t>();
}

ordered_json poly_json(const IntPolynomial& p) {
    ordered_json a = ordered_json::array();
    for (const BigInt& c : p.coeffs()) a.push_back(json_int(c));
    return a;
}

ordered_json type_ranks_json(const VHSType& t) {
    ordered_json a = ordered_json::array();
    for (int r : t.ranks()) a.push_back(r);
    return a;
}

ordered_json type_degrees_json(const VHSType& t) {
    ordered_json a = ordered_json::array();
    for (long long d : t.degrees()) a.push_back(d);
    return a;
}

std::vector<FixedPointRow> fixed_point_rows(const CurveContext& ctx, const ReportRequest& req) {
    std::vector<FixedPointRow> rows;
    if (req.rank == 1) {
        rows.push_back({VHSType({1}, {req.degree}), BigInt(0)});
        return rows;
    }
    if (req.rank != 2)
        throw UnsupportedRank("fixed-point enumeration is implemented for ranks 1 and 2; got " +
                              std::to_string(req.rank));
    if (std::gcd(2LL, req.degree) != 1)
        throw NonCoprime("rank-2 fixed-point types require odd degree; got " +
                         std::to_string(req.degree));
    for (const VHSType& t : enumerate_rank2_fixed_types(ctx, 1))
        rows.push_back({t, morse_index(ctx, t)});
    return rows;
}

std::vector<Section> default_sections(const CurveContext& ctx, int rank) {
    std::vector<Section> sections{Section::Dims};
    if (ctx.genus() >= 2) sections.push_back(Section::Spectral);
    if (rank <= 2) {
        sections.push_back(Section::FixedPoints);
        sections.push_back(Section::Betti);
    }
    return sections;
}

bool wants(const std::vector<Section>& sections, Section s) {
    for (Section x : sections)
        if (x == s) return true;
    return false;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string join_ints(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string join_coeffs(const IntPolynomial& p) {
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + p.coeffs()[i].str();
    return s;
}

std::string render_text(const ReportData& d) {
    std::ostringstream out;
    out << "moduli report: genus " << d.spec.genus << ", rank " << d.spec.rank << ", degree "
        << d.spec.degree << ", flavor " << to_string(d.spec.flavor) << "\n";
    if (d.dims) {
        out << "dims {base " << d.dims->base << ", total " << d.dims->total << "}";
        if (d.dims->stable_bundles) out << " (stable bundles: " << *d.dims->stable_bundles << ")";
        out << "\n";
    }
    if (d.spectral) {
        out << "spectral {spectral_genus " << d.spectral->spectral_genus << ", line_degree "
            << d.spectral->line_degree << "} (base_dim " << d.spectral->base_dim << " = fibre_dim "
            << d.spectral->fibre_dim << ")\n";
    }
    if (d.fixed_points) {
        out << "fixed_points";
        if (d.spec.rank == 2 && d.spec.degree != 1) out << " (determinant degree normalized to 1)";
        out << " {\n";
        for (const FixedPointRow& row : *d.fixed_points)
            out << "  type " << to_string(row.type) << "  index " << row.index << "\n";
        out << "}\n";
    }
    if (d.betti) {
        out << "betti [" << to_string(d.betti->provenance) << "] {\n";
        for (const FixedComponentReport& c : d.betti->components) {
            out << "  component " << to_string(c.type) << "  index " << c.morse_index << "  poly "
                << to_string(c.component_poly ? *c.component_poly : IntPolynomial()) << "\n";
            if (!c.description.empty()) out << "    " << c.description << "\n";
        }
        if (d.betti->factorization) {
            out << "  P_y = (1+y)^" << 2 * d.spec.genus;
            if (d.betti->factorization->second != IntPolynomial::one())
                out << " * (" << to_string(d.betti->factorization->second) << ")";
            out << "\n      = " << to_string(d.betti->total) << "\n";
        } else {
            out << "  P_y = " << to_string(d.betti->total) << "\n";
        }
        out << "}\n";
    }
    return out.str();
}

std::string render_csv(const ReportData& d) {
    std::ostringstream out;
    out << "section,field,value\n";
    out << "spec,genus," << d.spec.genus << "\n";
    out << "spec,rank," << d.spec.rank << "\n";
    out << "spec,degree," << d.spec.degree << "\n";
    out << "spec,flavor," << to_string(d.spec.flavor) << "\n";
    if (d.dims) {
        out << "dims,base," << d.dims->base << "\n";
        out << "dims,total," << d.dims->total << "\n";
        if (d.dims->stable_bundles) out << "dims,stable_bundles," << *d.dims->stable_bundles << "\n";
    }
    if (d.spectral) {
        out << "spectral,spectral_genus," << d.spectral->spectral_genus << "\n";
        out << "spectral,line_degree," << d.spectral->line_degree << "\n";
    }
    if (d.fixed_points) {
        out << "\ntype,degrees,index\n";
        for (const FixedPointRow& row : *d.fixed_points)
            out << csv_field("(" + join_ints(row.type.ranks()) + ")") << ","
                << csv_field("(" + join_ints(row.type.degrees()) + ")") << "," << row.index << "\n";
    }
    if (d.betti) {
        out << "\ntype,degrees,index,poly_coeffs,provenance\n";
        for (const FixedComponentReport& c : d.betti->components)
            out << csv_field("(" + join_ints(c.type.ranks()) + ")") << ","
                << csv_field("(" + join_ints(c.type.degrees()) + ")") << "," << c.morse_index << ","
                << csv_field(c.component_poly ? join_coeffs(*c.component_poly) : "") << ","
                << to_string(c.provenance) << "\n";
        out << "total,,," << csv_field(join_coeffs(d.betti->total)) << ","
            << to_string(d.betti->provenance) << "\n";
    }
    return out.str();
}

ordered_json json_from_data(const ReportData& d) {
    ordered_json j;
    j["spec"]["genus"] = d.spec.genus;
    j["spec"]["rank"] = d.spec.rank;
    j["spec"]["degree"] = d.spec.degree;
    j["spec"]["flavor"] = to_string(d.spec.flavor);
    if (d.dims) {
        j["dims"]["base"] = d.dims->base;
        j["dims"]["total"] = d.dims->total;
        if (d.dims->stable_bundles) j["dims"]["stable_bundles"] = *d.dims->stable_bundles;
    }
    if (d.spectral) {
        j["spectral"]["spectral_genus"] = d.spectral->spectral_genus;
        j["spectral"]["line_degree"] = d.spectral->line_degree;
    }
    if (d.fixed_points) {
        ordered_json rows = ordered_json::array();
        for (const FixedPointRow& row : *d.fixed_points) {
            ordered_json r;
            r["ranks"] = type_ranks_json(row.type);
            r["degrees"] = type_degrees_json(row.type);
            r["index"] = json_int(row.index);
            rows.push_back(std::move(r));
        }
        j["fixed_points"] = std::move(rows);
    }
    if (d.betti) {
        ordered_json components = ordered_json::array();
        for (const FixedComponentReport& c : d.betti->components) {
            ordered_json comp;
            comp["ranks"] = type_ranks_json(c.type);
            comp["degrees"] = type_degrees_json(c.type);
            comp["index"] = json_int(c.morse_index);
            comp["poly"] = c.component_poly ? poly_json(*c.component_poly) : ordered_json::array();
            comp["description"] = c.description;
            comp["provenance_flag"] = to_string(c.provenance);
            components.push_back(std::move(comp));
        }
        j["betti"]["components"] = std::move(components);
        j["betti"]["total"] = poly_json(d.betti->total);
        if (d.betti->factorization) {
            j["betti"]["factorization"] = ordered_json::array(
                {poly_json(d.betti->factorization->first), poly_json(d.betti->factorization->second)});
        }
        j["betti"]["provenance_flag"] = to_string(d.betti->provenance);
    }
    return j;
}

}  // namespace

Section parse_section(const std::string& name) {
    if (name == "dims") return Section::Dims;
    if (name == "spectral") return Section::Spectral;
    if (name == "fixed_points") return Section::FixedPoints;
    if (name == "betti") return Section::Betti;
    throw std::invalid_argument("unknown section '" + name +
                                "' (expected dims, spectral, fixed_points or betti)");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, json or csv)");
}

Flavor parse_flavor(const std::string& name) {
    if (name == "GL") return Flavor::GL;
    if (name == "SL") return Flavor::SLFixedDet;
    if (name == "PGL") return Flavor::PGLQuotient;
    throw std::invalid_argument("unknown flavor '" + name + "' (expected GL, SL or PGL)");
}

ReportData collect_report(const ReportRequest& req) {
    if (req.rank < 1)
        throw UnsupportedRank("rank must be at least 1, got " + std::to_string(req.rank));
    CurveContext ctx(req.genus);

    const std::vector<Section> sections =
        req.sections ? *req.sections : default_sections(ctx, req.rank);

    ReportData data;
    data.spec = ModuliSpec{req.genus, req.rank, req.degree, req.flavor};
    if (wants(sections, Section::Dims)) {
        DimsData dims;
        dims.base = hitchin_base_dim(ctx, req.rank);
        dims.total = moduli_dim(ctx, req.rank);
        if (ctx.genus() >= 2) dims.stable_bundles = stable_bundles_dim(ctx, req.rank);
        data.dims = dims;
    }
    if (wants(sections, Section::Spectral)) data.spectral = spectral_report(ctx, req.rank, req.degree);
    if (wants(sections, Section::FixedPoints)) data.fixed_points = fixed_point_rows(ctx, req);
    if (wants(sections, Section::Betti)) data.betti = higgs_poincare(data.spec);
    return data;
}

nlohmann::ordered_json report_json(const ReportRequest& req) {
    return json_from_data(collect_report(req));
}

std::string to_canonical_string(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string render_report(const ReportRequest& req) {
    const ReportData data = collect_report(req);
    switch (req.format) {
        case OutputFormat::Text: return render_text(data);
        case OutputFormat::Json: return to_canonical_string(json_from_data(data));
        case OutputFormat::Csv: return render_csv(data);
    }
    throw std::logic_error("unknown output format");
}

std::string error_json(const DomainError& e) {
    nlohmann::ordered_json j;
    j["error"]["code"] = e.code();
    j["error"]["message"] = e.what();
    return to_canonical_string(j);
}

}  // namespace higgs
