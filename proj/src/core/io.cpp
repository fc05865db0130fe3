#include "io.hpp"

#include <json.hpp>
#include <sstream>

namespace isoform {

using ordered_json = nlohmann::ordered_json;

namespace {

long long require_int(const ordered_json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw_parse("missing or non-integer field '" + field + "'");
    return j[field].get<long long>();
}

std::vector<long long> require_int_list(const ordered_json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_array())
        throw_parse("missing or non-array field '" + field + "'");
    std::vector<long long> out;
    for (const auto& x : j[field]) {
        if (!x.is_number_integer())
            throw_parse("non-integer entry in '" + field + "'");
        out.push_back(x.get<long long>());
    }
    return out;
}

} // namespace

void parse_input(const std::string& text, GroupSpec& spec, CircleEmbedding& circle) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw_parse(std::string("input is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw_parse("input document must be a JSON object");

    spec = GroupSpec{};
    spec.central_torus_rank = (int)require_int(j, "central_torus_rank");
    if (!j.contains("factors") || !j["factors"].is_array())
        throw_parse("missing or non-array field 'factors'");
    for (const auto& f : j["factors"]) {
        if (!f.is_object() || !f.contains("family") || !f["family"].is_string())
            throw_parse("each factor needs a string field 'family'");
        SimpleType t;
        t.family = family_from_string(f["family"].get<std::string>());
        t.rank = (int)require_int(f, "rank");
        spec.factors.push_back(t);
    }

    if (!j.contains("circle") || !j["circle"].is_object())
        throw_parse("missing or non-object field 'circle'");
    const auto& c = j["circle"];
    circle = CircleEmbedding{};
    circle.torus_exponents = require_int_list(c, "torus_exponents");
    if (!c.contains("factor_exponents") || !c["factor_exponents"].is_array())
        throw_parse("missing or non-array field 'circle.factor_exponents'");
    for (const auto& row : c["factor_exponents"]) {
        if (!row.is_array()) throw_parse("'factor_exponents' must be a list of lists");
        std::vector<long long> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw_parse("non-integer entry in 'factor_exponents'");
            r.push_back(x.get<long long>());
        }
        circle.factor_exponents.push_back(std::move(r));
    }
}

namespace {

ordered_json spec_json(const GroupSpec& spec) {
    ordered_json factors = ordered_json::array();
    for (const auto& t : spec.factors)
        factors.push_back({{"family", std::string(1, (char)t.family)}, {"rank", t.rank}});
    return ordered_json{{"central_torus_rank", spec.central_torus_rank},
                        {"factors", factors}};
}

ordered_json verdict_json(const ReflectionVerdict& v) {
    ordered_json o{{"reflected", v.reflected}, {"criterion", v.criterion}};
    if (v.witness_simple_images) o["witness_simple_images"] = *v.witness_simple_images;
    return o;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string report_to_json(const GroupSpec& spec, const ClassificationReport& rep) {
    ordered_json factors = ordered_json::array();
    for (const auto& v : rep.per_factor) factors.push_back(verdict_json(v));
    ordered_json j{{"group", spec_json(spec)},
                   {"isotropy_formal", rep.isotropy_formal},
                   {"case", rep.case_label},
                   {"pi0_normalizer", rep.pi0N},
                   {"per_factor", factors},
                   {"poincare", rep.poincare.str()},
                   {"poincare_coefficients", rep.poincare.coeff()},
                   {"betti", rep.betti},
                   {"dimension_check", rep.dimension_check}};
    return dump(j);
}

std::string report_to_text(const GroupSpec& spec, const ClassificationReport& rep) {
    std::ostringstream os;
    os << "group: central torus rank " << spec.central_torus_rank << ", factors [";
    for (size_t i = 0; i < spec.factors.size(); ++i)
        os << (i ? ", " : "") << spec.factors[i].str();
    os << "]\n";
    os << "verdict: " << (rep.isotropy_formal ? "isotropy-formal" : "NOT isotropy-formal")
       << ", case " << rep.case_label << "\n";
    os << "|pi0 N| = " << rep.pi0N << "\n";
    for (size_t i = 0; i < rep.per_factor.size(); ++i) {
        const auto& v = rep.per_factor[i];
        os << "factor " << spec.factors[i].str() << ": "
           << (v.reflected ? "reflected" : "not reflected") << " (" << v.criterion << ")\n";
    }
    os << "p(G/S) = " << rep.poincare.str() << "\n";
    os << "betti(G/S) = " << rep.betti << "\n";
    os << "dimension check: " << (rep.dimension_check ? "pass" : "fail") << "\n";
    return os.str();
}

std::string poincare_to_json(const GroupSpec& spec, const CircleEmbedding& c) {
    Poly pg = poincare_group(spec);
    Poly pq = poincare_circle_quotient(spec, c);
    ordered_json j{{"group", spec_json(spec)},
                   {"poincare_group", pg.str()},
                   {"poincare_group_coefficients", pg.coeff()},
                   {"poincare_quotient", pq.str()},
                   {"poincare_quotient_coefficients", pq.coeff()},
                   {"betti_group", total_betti(pg)},
                   {"betti_quotient", total_betti(pq)}};
    return dump(j);
}

std::string poincare_to_text(const GroupSpec& spec, const CircleEmbedding& c) {
    Poly pg = poincare_group(spec);
    Poly pq = poincare_circle_quotient(spec, c);
    std::ostringstream os;
    os << "p(G) = " << pg.str() << "\n";
    os << "p(G/S) = " << pq.str() << "\n";
    os << "betti(G) = " << total_betti(pg) << "\n";
    os << "betti(G/S) = " << total_betti(pq) << "\n";
    return os.str();
}

namespace {

ordered_json e6_json(const E6Report& rep) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.order_4_8_checks)
        checks.push_back({{"class", c.class_id},
                          {"element_order", c.element_order},
                          {"eigenspace_dim", c.eigen_dim},
                          {"contained", c.contained}});
    return ordered_json{
        {"weyl_order", rep.weyl_order},
        {"roots", rep.root_count},
        {"positive_roots", rep.positive_count},
        {"orthogonal_quadruple_sets", rep.quadruple_set_count},
        {"census", rep.census},
        {"spaces", rep.space_count},
        {"three_bases_per_space", rep.three_bases_each},
        {"max_orthogonal_set_size", rep.max_orthogonal_set_size},
        {"conjugacy_classes", rep.conjugacy_class_count},
        {"no_order_16", rep.no_order_16},
        {"max_involution_eigenspace_dim", rep.max_involution_eigen_dim},
        {"involution_dim4_eigenspaces", rep.involution_dim4_count},
        {"involution_eigenspaces_equal_spans", rep.involution_spaces_equal_spans},
        {"order_4_8_containment", checks},
        {"all_contained", rep.all_contained},
        {"stabilizer_chain", rep.stabilizer_chain},
        {"ordered_quadruple_orbit", rep.ordered_quadruple_orbit},
        {"ok", rep.ok()}};
}

} // namespace

std::string e6_report_to_json(const E6Report& rep) { return dump(e6_json(rep)); }

std::string e6_report_to_text(const E6Report& rep) {
    std::ostringstream os;
    os << "|W(E6)| = " << rep.weyl_order << "\n";
    os << "|Phi| = " << rep.root_count << ", |Phi+| = " << rep.positive_count << "\n";
    os << "orthogonal quadruple sets: " << rep.quadruple_set_count << " (census";
    for (int c : rep.census) os << " " << c;
    os << ")\n";
    os << "4-dimensional spans: " << rep.space_count << ", three bases each: "
       << (rep.three_bases_each ? "yes" : "no") << "\n";
    os << "largest mutually orthogonal root set: " << rep.max_orthogonal_set_size << "\n";
    os << "conjugacy classes: " << rep.conjugacy_class_count
       << ", order-16 elements: " << (rep.no_order_16 ? "none" : "PRESENT") << "\n";
    os << "involution (-1)-eigenspaces of max dim " << rep.max_involution_eigen_dim
       << ": " << rep.involution_dim4_count << ", equal to spans: "
       << (rep.involution_spaces_equal_spans ? "yes" : "no") << "\n";
    for (const auto& c : rep.order_4_8_checks)
        os << "class " << c.class_id << " (order " << c.element_order << ", eigenspace dim "
           << c.eigen_dim << "): " << (c.contained ? "Yes" : "No") << "\n";
    os << "stabilizer chain:";
    for (auto s : rep.stabilizer_chain) os << " " << s;
    os << "\n";
    os << "ordered quadruple orbit: " << rep.ordered_quadruple_orbit << "\n";
    os << "overall: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

WeylInfo weyl_info(const WeylGroup& W) {
    WeylInfo info;
    info.type = W.root_system().type();
    info.order = W.order();
    info.formula_order = weyl_order_formula(info.type);
    info.classes = W.conjugacy_classes();
    return info;
}

std::string weyl_info_to_json(const WeylInfo& info) {
    ordered_json sizes = ordered_json::array();
    for (const auto& c : info.classes)
        sizes.push_back({{"size", c.size}, {"element_order", c.element_order}});
    ordered_json j{{"type", info.type.str()},
                   {"order", info.order},
                   {"exponent_formula_order", info.formula_order},
                   {"order_matches_formula", info.order == info.formula_order},
                   {"conjugacy_class_count", info.classes.size()},
                   {"conjugacy_classes", sizes}};
    return dump(j);
}

std::string weyl_info_to_text(const WeylInfo& info) {
    std::ostringstream os;
    os << "|W(" << info.type.str() << ")| = " << info.order << "\n";
    os << "prod(e_i+1) = " << info.formula_order << " ("
       << (info.order == info.formula_order ? "match" : "MISMATCH") << ")\n";
    os << "conjugacy classes: " << info.classes.size() << "\n";
    os << "class sizes:";
    for (const auto& c : info.classes) os << " " << c.size;
    os << "\n";
    return os.str();
}

} // namespace isoform
