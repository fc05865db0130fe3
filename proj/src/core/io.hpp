#pragma once

#include <string>

#include "classify.hpp"
#include "e6.hpp"
#include "weyl.hpp"

namespace isoform {

// Parses the run-input document: an object with `central_torus_rank`,
// `factors` ([{family, rank}...]) and `circle` ({torus_exponents,
// factor_exponents}). Parse failures name the offending field.
void parse_input(const std::string& text, GroupSpec& spec, CircleEmbedding& circle);

// Machine-readable report; parsing the emitted string and re-emitting it is
// byte-identical.
std::string report_to_json(const GroupSpec& spec, const ClassificationReport& rep);
std::string report_to_text(const GroupSpec& spec, const ClassificationReport& rep);

std::string poincare_to_json(const GroupSpec& spec, const CircleEmbedding& c);
std::string poincare_to_text(const GroupSpec& spec, const CircleEmbedding& c);

std::string e6_report_to_json(const E6Report& rep);
std::string e6_report_to_text(const E6Report& rep);

struct WeylInfo {
    SimpleType type;
    std::uint64_t order = 0;
    std::uint64_t formula_order = 0;
    std::vector<ConjugacyClass> classes;
};

WeylInfo weyl_info(const WeylGroup& W);
std::string weyl_info_to_json(const WeylInfo& info);
std::string weyl_info_to_text(const WeylInfo& info);

} // namespace isoform
