/*
   Copyright 2026 The idtag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1.0
*/

#ifndef IDTAG_FORMATS_HPP
#define IDTAG_FORMATS_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "concat.hpp"
#include "field.hpp"
#include "protocol.hpp"

namespace idtag {

/* External text formats.

   Field elements: comma-separated residues "c0,c1,...,c_{m-1}" (so a prime
   field element is a bare decimal residue).  On input the power form "a^e"
   is also accepted and denotes alpha^e = element_from_index(e + 1); the
   zero element has no power form.

   Field specs:  JSON {"p", "m", "modulus", "primitive"} with little-endian
   coefficient arrays; "modulus" is empty for prime fields.

   Identity files: a header line "q k delta" followed by one decimal
   coefficient index per line in big-endian digit order, i.e. the index of
   the outer coefficient m_0 (the most significant base-q^k digit of the
   identity integer) comes first. */

inline std::string element_to_string(const Field& field, const FieldElement& element) {
    std::string out;
    for (unsigned i = 0; i < field.degree(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(element.coefficients[i]);
    }
    return out;
}

inline FieldElement parse_element(const Field& field, std::string_view text) {
    if (text.rfind("a^", 0) == 0) {
        const u128 e = parse_u128(text.substr(2));
        if (e >= field.size() - 1) throw IndexOutOfRange("exponent " + to_string(e) + " exceeds the group order");
        return field.element_from_index(e + 1);
    }
    std::vector<u64> residues;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const u128 v = parse_u128(text.substr(start, comma - start));
        if (v >= field.characteristic()) throw std::invalid_argument("residue out of range");
        residues.push_back(static_cast<u64>(v));
        start = comma + 1;
    }
    return field.from_residues(std::move(residues));
}

inline nlohmann::json field_to_json(const Field& field) {
    return nlohmann::json{{"p", field.characteristic()},
                          {"m", field.degree()},
                          {"modulus", field.modulus()},
                          {"primitive", field.primitive_element().coefficients}};
}

inline Field field_from_json(const nlohmann::json& j) {
    return Field(j.at("p").get<u64>(), j.at("m").get<unsigned>(), j.at("modulus").get<std::vector<u64>>(),
                 j.at("primitive").get<std::vector<u64>>());
}

/* identity files */

struct IdentityFileContents {
    u64 q = 0;
    unsigned k = 0;
    unsigned delta = 0;
    std::vector<u128> coefficient_indices; // m_0 first
};

// desk scale only: recovering indices requires discrete logarithms
inline void write_identity_file(std::ostream& out, const ConcatCode& code, const Identity& identity) {
    out << code.q() << ' ' << code.k() << ' ' << code.delta() << '\n';
    for (u64 i = 0; i < static_cast<u64>(code.identity_length()); ++i)
        out << to_string(code.outer_field().index_from_element(code.coefficient(identity, i))) << '\n';
}

inline IdentityFileContents read_identity_file(std::istream& in) {
    IdentityFileContents contents;
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("identity file is empty");
    std::istringstream head(header);
    if (!(head >> contents.q >> contents.k >> contents.delta))
        throw std::invalid_argument("identity file header must read \"q k delta\"");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        contents.coefficient_indices.push_back(parse_u128(line));
    }
    return contents;
}

inline Identity identity_from_indices(const ConcatCode& code, const std::vector<u128>& indices) {
    if (static_cast<u128>(indices.size()) != code.identity_length())
        throw std::invalid_argument("expected " + to_string(code.identity_length()) + " coefficient indices, got " +
                                    std::to_string(indices.size()));
    Identity id;
    id.residues.reserve(indices.size() * code.k());
    for (const u128 index : indices) {
        if (index >= code.outer_field().size())
            throw ValueOutOfRange("coefficient index " + to_string(index) + " exceeds the outer field size");
        const FieldElement coeff = code.outer_field().element_from_index(index);
        id.residues.insert(id.residues.end(), coeff.coefficients.begin(), coeff.coefficients.end());
    }
    return id;
}

/* report serialization */

inline std::string mode_to_string(ExperimentMode mode) {
    return mode == ExperimentMode::FixedRandomness ? "fixed-randomness" : "average";
}

inline nlohmann::json fa_report_to_json(const FaExperimentReport& report) {
    return nlohmann::json{
        {"q", report.q},
        {"k", report.k},
        {"delta", report.delta},
        {"mode", mode_to_string(report.mode)},
        {"trials", report.trials},
        {"false_accepts", report.false_accepts},
        {"ratio", report.ratio},
        {"bound", {{"num", to_string(report.bound.num)}, {"den", to_string(report.bound.den)}, {"value", report.bound_value}}},
        {"analytic_agreement", report.analytic_agreement},
        {"wilson", {{"low", report.wilson.low}, {"high", report.wilson.high}}},
        {"seed", report.seed},
    };
}

inline nlohmann::json bench_record_to_json(const BenchRecord& record) {
    return nlohmann::json{
        {"q", record.q},
        {"k", record.k},
        {"delta", record.delta},
        {"repetitions", record.repetitions},
        {"seed", record.seed},
        {"seconds_per_tag", record.seconds_per_tag},
        {"log10_identities", record.log10_identities},
        {"lambda2", record.lambda2},
        {"timestamp", record.timestamp},
        {"host", record.host},
    };
}

/* CSV rows for appending experiment and benchmark results */

inline std::string sim_csv_header() {
    return "q,k,delta,mode,trials,false_accepts,ratio,wilson_low,wilson_high,lambda2_bound,analytic_agreement,seed";
}

inline std::string sim_csv_row(const FaExperimentReport& r) {
    std::string row;
    row += std::to_string(r.q) + ',' + std::to_string(r.k) + ',' + std::to_string(r.delta) + ',';
    row += mode_to_string(r.mode) + ',';
    row += std::to_string(r.trials) + ',' + std::to_string(r.false_accepts) + ',';
    row += detail::csv_double(r.ratio) + ',' + detail::csv_double(r.wilson.low) + ',' +
           detail::csv_double(r.wilson.high) + ',';
    row += detail::csv_lambda2(r.bound_value) + ',' + detail::csv_double(r.analytic_agreement) + ',';
    row += std::to_string(r.seed);
    return row;
}

inline std::string bench_csv_header() {
    return "q,k,delta,repetitions,seed,seconds_per_tag,log10_identities,lambda2,timestamp,host";
}

inline std::string bench_csv_row(const BenchRecord& r) {
    std::string row;
    row += std::to_string(r.q) + ',' + std::to_string(r.k) + ',' + std::to_string(r.delta) + ',';
    row += std::to_string(r.repetitions) + ',' + std::to_string(r.seed) + ',';
    row += detail::csv_scientific(r.seconds_per_tag) + ',' + detail::csv_log10(r.log10_identities) + ',' +
           detail::csv_lambda2(r.lambda2) + ',';
    row += r.timestamp + ',' + r.host;
    return row;
}

} // namespace idtag

#endif
