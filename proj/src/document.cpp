#include "dynred/document.hpp"

#include <sstream>

namespace dynred {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse_json(std::string_view text, std::size_t line_offset = 0) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::string pos = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        if (line_offset) pos = "line " + std::to_string(line_offset);
        throw ParseError(pos + ": " + e.what());
    }
}

unsigned read_unsigned(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
    return j.get<unsigned>();
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n") == std::string_view::npos; }

} // namespace

Json to_json(const MorphismDocument& doc) {
    const Presentation& P = doc.presentation;
    Json j;
    j["format"] = kFormatVersion;
    if (doc.label) j["label"] = *doc.label;
    j["n"] = P.dim();
    j["d"] = P.degree();
    Json forms = Json::array();
    const auto& table = P.monomials();
    for (std::size_t i = 0; i <= P.dim(); ++i) {
        Json terms = Json::array();
        const auto f = P.form(i);
        for (std::size_t m = 0; m < f.size(); ++m)
            if (f[m] != 0) terms.push_back(Json::array({f[m].get_str(), table.exponents(m)}));
        forms.push_back(std::move(terms));
    }
    j["forms"] = std::move(forms);
    if (!doc.tags.empty()) j["tags"] = doc.tags;
    return j;
}

MorphismDocument document_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a JSON object");
    if (!j.contains("format")) fail(where + "/format", "missing field");
    if (j["format"] != kFormatVersion) fail(where + "/format", "unsupported format version");
    for (const char* key : {"n", "d", "forms"})
        if (!j.contains(key)) fail(where + "/" + key, "missing field");
    const unsigned n = read_unsigned(j["n"], where + "/n");
    const unsigned d = read_unsigned(j["d"], where + "/d");
    if (n < 1 || d < 1) fail(where, "n and d must be >= 1");
    const Json& forms = j["forms"];
    if (!forms.is_array() || forms.size() != n + 1)
        fail(where + "/forms", "expected an array of " + std::to_string(n + 1) + " forms");

    std::vector<std::vector<Term>> terms(n + 1);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::string fw = where + "/forms/" + std::to_string(i);
        if (!forms[i].is_array()) fail(fw, "expected an array of terms");
        for (std::size_t t = 0; t < forms[i].size(); ++t) {
            const std::string tw = fw + "/" + std::to_string(t);
            const Json& term = forms[i][t];
            if (!term.is_array() || term.size() != 2) fail(tw, "expected [coefficient, exponents]");
            BigRational c;
            if (term[0].is_string()) {
                try {
                    c = parse_rational(term[0].get<std::string>());
                } catch (const UsageError& e) {
                    fail(tw + "/0", e.what());
                }
            } else if (term[0].is_number_integer()) {
                c = BigRational(BigInt(term[0].dump(), 10));
            } else {
                fail(tw + "/0", "coefficient must be a rational string or an integer");
            }
            const Json& ej = term[1];
            if (!ej.is_array() || ej.size() != n + 1) fail(tw + "/1", "expected " + std::to_string(n + 1) + " exponents");
            Exponents e;
            int total = 0;
            for (std::size_t v = 0; v < ej.size(); ++v) {
                e.push_back(static_cast<int>(read_unsigned(ej[v], tw + "/1/" + std::to_string(v))));
                total += e.back();
            }
            if (total != static_cast<int>(d)) fail(tw + "/1", "exponents sum to " + std::to_string(total) + ", not d");
            terms[i].emplace_back(std::move(c), std::move(e));
        }
    }
    MorphismDocument doc{.presentation = [&] {
        try {
            return presentation_from_terms(n, d, terms);
        } catch (const UsageError& e) {
            fail(where + "/forms", e.what());
        }
    }()};
    if (j.contains("label")) {
        if (!j["label"].is_string()) fail(where + "/label", "expected a string");
        doc.label = j["label"].get<std::string>();
    }
    if (j.contains("tags")) {
        if (!j["tags"].is_object()) fail(where + "/tags", "expected an object");
        for (const auto& [k, v] : j["tags"].items()) {
            if (!v.is_string()) fail(where + "/tags/" + k, "expected a string");
            doc.tags[k] = v.get<std::string>();
        }
    }
    return doc;
}

std::string print_document(const MorphismDocument& doc) { return to_json(doc).dump(); }

MorphismDocument parse_document(std::string_view text) { return document_from_json(parse_json(text)); }

std::vector<MorphismDocument> parse_documents(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    std::size_t nonblank = 0;
    bool first_line_complete = false;
    for (auto l : lines) {
        if (blank(l)) continue;
        if (nonblank++ == 0) first_line_complete = Json::accept(l.begin(), l.end()) && l.find('{') != std::string_view::npos;
    }
    std::vector<MorphismDocument> docs;
    if (nonblank > 1 && first_line_complete) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (blank(lines[i])) continue;
            docs.push_back(document_from_json(parse_json(lines[i], i + 1), "line " + std::to_string(i + 1)));
        }
        return docs;
    }
    const Json j = parse_json(text);
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) docs.push_back(document_from_json(j[i], "/" + std::to_string(i)));
    } else {
        docs.push_back(document_from_json(j));
    }
    return docs;
}

std::string print_documents(const std::vector<MorphismDocument>& docs) {
    std::string out;
    for (const auto& d : docs) out += print_document(d) + "\n";
    return out;
}

RationalMatrix parse_matrix(std::string_view text, std::size_t dim) {
    Json j = parse_json(text);
    if (!j.is_array() || j.size() != dim) fail("--gamma", "expected " + std::to_string(dim) + " rows");
    RationalMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!j[i].is_array() || j[i].size() != dim) fail("--gamma/" + std::to_string(i), "expected " + std::to_string(dim) + " entries");
        for (std::size_t k = 0; k < dim; ++k) {
            const Json& e = j[i][k];
            const std::string w = "--gamma/" + std::to_string(i) + "/" + std::to_string(k);
            try {
                if (e.is_string())
                    m(i, k) = parse_rational(e.get<std::string>());
                else if (e.is_number_integer())
                    m(i, k) = BigRational(BigInt(e.dump(), 10));
                else
                    fail(w, "expected a rational string or integer");
            } catch (const ParseError&) {
                throw;
            } catch (const UsageError& err) {
                fail(w, err.what());
            }
        }
    }
    return m;
}

Json to_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const ResultantValuation& v) {
    Json j;
    j["p"] = v.p.get_str();
    j["ord_rho"] = to_json(v.ord_rho);
    j["min_coeff_ord"] = to_json(v.min_coeff_ord);
    j["ord_R_phi"] = to_json(v.ord_R_phi);
    return j;
}

Json to_json(const ConjugationValuationCheck& c) {
    Json j;
    j["lhs"] = to_json(c.lhs);
    j["rhs_formula"] = to_json(c.rhs_formula);
    j["equality_holds"] = c.equality_holds;
    j["min_ord_conjugate"] = to_json(c.min_ord_conjugate);
    j["min_ord_bound"] = to_json(c.min_ord_bound);
    j["inequality_holds"] = c.inequality_holds;
    j["holds"] = c.holds;
    return j;
}

Json to_json(const OnePSWitness& w) {
    Json j;
    j["p"] = w.p;
    j["field_degree"] = w.field_degree;
    Json rows = Json::array();
    for (std::size_t i = 0; i < w.flag_matrix.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < w.flag_matrix.cols(); ++k) row.push_back(w.flag_matrix(i, k));
        rows.push_back(std::move(row));
    }
    j["flag_matrix"] = std::move(rows);
    j["r"] = w.r;
    return j;
}

Json to_json(const SemistabilityResult& r) {
    Json j;
    j["verdict"] = r.semistable ? "semistable" : "unstable";
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (r.strictly_semistable) j["strictly_semistable"] = *r.strictly_semistable;
    return j;
}

Json to_json(const MinimalityCertificate& c) {
    Json j;
    j["p"] = c.p.get_str();
    j["status"] = to_string(c.status);
    j["bound"] = c.bound;
    j["initial_ord"] = c.initial_ord;
    j["achieved_ord"] = c.achieved_ord;
    if (c.gamma) {
        j["gamma"] = to_json(*c.gamma);
        j["new_ord"] = c.achieved_ord;
    }
    j["certified"] = c.certified;
    j["semistability_checked"] = c.semistability_checked;
    j["rounds"] = c.rounds;
    j["minimized"] = to_json(MorphismDocument{.presentation = c.minimized});
    return j;
}

Json to_json(const DivisorReport& r) {
    Json j;
    j["integral_resultant"] = r.integral_resultant.get_str();
    Json div = Json::object();
    for (const auto& [p, m] : r.divisor) div[p.get_str()] = m;
    j["divisor"] = std::move(div);
    Json good = Json::array();
    for (const auto& c : r.certificates)
        if (c.achieved_ord == 0) good.push_back(c.p.get_str());
    j["good_reduction_primes_of_rho"] = std::move(good);
    Json certs = Json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    j["certificates"] = std::move(certs);
    if (r.unfactored != 1) j["unfactored_cofactor"] = r.unfactored.get_str();
    return j;
}

Json to_json(const GlobalizationResult& r) {
    Json j;
    j["presentation"] = to_json(MorphismDocument{.presentation = r.presentation});
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json sj;
        sj["p"] = s.p.get_str();
        sj["status"] = to_string(s.certificate.status);
        sj["achieved_ord"] = s.certificate.achieved_ord;
        sj["certified"] = s.certificate.certified;
        if (s.certificate.gamma) sj["gamma"] = to_json(*s.certificate.gamma);
        Json before = Json::object(), after = Json::object();
        for (const auto& [q, v] : s.others_before) before[q.get_str()] = v;
        for (const auto& [q, v] : s.others_after) after[q.get_str()] = v;
        sj["others_before"] = std::move(before);
        sj["others_after"] = std::move(after);
        sj["invariance_ok"] = s.invariance_ok;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    Json unc = Json::array();
    for (const auto& p : r.uncertified) unc.push_back(p.get_str());
    j["uncertified"] = std::move(unc);
    j["invariance_ok"] = r.invariance_ok;
    if (r.unfactored != 1) j["unfactored_cofactor"] = r.unfactored.get_str();
    return j;
}

Json to_json(const PotentialGoodReductionReport& r) {
    Json j;
    j["status"] = to_string(r.status);
    j["certificate"] = to_json(r.certificate);
    if (r.semistable_bad) j["semistable_bad_presentation"] = to_json(MorphismDocument{.presentation = *r.semistable_bad});
    if (r.semistable_gamma) j["semistable_gamma"] = to_json(*r.semistable_gamma);
    return j;
}

} // namespace dynred
