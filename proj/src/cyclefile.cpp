#include "prebloch/cyclefile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace prebloch {

using nlohmann::json;

namespace {

Mat2 parse_matrix(const json& entries, const FieldSpec& field, bool exact) {
    if (!entries.is_array() || entries.size() != 4) throw ParseError("matrix needs 4 entries");
    Mat2 m(Scalar::parse(entries[0].get<std::string>(), field, exact),
           Scalar::parse(entries[1].get<std::string>(), field, exact),
           Scalar::parse(entries[2].get<std::string>(), field, exact),
           Scalar::parse(entries[3].get<std::string>(), field, exact));
    m.require_unimodular();
    return m;
}

json matrix_json(const Mat2& m, const FieldSpec& field) {
    return json::array({m.a.str(field), m.b.str(field), m.c.str(field), m.d.str(field)});
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Mat2 CycleFile::resolve_word(const std::string& word,
                             const std::vector<std::pair<std::string, Mat2>>& table) const {
    Mat2 acc = Mat2::identity();
    for (const std::string& tok : split_ws(word)) {
        if (tok == "1") continue;
        std::string name = tok;
        bool inverse = false;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            name = tok.substr(0, pos);
            std::string power = tok.substr(pos + 1);
            if (power != "-1") throw ParseError("unsupported power in word token: " + tok);
            inverse = true;
        }
        const Mat2* found = nullptr;
        for (const auto& [n, m] : table)
            if (n == name) found = &m;
        if (!found) throw ParseError("unknown generator in word: " + name);
        acc = acc * (inverse ? found->inverse_unimodular() : *found);
    }
    return acc;
}

CuspData CycleFile::resolve_cusps(const std::vector<std::pair<std::string, Mat2>>& table) const {
    for (const std::string& rel : relators) {
        Mat2 value = resolve_word(rel, table);
        if (!value.is_identity()) throw RelatorViolation("relator does not map to the identity: " + rel);
    }
    CuspData data;
    data.c0 = base_point();
    bool same_table = table == generators;
    for (const auto& entry : cusp_entries) {
        Cusp cusp;
        for (const auto& w : entry.generator_words) cusp.generators.push_back(resolve_word(w, table));
        for (const auto& m : entry.generator_matrices) cusp.generators.push_back(m);
        if (cusp.generators.empty()) throw InvariantViolation("cusp without generators");
        if (same_table || entry.generator_words.empty()) {
            cusp.fixed_point = ProjPoint::parse(entry.fixed_point_text, field, exact_scalars);
        } else {
            // under a representation the cusp point moves; recover it as the
            // fixed point of a non-central image (validation below confirms it
            // is fixed by all of them)
            bool found = false;
            for (const auto& g : cusp.generators) {
                if (g == Mat2::identity() || g == -Mat2::identity()) continue;
                cusp.fixed_point = g.c.is_zero()
                                       ? ProjPoint::infinity()
                                       : ProjPoint((g.a - g.d) / Scalar(Rational(2)), g.c);
                found = true;
                break;
            }
            if (!found) cusp.fixed_point = ProjPoint::parse(entry.fixed_point_text, field, exact_scalars);
        }
        data.cusps.push_back(std::move(cusp));
    }
    data.validate();
    return data;
}

Chain<DecoratedSimplex> CycleFile::decorated_chain(
    const std::vector<std::pair<std::string, Mat2>>& table) const {
    Chain<DecoratedSimplex> out;
    for (const auto& term : decorated_terms) {
        if (mode == CoeffMode::Z && denominator(term.coeff) != 1)
            throw InvariantViolation("integer coefficient mode with a fractional coefficient");
        DecoratedSimplex s;
        for (const auto& w : term.words) s.edges.push_back(resolve_word(w, table));
        if (term.cone) {
            Mat2 coset = term.coset_word.empty() ? Mat2::identity() : resolve_word(term.coset_word, table);
            s.ideal = DecoratedSimplex::IdealVertex{term.cusp, coset};
        }
        out.add(s, term.coeff);
    }
    return out;
}

Chain<IdealTuple> CycleFile::raw_chain() const {
    Chain<IdealTuple> out;
    for (const auto& term : raw_terms) {
        if (term.point_texts.size() != 4) throw ParseError("raw cycle entries need 4 points");
        std::vector<ProjPoint> pts;
        for (const auto& t : term.point_texts) pts.push_back(ProjPoint::parse(t, field, exact_scalars));
        out.add(IdealTuple(std::move(pts)), term.coeff);
    }
    return out;
}

Chain<IdealTuple> CycleFile::shapes_chain() const {
    Chain<IdealTuple> out;
    ProjPoint inf = ProjPoint::infinity();
    ProjPoint zero = ProjPoint::finite(Scalar(Rational(0)));
    ProjPoint one = ProjPoint::finite(Scalar(Rational(1)));
    for (const auto& term : shape_terms) {
        ProjPoint z = ProjPoint::parse(term.z_text, field, exact_scalars);
        out.add(IdealTuple{inf, zero, one, z}, term.coeff);
    }
    return out;
}

ProjPoint CycleFile::base_point() const {
    if (!c0_text) return ProjPoint::finite(Scalar(Rational(0)));
    return ProjPoint::parse(*c0_text, field, exact_scalars);
}

CycleFile CycleFile::parse_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    CycleFile f;
    if (!j.contains("field_d")) throw ParseError("missing field_d");
    f.field.d = std::stoll(j["field_d"].get<std::string>());
    f.field.validate();
    f.precision = j.value("precision_bits", 212u);
    set_precision_bits(f.precision);
    std::string mode = j.value("coeff_mode", "Q");
    if (mode != "Q" && mode != "Z") throw ParseError("coeff_mode must be Q or Z");
    f.mode = mode == "Q" ? CoeffMode::Q : CoeffMode::Z;
    f.exact_scalars = j.value("scalar_mode", "exact") == "exact";
    std::string payload = j.value("payload", "");
    if (payload == "decorated")
        f.payload = Payload::Decorated;
    else if (payload == "raw")
        f.payload = Payload::Raw;
    else if (payload == "shapes")
        f.payload = Payload::Shapes;
    else
        throw ParseError("payload must be one of decorated|raw|shapes");
    if (j.contains("c0")) f.c0_text = j["c0"].get<std::string>();

    if (j.contains("generators"))
        for (const auto& g : j["generators"])
            f.generators.emplace_back(g.at("name").get<std::string>(),
                                      parse_matrix(g.at("matrix"), f.field, f.exact_scalars));
    if (j.contains("cusps"))
        for (const auto& c : j["cusps"]) {
            CuspEntry entry;
            entry.fixed_point_text = c.at("fixed_point").get<std::string>();
            if (c.contains("generator_words"))
                for (const auto& w : c["generator_words"]) entry.generator_words.push_back(w.get<std::string>());
            if (c.contains("generator_matrices"))
                for (const auto& m : c["generator_matrices"])
                    entry.generator_matrices.push_back(parse_matrix(m, f.field, f.exact_scalars));
            f.cusp_entries.push_back(std::move(entry));
        }
    if (j.contains("decorated"))
        for (const auto& t : j["decorated"]) {
            DecoratedTerm term;
            term.coeff = parse_rational(t.at("coeff").get<std::string>());
            if (t.contains("cone")) {
                term.cone = true;
                term.cusp = t["cone"].get<int>();
                term.coset_word = t.value("coset", "");
            }
            for (const auto& w : t.at("words")) term.words.push_back(w.get<std::string>());
            f.decorated_terms.push_back(std::move(term));
        }
    if (j.contains("raw_cycle"))
        for (const auto& t : j["raw_cycle"]) {
            RawTerm term;
            term.coeff = parse_rational(t.at("coeff").get<std::string>());
            for (const auto& p : t.at("points")) term.point_texts.push_back(p.get<std::string>());
            f.raw_terms.push_back(std::move(term));
        }
    if (j.contains("shapes"))
        for (const auto& t : j["shapes"]) {
            ShapeTerm term;
            term.coeff = parse_rational(t.at("coeff").get<std::string>());
            term.z_text = t.at("z").get<std::string>();
            f.shape_terms.push_back(std::move(term));
        }
    if (j.contains("relators"))
        for (const auto& r : j["relators"]) f.relators.push_back(r.get<std::string>());

    bool has_primary = (f.payload == Payload::Decorated && !f.decorated_terms.empty()) ||
                       (f.payload == Payload::Raw && !f.raw_terms.empty()) ||
                       (f.payload == Payload::Shapes && !f.shape_terms.empty());
    if (!has_primary) throw ParseError("primary payload is empty");

    // eager validation: every scalar must parse in the declared field and all
    // type invariants must hold; errors are annotated with the payload section
    auto located = [](const char* where, auto&& body) {
        auto annotate = [&](const Error& e) {
            std::string msg(e.what());
            if (auto pos = msg.find(": "); pos != std::string::npos) msg.erase(0, pos + 2);
            return msg + " (in " + where + ")";
        };
        try {
            body();
        } catch (const ParseError& e) {
            throw ParseError(annotate(e));
        } catch (const FieldMismatch& e) {
            throw FieldMismatch(annotate(e));
        } catch (const InvariantViolation& e) {
            throw InvariantViolation(annotate(e));
        }
    };
    located("c0", [&] { f.base_point(); });
    if (!f.raw_terms.empty()) located("raw_cycle", [&] { f.raw_chain(); });
    if (!f.shape_terms.empty()) located("shapes", [&] { f.shapes_chain(); });
    if (!f.decorated_terms.empty()) {
        located("decorated", [&] { f.decorated_chain(f.generators); });
        located("cusps", [&] { f.resolve_cusps(f.generators); });
    }
    return f;
}

CycleFile CycleFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

std::string CycleFile::to_json_text() const {
    json j;
    j["format"] = "prebloch-cycle v1";
    j["field_d"] = std::to_string(field.d);
    j["precision_bits"] = precision;
    j["coeff_mode"] = mode == CoeffMode::Q ? "Q" : "Z";
    j["scalar_mode"] = exact_scalars ? "exact" : "float";
    j["payload"] = payload == Payload::Decorated ? "decorated"
                   : payload == Payload::Raw     ? "raw"
                                                 : "shapes";
    if (c0_text) j["c0"] = *c0_text;
    if (!generators.empty()) {
        j["generators"] = json::array();
        for (const auto& [name, m] : generators)
            j["generators"].push_back({{"name", name}, {"matrix", matrix_json(m, field)}});
    }
    if (!cusp_entries.empty()) {
        j["cusps"] = json::array();
        for (const auto& entry : cusp_entries) {
            json c;
            c["fixed_point"] = entry.fixed_point_text;
            if (!entry.generator_words.empty()) c["generator_words"] = entry.generator_words;
            if (!entry.generator_matrices.empty()) {
                c["generator_matrices"] = json::array();
                for (const auto& m : entry.generator_matrices)
                    c["generator_matrices"].push_back(matrix_json(m, field));
            }
            j["cusps"].push_back(std::move(c));
        }
    }
    if (!decorated_terms.empty()) {
        j["decorated"] = json::array();
        for (const auto& term : decorated_terms) {
            json t;
            t["coeff"] = rational_str(term.coeff);
            t["words"] = term.words;
            if (term.cone) {
                t["cone"] = term.cusp;
                if (!term.coset_word.empty()) t["coset"] = term.coset_word;
            }
            j["decorated"].push_back(std::move(t));
        }
    }
    if (!raw_terms.empty()) {
        j["raw_cycle"] = json::array();
        for (const auto& term : raw_terms)
            j["raw_cycle"].push_back({{"coeff", rational_str(term.coeff)}, {"points", term.point_texts}});
    }
    if (!shape_terms.empty()) {
        j["shapes"] = json::array();
        for (const auto& term : shape_terms)
            j["shapes"].push_back({{"coeff", rational_str(term.coeff)}, {"z", term.z_text}});
    }
    if (!relators.empty()) j["relators"] = relators;
    return j.dump(2) + "\n";
}

void CycleFile::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << to_json_text();
}

bool operator==(const CycleFile::CuspEntry& a, const CycleFile::CuspEntry& b) {
    return a.fixed_point_text == b.fixed_point_text && a.generator_words == b.generator_words &&
           a.generator_matrices == b.generator_matrices;
}
bool operator==(const CycleFile::DecoratedTerm& a, const CycleFile::DecoratedTerm& b) {
    return a.coeff == b.coeff && a.cone == b.cone && a.cusp == b.cusp && a.words == b.words &&
           a.coset_word == b.coset_word;
}
bool operator==(const CycleFile::RawTerm& a, const CycleFile::RawTerm& b) {
    return a.coeff == b.coeff && a.point_texts == b.point_texts;
}
bool operator==(const CycleFile::ShapeTerm& a, const CycleFile::ShapeTerm& b) {
    return a.coeff == b.coeff && a.z_text == b.z_text;
}
bool operator==(const CycleFile& a, const CycleFile& b) {
    return a.field.d == b.field.d && a.precision == b.precision && a.mode == b.mode &&
           a.exact_scalars == b.exact_scalars && a.payload == b.payload && a.c0_text == b.c0_text &&
           a.generators == b.generators && a.cusp_entries == b.cusp_entries &&
           a.decorated_terms == b.decorated_terms && a.raw_terms == b.raw_terms &&
           a.shape_terms == b.shape_terms && a.relators == b.relators;
}

std::vector<std::pair<std::string, Mat2>> load_representation(const std::string& path,
                                                              const FieldSpec& field, bool exact_scalars) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<std::pair<std::string, Mat2>> table;
    for (const auto& g : j.at("images"))
        table.emplace_back(g.at("name").get<std::string>(),
                           parse_matrix(g.at("matrix"), field, exact_scalars));
    return table;
}

CycleFile bundle_to_file(const BundleCycle& cycle, const BundleData& data, const FieldSpec& field) {
    CycleFile f;
    f.field = field;
    f.payload = CycleFile::Payload::Decorated;
    for (std::size_t i = 0; i < data.names.size(); ++i) f.generators.emplace_back(data.names[i], data.gens[i]);

    CycleFile::CuspEntry cusp;
    cusp.fixed_point_text = cycle.cusps.cusps.at(0).fixed_point.str(field);
    GroupWord x = GroupWord::generator(data.gens[0], 0);
    GroupWord y = GroupWord::generator(data.gens[1], 1);
    GroupWord w = x * y * x.inverse() * y.inverse();
    cusp.generator_words.push_back(word_text(w.word, data.names));
    cusp.generator_words.push_back(data.names[2]);
    f.cusp_entries.push_back(std::move(cusp));

    for (const auto& term : cycle.terms) {
        CycleFile::DecoratedTerm t;
        t.coeff = term.coeff;
        t.cone = term.cone;
        t.cusp = term.cusp;
        for (const auto& e : term.entries) t.words.push_back(word_text(e.word, data.names));
        f.decorated_terms.push_back(std::move(t));
    }
    return f;
}

}  // namespace prebloch
