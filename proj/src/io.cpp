#include "qbx/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace qbx {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw input_error(path + ": " + msg);
}

std::string type_name(const Json& j) { return j.type_name(); }

const Json& expect(const Json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing required key '" + key + "'");
    return *it;
}

int parse_gen(const Json& j, const std::map<std::string, int>& by_name,
              const std::string& path) {
    if (!j.is_string()) fail(path, "expected a generator name, got " + type_name(j));
    auto it = by_name.find(j.get<std::string>());
    if (it == by_name.end()) fail(path, "'" + j.get<std::string>() + "' is not a generator");
    return it->second;
}

Word parse_side(const Json& j, const std::map<std::string, int>& by_name,
                const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected an array of 2 generator names");
    return Word::pair(parse_gen(j[0], by_name, path + "[0]"),
                      parse_gen(j[1], by_name, path + "[1]"));
}

FieldDesc parse_field_json(const Json& j, const std::string& path) {
    FieldDesc fd;
    if (j.is_string()) {
        if (j.get<std::string>() != "rational")
            fail(path, "expected \"rational\" or {\"prime\": p}");
        return fd;
    }
    if (j.is_object()) {
        const Json& p = expect(j, "prime", path);
        if (!p.is_number_unsigned()) fail(path + ".prime", "expected a positive integer");
        std::uint64_t v = p.get<std::uint64_t>();
        if (!is_valid_prime(v))
            fail(path + ".prime", std::to_string(v) + " is not a prime below 2^31");
        fd.rational = false;
        fd.p = (std::uint32_t)v;
        return fd;
    }
    fail(path, "expected \"rational\" or {\"prime\": p}");
}

} // namespace

PresentationFile parse_presentation_text(const std::string& text,
                                         std::optional<FieldDesc> field_override) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based position in the input
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw input_error("syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col));
    }
    if (!doc.is_object()) fail("$", "top level must be an object");
    const Json& schema = expect(doc, "schema", "$");
    if (!schema.is_string() || schema.get<std::string>() != "qbx/1")
        fail("schema", "expected \"qbx/1\"");

    const Json& nj = expect(doc, "n", "$");
    if (!nj.is_number_integer() || nj.get<std::int64_t>() < 1 ||
        nj.get<std::int64_t>() > Word::kMaxGen)
        fail("n", "expected an integer between 1 and 31");
    int n = nj.get<int>();

    std::vector<std::string> names;
    if (doc.contains("generators")) {
        const Json& gj = doc["generators"];
        if (!gj.is_array() || (int)gj.size() != n)
            fail("generators", "expected an array of " + std::to_string(n) + " names");
        for (std::size_t i = 0; i < gj.size(); ++i) {
            if (!gj[i].is_string() || gj[i].get<std::string>().empty())
                fail("generators[" + std::to_string(i) + "]", "expected a nonempty string");
            names.push_back(gj[i].get<std::string>());
        }
    } else {
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    std::map<std::string, int> by_name;
    for (int i = 0; i < n; ++i)
        if (!by_name.emplace(names[i], i).second)
            fail("generators", "duplicate name '" + names[i] + "'");

    PresentationFile pf;
    if (doc.contains("field")) pf.field = parse_field_json(doc["field"], "field");
    if (field_override) pf.field = *field_override;

    const Json& rj = expect(doc, "relations", "$");
    if (!rj.is_array()) fail("relations", "expected an array");
    std::vector<BinomialRelation> rels;
    for (std::size_t k = 0; k < rj.size(); ++k) {
        std::string path = "relations[" + std::to_string(k) + "]";
        const Json& r = rj[k];
        if (!r.is_object()) fail(path, "expected an object");
        BinomialRelation rel;
        rel.lhs = parse_side(expect(r, "lhs", path), by_name, path + ".lhs");
        rel.rhs = parse_side(expect(r, "rhs", path), by_name, path + ".rhs");
        const Json& cj = expect(r, "coeff", path);
        if (!cj.is_string()) fail(path + ".coeff", "expected a string like \"3/2\"");
        try {
            rel.coeff = Scalar::parse(cj.get<std::string>(), pf.field.one());
        } catch (const input_error& e) {
            fail(path + ".coeff", e.what());
        }
        if (rel.coeff.is_zero()) fail(path + ".coeff", "coefficient is zero in this field");
        rels.push_back(rel);
    }
    pf.pres = Presentation::make(n, std::move(rels), names);

    if (doc.contains("order")) {
        const Json& oj = doc["order"];
        if (!oj.is_array() || (int)oj.size() != n)
            fail("order", "expected an array of all " + std::to_string(n) + " generator names");
        std::vector<int> ord;
        for (std::size_t i = 0; i < oj.size(); ++i)
            ord.push_back(parse_gen(oj[i], by_name, "order[" + std::to_string(i) + "]"));
        try {
            pf.order = Enumeration::from_order(ord);
        } catch (const input_error&) {
            fail("order", "names must form a permutation of the generators");
        }
    }
    return pf;
}

PresentationFile parse_presentation_file(const std::string& path,
                                         std::optional<FieldDesc> field_override) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw input_error("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_presentation_text(text, field_override);
}

Json render_presentation(const PresentationFile& pf) {
    Json doc;
    doc["schema"] = "qbx/1";
    doc["n"] = pf.pres.n;
    doc["generators"] = pf.pres.names;
    if (pf.order) {
        Json ord = Json::array();
        for (int r = 0; r < pf.order->size(); ++r)
            ord.push_back(pf.pres.names[pf.order->gen_at_rank(r)]);
        doc["order"] = ord;
    }
    if (pf.field.rational)
        doc["field"] = "rational";
    else
        doc["field"] = Json{{"prime", pf.field.p}};
    Json rels = Json::array();
    for (const auto& r : pf.pres.relations) {
        Json rel;
        rel["lhs"] = Json::array({pf.pres.names[r.lhs.at(0)], pf.pres.names[r.lhs.at(1)]});
        rel["coeff"] = r.coeff.str();
        rel["rhs"] = Json::array({pf.pres.names[r.rhs.at(0)], pf.pres.names[r.rhs.at(1)]});
        rels.push_back(rel);
    }
    doc["relations"] = rels;
    return doc;
}

FieldDesc parse_field_flag(const std::string& flag) {
    FieldDesc fd;
    if (flag == "rational") return fd;
    if (flag == "fp") {
        fd.rational = false;
        fd.p = kDefaultPrime;
        return fd;
    }
    if (flag.rfind("fp:", 0) == 0) {
        std::uint64_t v = 0;
        try {
            v = std::stoull(flag.substr(3));
        } catch (...) {
            throw input_error("bad --field value '" + flag + "'");
        }
        if (!is_valid_prime(v))
            throw input_error("--field: " + std::to_string(v) + " is not a prime below 2^31");
        fd.rational = false;
        fd.p = (std::uint32_t)v;
        return fd;
    }
    throw input_error("bad --field value '" + flag + "' (want rational, fp, or fp:<prime>)");
}

} // namespace qbx
