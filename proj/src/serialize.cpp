#include "djones/serialize.hpp"

#include <json.hpp>

namespace djones {

using nlohmann::json;

std::string laurent_to_json_text(const Laurent& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({e, c.get_str()});
    return a.dump();
}

Laurent laurent_from_json_text(const std::string& text) {
    json a = json::parse(text);
    if (!a.is_array()) throw std::runtime_error("polynomial serialization must be an array");
    Laurent p;
    for (const auto& t : a) {
        long e = t.at(0).get<long>();
        Int c(t.at(1).get<std::string>());
        p.add_term(e, c);
    }
    return p;
}

std::string bilaurent_to_json_text(const BiLaurent& p) {
    json a = json::array();
    for (const auto& [k, c] : p.terms()) a.push_back({k.first, k.second, c.get_str()});
    return a.dump();
}

BiLaurent bilaurent_from_json_text(const std::string& text) {
    json a = json::parse(text);
    BiLaurent p;
    for (const auto& t : a) {
        long qe = t.at(0).get<long>();
        long xe = t.at(1).get<long>();
        Int c(t.at(2).get<std::string>());
        p.add_term(qe, xe, c);
    }
    return p;
}

std::string cyclo_to_json_text(const Cyclo& z) {
    json o;
    o["order"] = z.field()->order();
    json cs = json::array();
    for (const Int& c : z.num_coords()) {
        Rat r(c, z.den());
        r.canonicalize();
        cs.push_back(r.get_str());
    }
    o["coeffs"] = cs;
    return o.dump();
}

Cyclo cyclo_from_json_text(const std::string& text) {
    json o = json::parse(text);
    long n = o.at("order").get<long>();
    FieldPtr f = CycloField::get(n);
    std::vector<Rat> rs;
    for (const auto& s : o.at("coeffs")) rs.push_back(rat_from_string(s.get<std::string>()));
    if (static_cast<long>(rs.size()) != f->degree())
        throw std::runtime_error("cyclotomic coefficient vector has wrong length");
    Int den = 1;
    for (const Rat& r : rs) den = lcm(den, Int(r.get_den()));
    std::vector<Int> num(rs.size());
    for (std::size_t j = 0; j < rs.size(); ++j)
        num[j] = Int(rs[j].get_num()) * (den / Int(rs[j].get_den()));
    return Cyclo(f, std::move(num), std::move(den));
}

std::string qdiff_to_json_text(const QDiffOperator& op) {
    json a = json::array();
    for (const auto& [k, c] : op.terms())
        a.push_back({k.first, k.second, json::parse(bilaurent_to_json_text(c))});
    return a.dump();
}

QDiffOperator qdiff_from_json_text(const std::string& text) {
    json a = json::parse(text);
    QDiffOperator op;
    for (const auto& t : a)
        op.add_term(t.at(0).get<long>(), t.at(1).get<long>(),
                    bilaurent_from_json_text(t.at(2).dump()));
    return op;
}

std::string matrix_to_json_text(const std::vector<std::vector<Cyclo>>& m) {
    json o;
    o["dim"] = m.size();
    json es = json::array();
    for (const auto& row : m)
        for (const auto& z : row) es.push_back(json::parse(cyclo_to_json_text(z)));
    o["entries"] = es;
    return o.dump();
}

}  // namespace djones
