#include "pellcf/json_io.hpp"

namespace pellcf {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("json: field '") + key + "' is not an integer");
    return v.get<int>();
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("json: rational must be a string");
    return Rat::parse(j.get<std::string>());
}

Json poly_to_json(const Poly& p) { return p.to_string(); }

Poly poly_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("json: polynomial must be a string");
    return Poly::parse(j.get<std::string>());
}

Json qpoly_to_json(const QPoly& p) {
    Json j;
    j["k"] = rat_to_json(p.ctx().k());
    j["rational"] = poly_to_json(p.rational_part());
    j["sqrt_coeff"] = poly_to_json(p.irrational_part());
    j["text"] = p.to_string();
    return j;
}

QPoly qpoly_from_json(const Json& j) {
    QuadCtx ctx(rat_from_json(field(j, "k")));
    return QPoly(ctx, poly_from_json(field(j, "rational")), poly_from_json(field(j, "sqrt_coeff")));
}

Json factorization_to_json(const Factorization& f) {
    Json j;
    j["unit"] = rat_to_json(f.unit);
    Json arr = Json::array();
    for (const auto& fac : f.factors) arr.push_back(Json{{"poly", poly_to_json(fac.poly)}, {"multiplicity", fac.multiplicity}});
    j["factors"] = std::move(arr);
    return j;
}

Factorization factorization_from_json(const Json& j) {
    Factorization f;
    f.unit = rat_from_json(field(j, "unit"));
    for (const auto& e : field(j, "factors")) f.factors.push_back({poly_from_json(field(e, "poly")), int_field(e, "multiplicity")});
    return f;
}

Json cert_to_json(const UnitCert& c) {
    Json j;
    j["D"] = poly_to_json(c.D);
    j["a"] = poly_to_json(c.a);
    j["b"] = poly_to_json(c.b);
    j["k"] = rat_to_json(c.k);
    j["m"] = c.m;
    j["g"] = c.g;
    j["r"] = c.r;
    j["kappa"] = rat_to_json(c.kappa);
    return j;
}

UnitCert cert_from_json(const Json& j) {
    UnitCert c;
    c.D = poly_from_json(field(j, "D"));
    c.a = poly_from_json(field(j, "a"));
    c.b = poly_from_json(field(j, "b"));
    c.k = rat_from_json(field(j, "k"));
    c.m = int_field(j, "m");
    c.g = int_field(j, "g");
    c.r = int_field(j, "r");
    c.kappa = rat_from_json(field(j, "kappa"));
    return c;
}

Json identity_to_json(const IntegralIdentity& id) {
    Json j;
    j["D"] = poly_to_json(id.D);
    j["f"] = poly_to_json(id.f);
    j["a"] = poly_to_json(id.a);
    j["b"] = poly_to_json(id.b);
    j["k"] = rat_to_json((id.a * id.a - id.D * id.b * id.b).lc());
    j["m"] = id.a.degree();
    return j;
}

IntegralIdentity identity_from_json(const Json& j) {
    IntegralIdentity id{poly_from_json(field(j, "D")), poly_from_json(field(j, "f")), poly_from_json(field(j, "a")),
                        poly_from_json(field(j, "b"))};
    return id;
}

Json tableau_to_json(const CFExpansion& e) {
    Json arr = Json::array();
    for (const auto& l : e.lines())
        arr.push_back(Json{{"h", l.h}, {"P", poly_to_json(l.P)}, {"Q", poly_to_json(l.Q)}, {"a", poly_to_json(l.a)}});
    return arr;
}

std::vector<CFLine> tableau_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("json: tableau must be an array");
    std::vector<CFLine> out;
    for (const auto& e : j)
        out.push_back({int_field(e, "h"), poly_from_json(field(e, "P")), poly_from_json(field(e, "Q")),
                       poly_from_json(field(e, "a"))});
    return out;
}

Json split_to_json(const UnitSplit& s) {
    Json j;
    j["s"] = s.s;
    if (auto* r = std::get_if<RationalSplit>(&s.parts)) {
        j["kind"] = "rational";
        j["c"] = rat_to_json(r->c);
        j["d_plus"] = poly_to_json(r->d_plus);
        j["d_minus"] = poly_to_json(r->d_minus);
        j["cof_plus"] = poly_to_json(r->cof_plus);
        j["cof_minus"] = poly_to_json(r->cof_minus);
    } else {
        const auto& c = std::get<ConjugateSplit>(s.parts);
        j["kind"] = "conjugate";
        j["d"] = qpoly_to_json(c.d);
        j["d_conj"] = qpoly_to_json(c.d_conj);
        j["cof"] = qpoly_to_json(c.cof);
        j["cof_conj"] = qpoly_to_json(c.cof_conj);
    }
    return j;
}

}  // namespace pellcf
