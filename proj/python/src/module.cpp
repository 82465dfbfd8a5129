#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pellcf/cli.hpp"
#include "pellcf/families.hpp"
#include "pellcf/verify.hpp"

namespace py = pybind11;
using namespace pellcf;

namespace {

// Results cross the boundary as JSON text; the package decodes them.
std::string cf_json(const std::string& poly, int steps) {
    auto e = CFExpansion::init(Poly::parse(poly));
    Bounds b = Bounds::for_genus(e.genus());
    if (steps > 0) b.max_steps = steps;
    e.detect(b);
    return Json{{"tableau", tableau_to_json(e)}, {"status", to_string(e.status())}}.dump();
}

std::optional<std::string> unit_json(const std::string& poly) {
    auto c = find_unit(Poly::parse(poly));
    if (!c) return std::nullopt;
    return cert_to_json(*c).dump();
}

std::optional<std::string> integrate(const std::string& poly, const std::string& format) {
    auto c = find_unit(Poly::parse(poly));
    if (!c) return std::nullopt;
    IdentityFormat f = IdentityFormat::Text;
    if (format == "latex") f = IdentityFormat::Latex;
    else if (format == "json") f = IdentityFormat::Json;
    else if (format != "text") throw std::invalid_argument("format must be text, latex or json");
    return emit_identity(integrand(*c), f);
}

std::string family_json(const std::string& spec) {
    auto inst = parse_family_spec(spec);
    Json j{{"spec", inst.spec()}, {"D", poly_to_json(inst.D)}, {"regular", inst.regular}};
    if (auto c = find_unit(inst.D)) {
        j["cert"] = cert_to_json(*c);
        j["torsion"] = torsion_order(*c);
    }
    return j.dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_pellcf, m) {
    m.doc() = "Exact continued fractions of sqrt(D) over Q(x)";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("normalize_poly", [](const std::string& s) { return Poly::parse(s).to_string(); });
    m.def("factor_json", [](const std::string& s) { return factorization_to_json(factor_over_Q(Poly::parse(s))).dump(); });
    m.def("cf_json", &cf_json, py::arg("poly"), py::arg("steps") = 0);
    m.def("unit_json", &unit_json, py::arg("poly"));
    m.def("integrate", &integrate, py::arg("poly"), py::arg("format") = "text");
    m.def("galois", [](const std::string& s) { return to_string(galois_quartic(Poly::parse(s))); });
    m.def("classify_json", [](const std::string& s) { return report_to_json(full_report(Poly::parse(s))).dump(); });
    m.def("family_json", &family_json, py::arg("spec"));
    m.def("family_poly", [](int mm, const std::string& t) { return family_poly(mm, Rat::parse(t)).D.to_string(); });
    m.def("run_cli", &run_cli, py::arg("args"));
    m.def("acceptance", [] {
        std::vector<std::tuple<int, std::string, bool, std::string>> rows;
        for (const auto& r : run_acceptance()) rows.emplace_back(r.id, r.title, r.pass, r.detail);
        return rows;
    });
}
