#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "affinecodes/report.hpp"

namespace py = pybind11;

namespace {

/// Python-facing handle: a parsed specification plus its code module.
class PyCode {
public:
    explicit PyCode(const std::string& spec_text)
        : sf_(afc::parse_spec(spec_text)), code_(sf_.code()) {}

    std::string info() const { return afc::emit_json(afc::info_report(sf_)); }
    std::string cgs() const { return afc::emit_json(afc::cgs_report(code_)); }
    std::string spec_text() const { return afc::print_spec(sf_); }

    std::vector<std::string> genmat() const {
        std::vector<std::string> out;
        for (const auto& r : afc::canonical_generator_matrix(code_))
            out.push_back(afc::word_to_string(r));
        return out;
    }

    std::pair<uint64_t, uint64_t> cardinality() const {
        afc::Cardinality c = afc::cardinality(code_);
        return {c.base, c.exponent};
    }

    std::string cardinality_decimal() const { return afc::cardinality(code_).decimal(); }

    bool member(const std::string& vec, const std::string& method) const {
        afc::Word w;
        for (const auto& part : afc::split_tuple(vec))
            w.push_back(afc::parse_poly(part, sf_.algebra));
        return afc::membership(w, code_,
                               method == "cgs" ? afc::MembershipMethod::cgs
                                               : afc::MembershipMethod::linear);
    }

    std::string rdual() const { return afc::emit_json(afc::rdual_report(code_)); }
    std::string adual() const { return afc::emit_json(afc::adual_report(code_)); }
    std::string hdual() const { return afc::emit_json(afc::hdual_report(code_)); }

    std::string paritycheck() const {
        afc::ParityCheckResult pc = afc::parity_check_matrix(code_);
        return afc::emit_json(afc::paritycheck_report(code_, pc));
    }

    bool self_dual() const { return afc::is_self_dual(code_); }

    std::string weights(const std::string& weight, uint64_t cap) const {
        afc::WeightKind wk = afc::weight_kind_from_name(weight);
        return afc::emit_json(afc::weights_report(code_, afc::weight_enumerator(code_, wk, cap), wk));
    }

private:
    afc::SpecFile sf_;
    afc::CodeModule code_;
};

std::string py_kerdock(uint32_t d, uint32_t m) {
    return afc::emit_json(afc::kerdock_report(afc::kerdock_generator(d, m)));
}

std::string py_family(const std::string& name, const std::string& ring_text,
                      const std::vector<uint32_t>& lengths, size_t index,
                      const std::string& variant) {
    std::istringstream rs(ring_text);
    std::string kind;
    rs >> kind;
    afc::RingPtr ring;
    if (kind == "Z") {
        uint64_t p;
        uint32_t t;
        rs >> p >> t;
        ring = afc::ChainRing::make(p, t, 1);
    } else if (kind == "GR") {
        uint64_t p;
        uint32_t t, dd;
        rs >> p >> t >> dd;
        ring = afc::ChainRing::make(p, t, dd);
    } else {
        throw std::invalid_argument("ring must start with Z or GR");
    }
    afc::FamilyResult fr =
        afc::build_family(name, ring, lengths, index, std::nullopt, std::nullopt, variant);
    afc::SpecFile sf;
    sf.ring = ring;
    sf.algebra = fr.algebra;
    sf.index = fr.index;
    return afc::print_spec(sf);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computer algebra for linear codes over affine algebras";

    py::class_<PyCode>(m, "Code")
        .def(py::init<const std::string&>(), py::arg("spec_text"),
             "Parse a code specification (same grammar as the CLI spec files).")
        .def("info_json", &PyCode::info)
        .def("cgs_json", &PyCode::cgs)
        .def("spec_text", &PyCode::spec_text)
        .def("genmat", &PyCode::genmat, "canonical generator matrix rows")
        .def("cardinality", &PyCode::cardinality, "(base q, exponent) with |C| = q^exponent")
        .def("cardinality_decimal", &PyCode::cardinality_decimal)
        .def("member", &PyCode::member, py::arg("vector"), py::arg("method") = "linear")
        .def("rdual_json", &PyCode::rdual)
        .def("adual_json", &PyCode::adual)
        .def("hdual_json", &PyCode::hdual)
        .def("paritycheck_json", &PyCode::paritycheck)
        .def("self_dual", &PyCode::self_dual)
        .def("weights_json", &PyCode::weights, py::arg("weight") = "hamming",
             py::arg("cap") = uint64_t(1) << 24);

    m.def("kerdock_json", &py_kerdock, py::arg("d") = 1, py::arg("m") = 3,
          "generalized Kerdock presentation as canonical JSON");
    m.def("family_spec", &py_family, py::arg("name"), py::arg("ring") = "Z 2 2",
          py::arg("lengths") = std::vector<uint32_t>{}, py::arg("index") = size_t{1},
          py::arg("variant") = "",
          "specification skeleton for a classical code family");

#ifdef VERSION_INFO
#define AFC_STR(x) #x
#define AFC_XSTR(x) AFC_STR(x)
    m.attr("__version__") = AFC_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
