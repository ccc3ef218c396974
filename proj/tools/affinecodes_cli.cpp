// Command-line front end: parse a code specification file, dispatch the
// computation, print a human-readable or canonical-JSON report.
//
// Exit codes: 0 success, 1 error, 2 verification-flag failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "affinecodes/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

afc::SpecFile load_spec(const std::string& path) { return afc::parse_spec(slurp(path)); }

void print_rows(const std::vector<afc::Word>& rows) {
    for (const auto& r : rows) std::cout << afc::word_to_string(r) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for linear codes over affine algebras"};
    app.require_subcommand(1);

    std::string spec_path, element, weight = "hamming", method = "linear", family, variant;
    std::string ring_text = "Z 2 2", poly_text;
    bool as_json = false;
    uint64_t cap = uint64_t(1) << 24;
    std::vector<uint32_t> lengths;
    size_t index = 1;
    int64_t lambda = 0;
    bool lambda_set = false;
    uint32_t kd = 1, km = 3;

    auto add_spec_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("spec", spec_path, "code specification file")->required();
        c->add_flag("--json", as_json, "emit canonical JSON");
        return c;
    };

    CLI::App* c_info = add_spec_cmd("info", "validated summary of the specification");
    CLI::App* c_cgs = add_spec_cmd("cgs", "canonical generating systems per block");
    CLI::App* c_genmat = add_spec_cmd("genmat", "canonical generator matrix");
    CLI::App* c_card = add_spec_cmd("card", "cardinality as a q-power");
    CLI::App* c_member = add_spec_cmd("member", "membership of a vector");
    c_member->add_option("element", element, "vector literal, e.g. \"(X1, 0, 2)\"")->required();
    c_member->add_option("--method", method, "cgs | linear")
        ->check(CLI::IsMember({"cgs", "linear"}));
    CLI::App* c_rdual = add_spec_cmd("rdual", "R-linear dual through the coefficient listing");
    CLI::App* c_adual = add_spec_cmd("adual", "dual under the algebra-valued pairing");
    CLI::App* c_hdual = add_spec_cmd("hdual", "Hermitian dual (relations X^n - 1)");
    CLI::App* c_pc = add_spec_cmd("paritycheck", "parity-check matrix (univariate algebras)");
    CLI::App* c_weights = add_spec_cmd("weights", "exact weight distribution");
    c_weights->add_option("--weight", weight, "hamming | lee | euclidean")
        ->check(CLI::IsMember({"hamming", "lee", "euclidean"}));
    c_weights->add_option("--cap", cap, "enumeration size cap");

    CLI::App* c_family = app.add_subcommand("family", "emit a specification skeleton for a family");
    c_family->add_option("name", family,
                         "cyclic|negacyclic|constacyclic|polycyclic|abelian|quasi_cyclic|"
                         "quasi_abelian|Rk|nonchain16")
        ->required();
    c_family->add_option("--ring", ring_text, "ring declaration, e.g. \"Z 2 3\" or \"GR 2 2 3\"");
    c_family->add_option("--n", lengths, "length(s) n_1 .. n_r");
    c_family->add_option("--index", index, "code index l");
    c_family->add_option("--lambda", lambda, "constacyclic unit")->each([&](const std::string&) {
        lambda_set = true;
    });
    c_family->add_option("--rel", poly_text, "polycyclic relation, e.g. \"X^3+2X+1\"");
    c_family->add_option("--variant", variant, "nonchain16 variant: z4x2 | f2uv");
    c_family->add_flag("--json", as_json, "emit canonical JSON");

    CLI::App* c_kerdock = app.add_subcommand("kerdock", "generalized Kerdock presentation");
    c_kerdock->add_option("--d", kd, "field parameter (q = 2^d)");
    c_kerdock->add_option("--m", km, "odd extension degree");
    c_kerdock->add_flag("--json", as_json, "emit canonical JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*c_info) {
            afc::SpecFile sf = load_spec(spec_path);
            afc::Json j = afc::info_report(sf);
            if (as_json) {
                std::cout << afc::emit_json(j);
            } else {
                std::cout << "ring:    " << sf.ring->describe() << "\n"
                          << "algebra: " << sf.algebra->describe() << "\n"
                          << "order:   " << sf.algebra->order().name() << "\n"
                          << "index:   " << sf.index << "\n"
                          << "generators:\n";
                print_rows(sf.generators);
            }
        } else if (*c_cgs) {
            afc::SpecFile sf = load_spec(spec_path);
            afc::CodeModule code = sf.code();
            afc::Json j = afc::cgs_report(code);
            if (as_json) {
                std::cout << afc::emit_json(j);
            } else {
                for (const auto& blk : code.cgs().blocks) {
                    std::cout << "block at component " << blk.component + 1 << ":\n";
                    for (const auto& level : blk.cgs.levels) {
                        std::cout << "  b = " << level.b << ", |F| = " << level.ferrers.size()
                                  << ", chi = {";
                        for (size_t i = 0; i < level.chi.size(); ++i)
                            std::cout << (i ? ", " : "") << level.chi[i].value.to_string();
                        std::cout << "}\n";
                    }
                    std::cout << "  log_q size = " << blk.cgs.log_q_size << "\n";
                }
                std::cout << "canonical generator matrix:\n";
                print_rows(afc::canonical_generator_matrix(code));
            }
        } else if (*c_genmat) {
            afc::CodeModule code = load_spec(spec_path).code();
            if (as_json)
                std::cout << afc::emit_json(afc::genmat_report(code));
            else
                print_rows(afc::canonical_generator_matrix(code));
        } else if (*c_card) {
            afc::CodeModule code = load_spec(spec_path).code();
            if (as_json) {
                std::cout << afc::emit_json(afc::card_report(code));
            } else {
                afc::Cardinality c = afc::cardinality(code);
                std::cout << c.base << "^" << c.exponent << "\n";
            }
        } else if (*c_member) {
            afc::SpecFile sf = load_spec(spec_path);
            afc::CodeModule code = sf.code();
            afc::Word w;
            for (const auto& part : afc::split_tuple(element))
                w.push_back(afc::parse_poly(part, sf.algebra));
            afc::MembershipMethod mm =
                method == "cgs" ? afc::MembershipMethod::cgs : afc::MembershipMethod::linear;
            if (as_json)
                std::cout << afc::emit_json(afc::member_report(w, code, mm));
            else
                std::cout << (afc::membership(w, code, mm) ? "true" : "false") << "\n";
        } else if (*c_rdual) {
            afc::CodeModule code = load_spec(spec_path).code();
            if (as_json)
                std::cout << afc::emit_json(afc::rdual_report(code));
            else
                print_rows(afc::r_dual(code).generators);
        } else if (*c_adual) {
            afc::CodeModule code = load_spec(spec_path).code();
            if (as_json) {
                std::cout << afc::emit_json(afc::adual_report(code));
            } else {
                afc::CodeModule dual = afc::a_dual(code);
                print_rows(afc::minimize_rows(afc::canonical_generator_matrix(dual),
                                              code.spec(), code.index()));
                if (dual.same_module(code)) std::cout << "self-dual\n";
            }
        } else if (*c_hdual) {
            afc::CodeModule code = load_spec(spec_path).code();
            if (as_json) {
                std::cout << afc::emit_json(afc::hdual_report(code));
            } else {
                afc::CodeModule dual = afc::hermitian_dual(code);
                print_rows(afc::minimize_rows(afc::canonical_generator_matrix(dual),
                                              code.spec(), code.index()));
            }
        } else if (*c_pc) {
            afc::CodeModule code = load_spec(spec_path).code();
            afc::ParityCheckResult pc = afc::parity_check_matrix(code);
            if (as_json)
                std::cout << afc::emit_json(afc::paritycheck_report(code, pc));
            else
                print_rows(pc.reduced);
            if (!pc.verified()) return 2;
        } else if (*c_weights) {
            afc::CodeModule code = load_spec(spec_path).code();
            afc::WeightKind wk = afc::weight_kind_from_name(weight);
            afc::WeightDistribution dist = afc::weight_enumerator(code, wk, cap);
            if (as_json) {
                std::cout << afc::emit_json(afc::weights_report(code, dist, wk));
            } else {
                std::cout << "weight,count\n";
                for (const auto& [w, c] : dist.counts) std::cout << w << "," << c << "\n";
            }
        } else if (*c_family) {
            std::istringstream rs(ring_text);
            std::string kind;
            rs >> kind;
            afc::RingPtr ring;
            if (kind == "Z") {
                uint64_t p;
                uint32_t t;
                rs >> p >> t;
                if (!rs) throw std::runtime_error("bad --ring");
                ring = afc::ChainRing::make(p, t, 1);
            } else if (kind == "GR") {
                uint64_t p;
                uint32_t t, d;
                rs >> p >> t >> d;
                if (!rs) throw std::runtime_error("bad --ring");
                ring = afc::ChainRing::make(p, t, d);
            } else {
                throw std::runtime_error("--ring must start with Z or GR");
            }
            std::optional<afc::RElem> lam;
            if (lambda_set) lam = ring->from_int(lambda);
            std::optional<afc::RPoly> rel;
            if (!poly_text.empty())
                rel = [&] {
                    afc::RingPtr zpt = afc::ChainRing::make(ring->p(), ring->t(), 1);
                    afc::RPoly raw = afc::parse_modulus_poly(poly_text, zpt);
                    std::vector<afc::RElem> cs;
                    for (int64_t i = 0; i <= raw.degree(); ++i)
                        cs.push_back(ring->from_int(static_cast<int64_t>(raw.coeff(i).coeff(0))));
                    return afc::RPoly(ring, cs);
                }();
            afc::FamilyResult fr = afc::build_family(family, ring, lengths, index, lam, rel, variant);
            afc::SpecFile sf;
            sf.ring = ring;
            sf.algebra = fr.algebra;
            sf.index = fr.index;
            if (as_json) {
                afc::Json j;
                j["family"] = family;
                j["algebra"] = fr.algebra->describe();
                j["index"] = fr.index;
                j["spec"] = afc::print_spec(sf);
                std::cout << afc::emit_json(j);
            } else {
                std::cout << afc::print_spec(sf);
            }
        } else if (*c_kerdock) {
            afc::KerdockResult kr = afc::kerdock_generator(kd, km);
            if (as_json) {
                std::cout << afc::emit_json(afc::kerdock_report(kr));
            } else {
                std::cout << "algebra:   " << kr.params.algebra->describe() << "\n"
                          << "H:         " << kr.params.h.to_string() << "\n"
                          << "H*:        " << kr.params.h_star.to_string() << "\n"
                          << "P:         " << kr.params.p_poly.to_string() << "\n"
                          << "Q:         " << kr.params.q_poly.to_string() << "\n"
                          << "generator: " << afc::word_to_string(kr.generator) << "\n";
                afc::CodeModule d(kr.params.algebra, 2, {kr.generator});
                afc::Cardinality c = afc::cardinality(d);
                std::cout << "|D| = " << c.base << "^" << c.exponent << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
