#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgc/catalog.hpp"
#include "sgc/census.hpp"
#include "sgc/engine.hpp"
#include "sgc/oracle.hpp"
#include "sgc/poly.hpp"
#include "sgc/textio.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

sgc::SignedGraph load_input(const std::string& name) {
    if (auto g = sgc::catalog_lookup(name)) return *g;
    std::ifstream in(name);
    if (!in) throw UsageError("'" + name + "' is neither a catalog name nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (sgc::looks_like_edge_list(text)) return sgc::parse_graph_text(text);
    return sgc::decode_incidence(sgc::parse_incidence_text(text));
}

std::vector<std::string> family_names(const std::string& family) {
    if (family == "petersen") return {"P1", "P2", "P3", "P4", "P5", "P6"};
    if (family == "k3") return {"K3.1", "K3.2"};
    if (family == "k4") return {"K4.1", "K4.2", "K4.3"};
    if (family == "k5") return {"K5.1", "K5.2", "K5.3", "K5.4", "K5.5", "K5.6", "K5.7"};
    throw UsageError("unknown family '" + family + "' (petersen, k3, k4, k5)");
}

sgc::SignedGraph family_underlying(const std::string& family) {
    if (family == "petersen") return sgc::underlying_petersen();
    if (family == "k3") return sgc::underlying_complete(3);
    if (family == "k4") return sgc::underlying_complete(4);
    if (family == "k5") return sgc::underlying_complete(5);
    throw UsageError("unknown family '" + family + "' (petersen, k3, k4, k5)");
}

int run_chrom(const std::string& input, bool zero_free, const std::string& format) {
    sgc::SignedGraph g = load_input(input);
    sgc::IntPolynomial p =
        zero_free ? sgc::zero_free_polynomial(g) : sgc::chromatic_polynomial(g);
    std::cout << (format == "coeffs" ? sgc::format_coefficients(p) : sgc::format_polynomial(p))
              << "\n";
    return 0;
}

int run_eval(const std::string& input, long long k, bool zero_free) {
    sgc::SignedGraph g = load_input(input);
    sgc::IntPolynomial p =
        zero_free ? sgc::zero_free_polynomial(g) : sgc::chromatic_polynomial(g);
    std::cout << p.eval(sgc::BigInt(k)).str() << "\n";
    return 0;
}

int run_distinguish(const std::string& family) {
    auto names = family_names(family);
    std::vector<sgc::IntPolynomial> chrom, zf;
    for (const auto& n : names) {
        sgc::SignedGraph g = *sgc::catalog_lookup(n);
        chrom.push_back(sgc::chromatic_polynomial(g));
        zf.push_back(sgc::zero_free_polynomial(g));
    }
    std::size_t checked = 0, failures = 0;
    auto report_pair = [&](const char* kind, const std::string& a, const std::string& b,
                           const sgc::IntPolynomial& pa, const sgc::IntPolynomial& pb) {
        ++checked;
        sgc::IntPolynomial d = pa - pb;
        std::cout << kind << " " << a << " - " << b << ": ";
        if (d.is_zero()) {
            std::cout << "IDENTICAL\n";
            ++failures;
            return;
        }
        auto roots = sgc::positive_integer_roots(d);
        if (roots.empty()) {
            std::cout << "distinct, positive integer roots: none\n";
        } else {
            std::cout << "distinct, positive integer roots:";
            for (const auto& r : roots) std::cout << " " << r.str();
            std::cout << "\n";
            ++failures;
        }
    };
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            report_pair("chromatic", names[i], names[j], chrom[i], chrom[j]);
            report_pair("zero-free", names[i], names[j], zf[i], zf[j]);
        }
    if (failures == 0) {
        std::cout << "distinguish " << family << ": PASS (" << checked
                  << " differences, all nonzero, no positive integer roots)\n";
        return 0;
    }
    std::cout << "distinguish " << family << ": FAIL (" << failures << " of " << checked
              << " checks)\n";
    return 1;
}

int run_sweep(const std::string& family, bool zero_free) {
    sgc::SignedGraph underlying = family_underlying(family);
    auto census = sgc::polynomial_census(underlying, zero_free);
    std::uint64_t total = sgc::signature_count(underlying);
    std::cout << "sweep " << family << (zero_free ? " zero-free" : " chromatic") << ": " << total
              << " signatures, " << census.size() << " distinct polynomials\n";
    std::uint64_t sum = 0;
    for (const auto& entry : census) {
        sum += entry.orbit;
        sgc::SignedGraph witness = sgc::signature_at(underlying, entry.witness);
        std::cout << "orbit " << entry.orbit << "  witness " << entry.witness << "  negatives {";
        bool first = true;
        for (const auto& e : witness.edges) {
            if (e.kind != sgc::EdgeKind::NegativeLink) continue;
            if (!first) std::cout << ",";
            std::cout << e.u << "-" << e.v;
            first = false;
        }
        std::cout << "}  " << sgc::format_polynomial(entry.poly) << "\n";
    }
    std::cout << "orbit sum " << sum << "\n";
    return 0;
}

int run_verify(const std::string& input, int k_max, bool zero_free, long long budget) {
    sgc::SignedGraph g = load_input(input);
    auto report = sgc::cross_validate(g, k_max, zero_free, sgc::BigInt(budget));
    std::cout << "verify " << input << (zero_free ? " zero-free" : " chromatic")
              << ": engine polynomial " << sgc::format_polynomial(report.engine_polynomial)
              << "\n";
    for (const auto& p : report.points) {
        std::cout << "k=" << p.k << "  engine=" << p.engine_value.str() << "  oracle=";
        if (p.oracle_count)
            std::cout << p.oracle_count->str() << "  " << (p.match ? "ok" : "MISMATCH");
        else
            std::cout << "refused (budget)";
        std::cout << "\n";
    }
    if (report.interpolation_attempted)
        std::cout << "interpolation: "
                  << (report.interpolation_matches ? "matches engine polynomial"
                                                   : "MISMATCH " +
                                                         sgc::format_polynomial(
                                                             *report.interpolated))
                  << "\n";
    else
        std::cout << "interpolation: skipped (budget)\n";
    bool ok = report.all_match();
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_convert(const std::string& input, const std::string& to) {
    sgc::SignedGraph g = load_input(input);
    if (to == "edgelist") {
        std::cout << sgc::write_graph_text(g);
        return 0;
    }
    sgc::SignedGraph r = sgc::reduce(g);
    if (r.improper)
        std::cerr << "note: positive loop absorbed during reduction; the matrix does not carry "
                     "the zero-polynomial flag\n";
    std::cout << sgc::write_incidence_text(sgc::encode_incidence(r));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic and zero-free chromatic polynomials of signed graphs"};
    app.require_subcommand(1);

    std::string input, format = "text", to, family;
    bool zero_free = false;
    long long k = 0, budget = sgc::kDefaultColoringBudget;
    int k_max = 2;

    auto* chrom = app.add_subcommand("chrom", "print the polynomial of a graph");
    chrom->add_option("input", input, "catalog name or graph file")->required();
    chrom->add_flag("--zero-free", zero_free, "zero-free variant (colors exclude 0)");
    chrom->add_option("--format", format, "text (default) or coeffs, low to high")
        ->check(CLI::IsMember({"text", "coeffs"}));

    auto* eval = app.add_subcommand("eval", "evaluate the polynomial at an integer k");
    eval->add_option("input", input, "catalog name or graph file")->required();
    eval->add_option("k", k, "evaluation point")->required();
    eval->add_flag("--zero-free", zero_free, "zero-free variant");

    auto* distinguish =
        app.add_subcommand("distinguish", "pairwise difference polynomials of a family");
    distinguish->add_option("family", family, "petersen, k3, k4 or k5")->required();

    auto* sweep =
        app.add_subcommand("sweep", "polynomial census over all signatures of a family");
    sweep->add_option("family", family, "petersen, k3, k4 or k5")->required();
    sweep->add_flag("--zero-free", zero_free, "zero-free variant");

    auto* verify = app.add_subcommand("verify", "engine vs. brute-force oracle");
    verify->add_option("input", input, "catalog name or graph file")->required();
    verify->add_option("--kmax", k_max, "spot-check k = 0..kmax (default 2)");
    verify->add_flag("--zero-free", zero_free, "zero-free variant");
    verify->add_option("--budget", budget, "assignment budget for the oracle");

    auto* convert = app.add_subcommand("convert", "convert between graph representations");
    convert->add_option("input", input, "catalog name or graph file")->required();
    convert
        ->add_option("--to", to,
                     "incidence (encodes the reduced graph) or edgelist")
        ->required()
        ->check(CLI::IsMember({"incidence", "edgelist"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chrom->parsed()) return run_chrom(input, zero_free, format);
        if (eval->parsed()) return run_eval(input, k, zero_free);
        if (distinguish->parsed()) return run_distinguish(family);
        if (sweep->parsed()) return run_sweep(family, zero_free);
        if (verify->parsed()) return run_verify(input, k_max, zero_free, budget);
        if (convert->parsed()) return run_convert(input, to);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
