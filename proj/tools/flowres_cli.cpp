#include "flowres/charforms.hpp"
#include "flowres/io.hpp"
#include "flowres/kronecker.hpp"
#include "flowres/localize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

namespace {

using namespace flowres;

std::vector<Rat> parse_rat_list(const std::string& csv)
{
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(rat_from_string(tok));
    if (out.empty())
        throw input_error("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw input_error("malformed integer list '" + csv + "'");
        }
    }
    return out;
}

InvariantPoly make_psi(const std::string& spec, int m)
{
    if (spec == "euler")
        return pfaffian_poly(m);
    if (spec == "L")
        return l_genus_poly(m);
    if (spec.rfind("p:", 0) == 0)
        return pontryagin_poly(parse_int_list(spec.substr(2)), m);
    if (spec.rfind("expr:", 0) == 0)
        return parse_invariant(spec.substr(5), m);
    throw input_error("unknown psi '" + spec +
                      "'; expected euler | L | p:<partition> | expr:<text>");
}

// Per-run result table; the total is re-checked against the listed residues
// at render time.
struct RunReport {
    std::string psi_label;
    bool halved = false;
    std::vector<std::pair<std::string, Rat>> residues;
    Rat total;
    double elapsed_ms = 0.0;
};

void print_report(const RunReport& report, int approx_digits)
{
    Rat sum = 0;
    for (const auto& [name, r] : report.residues)
        sum += r;
    if (report.halved)
        sum /= 2;
    if (sum != report.total)
        throw math_error("internal error: report total does not match its residues");

    std::cout << "psi: " << report.psi_label << "\n";
    for (const auto& [name, r] : report.residues)
        std::cout << "  " << name << ": " << rat_to_string(r) << "\n";
    if (report.halved)
        std::cout << "halved: double-cover data\n";
    std::cout << "total: " << rat_to_string(report.total) << "\n";
    if (approx_digits >= 0)
        std::cout << "approx: " << rat_to_decimal(report.total, approx_digits) << "\n";
    std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
}

int run(int argc, char** argv)
{
    CLI::App app{"Characteristic numbers of singular Riemannian flows from fixed-point "
                 "data, in exact arithmetic"};
    app.require_subcommand(1);

    std::string input, psi_spec, chi_csv, weights_file, matrix_file;
    std::string kind, alphas_csv = "0,1,2", alpha = "1", beta = "1", output = "out.json";
    int approx_digits = -1;

    auto* residue_cmd = app.add_subcommand("residue", "Residue report for one invariant form");
    residue_cmd->add_option("--input", input, "dataset JSON file")->required();
    residue_cmd->add_option("--psi", psi_spec, "euler | L | p:<partition> | expr:<text>")
        ->required();
    residue_cmd->add_option("--approx", approx_digits, "also print a decimal approximation");

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic from per-component chi");
    euler_cmd->add_option("--input", input, "dataset JSON file")->required();
    euler_cmd->add_option("--chi", chi_csv, "comma-separated chi(Sigma_j) values")->required();

    auto* sig_cmd = app.add_subcommand("signature", "Signature via isolated-point indices");
    sig_cmd->add_option("--input", input, "dataset JSON file")->required();

    auto* kron_cmd = app.add_subcommand("kronecker", "Closure dimension of a weight matrix");
    kron_cmd->add_option("--weights", weights_file, "JSON array of arrays of \"p/q\"")
        ->required();

    auto* skeigen_cmd = app.add_subcommand("skeigen", "Skeigen decomposition of a skew matrix");
    skeigen_cmd->add_option("--matrix", matrix_file, "JSON array of arrays of \"p/q\"")
        ->required();

    auto* model_cmd = app.add_subcommand("model", "Emit a bundled example dataset");
    model_cmd->add_option("--kind", kind, "cpm | s4 | klein")->required();
    model_cmd->add_option("--alphas", alphas_csv, "cpm flow weights (alpha0 first)");
    model_cmd->add_option("--alpha", alpha, "s4 weight alpha");
    model_cmd->add_option("--beta", beta, "s4 weight beta");
    model_cmd->add_option("--output", output, "output dataset path");

    CLI11_PARSE(app, argc, argv);

    if (residue_cmd->parsed()) {
        FlowFixedData data = load_flow_data(input);
        data.validate();
        InvariantPoly psi = make_psi(psi_spec, data.m);
        auto start = std::chrono::steady_clock::now();
        RunReport report;
        report.psi_label = psi.label;
        report.halved = !data.flow_orientable;
        for (const auto& comp : data.components)
            report.residues.emplace_back(comp.name, residue_at_component(psi, comp));
        report.total = characteristic_number(psi, data);
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        print_report(report, approx_digits);
        return 0;
    }

    if (euler_cmd->parsed()) {
        FlowFixedData data = load_flow_data(input);
        std::vector<Rat> chi = parse_rat_list(chi_csv);
        Rat total = euler_characteristic(data, chi);
        for (std::size_t i = 0; i < data.components.size(); ++i)
            std::cout << "  " << data.components[i].name << ": " << rat_to_string(chi[i])
                      << "\n";
        if (!data.flow_orientable)
            std::cout << "halved: double-cover data\n";
        std::cout << "chi = " << rat_to_string(total) << "\n";
        return 0;
    }

    if (sig_cmd->parsed()) {
        FlowFixedData data = load_flow_data(input);
        long long sigma = signature_via_indices(data);
        for (const auto& comp : data.components) {
            int idx = signature_index(comp.offsets(), comp.orientation_matches);
            std::cout << "  " << comp.name << ": " << (idx > 0 ? "+1" : "-1") << "\n";
        }
        if (!data.flow_orientable)
            std::cout << "halved: double-cover data\n";
        std::cout << "sigma = " << sigma << "\n";
        return 0;
    }

    if (kron_cmd->parsed()) {
        WeightMatrix w{load_rat_matrix(weights_file)};
        auto [span, ann] = closure_dimension(w);
        std::cout << "dim_span = " << span << "\n";
        std::cout << "dim_annihilator = " << ann << "\n";
        IntMatrix basis = annihilator_basis(w);
        if (basis.empty()) {
            std::cout << "annihilator basis: (empty)\n";
        } else {
            std::cout << "annihilator basis:\n";
            for (const auto& row : basis) {
                std::cout << "  (";
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? ", " : "") << row[i].str();
                std::cout << ")\n";
            }
        }
        return 0;
    }

    if (skeigen_cmd->parsed()) {
        SkewBlockMatrix a(load_rat_matrix(matrix_file));
        auto values = skeigen_decompose(a);
        std::cout << "skeigen-values:\n";
        for (const auto& [lambda, mult] : values)
            std::cout << "  " << rat_to_string(lambda) << " (mult " << mult << ")\n";
        return 0;
    }

    if (model_cmd->parsed()) {
        FlowFixedData data;
        if (kind == "cpm")
            data = cpm_model(parse_rat_list(alphas_csv));
        else if (kind == "s4")
            data = sphere_suspension_model(rat_from_string(alpha), rat_from_string(beta));
        else if (kind == "klein")
            data = klein_double_cover_model();
        else
            throw input_error("unknown model kind '" + kind + "'; expected cpm | s4 | klein");
        save_flow_data(data, output);
        std::cout << "wrote " << output << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const flowres::math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const flowres::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
