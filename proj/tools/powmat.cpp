#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "powmat/errors.hpp"
#include "powmat/matpow.hpp"
#include "powmat/matrix_io.hpp"
#include "powmat/render.hpp"

namespace {

using namespace powmat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RenderFormat parse_format(const std::string& name) {
    if (name == "plain") return RenderFormat::plain;
    if (name == "latex") return RenderFormat::latex;
    if (name == "json") return RenderFormat::json;
    throw parse_error("unknown format: " + name + " (expected plain, latex, or json)");
}

int run(int argc, char** argv) {
    CLI::App app{"closed forms and exact values for integer powers of a rational matrix"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::string format_name = "plain";
    long long k = 0;
    long long kmax = 0;
    bool symbolic = false;
    bool inverse = false;

    auto* power = app.add_subcommand("power", "A^k as a closed form or an exact matrix");
    power->add_option("--matrix", matrix_path, "matrix file (JSON or plain rows)")->required();
    auto* kopt = power->add_option("--k", k, "integer exponent");
    auto* symopt = power->add_flag("--symbolic", symbolic, "closed form in a symbolic exponent");
    power->add_flag("--inverse", inverse, "work with the inverse matrix");
    power->add_option("--format", format_name, "plain, latex, or json");
    kopt->excludes(symopt);
    symopt->excludes(kopt);

    auto* eval = app.add_subcommand("eval", "evaluate the closed form at one exponent");
    eval->add_option("--matrix", matrix_path, "matrix file")->required();
    eval->add_option("--k", k, "integer exponent")->required();

    auto* check = app.add_subcommand("check", "verify closed forms against direct powers");
    check->add_option("--matrix", matrix_path, "matrix file")->required();
    check->add_option("--kmax", kmax, "largest exponent to verify")->required();

    auto* det = app.add_subcommand("det", "exact determinant");
    det->add_option("--matrix", matrix_path, "matrix file")->required();

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("--matrix", matrix_path, "matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Matrix a = parse_matrix_input(read_file(matrix_path));
    const RenderFormat format = parse_format(format_name);

    if (power->parsed()) {
        if (!*kopt && !symbolic)
            throw parse_error("power needs either --k or --symbolic");
        if (symbolic) {
            const ClosedFormMatrix cfm =
                inverse ? power_matrix_inverse_symbolic(a) : power_matrix_symbolic(a);
            std::cout << render_closed_form(cfm, {format, "k"}) << "\n";
        } else {
            const Matrix result = inverse ? power_matrix_integer(mat_inverse(a), k)
                                          : power_matrix_integer(a, k);
            std::cout << render_matrix(result, format) << "\n";
        }
        return 0;
    }
    if (eval->parsed()) {
        const ClosedFormMatrix cfm = power_matrix_symbolic(a);
        const Matrix value = eval_closed_form_matrix(cfm, k);
        if (value != power_matrix_integer(a, k))
            throw internal_error("closed form disagrees with the direct power");
        std::cout << render_matrix(value, format) << "\n";
        return 0;
    }
    if (check->parsed()) {
        const OracleReport report = check_against_oracle(a, kmax);
        for (const auto& [index, ok] : report.per_k)
            std::cout << "k=" << index << (ok ? " ok" : " FAIL") << "\n";
        if (!report.pass) {
            const auto& f = *report.first_failure;
            std::cout << "FAIL at entry (" << f.i + 1 << "," << f.j + 1 << "), k=" << f.k
                      << "\n";
            throw internal_error("closed form disagrees with the direct power");
        }
        std::cout << "PASS\n";
        return 0;
    }
    if (det->parsed()) {
        std::cout << render_rational(faddeev_leverrier(a).determinant, format) << "\n";
        return 0;
    }
    if (charpoly->parsed()) {
        std::cout << render_poly(faddeev_leverrier(a).charpoly, "x", format) << "\n";
        return 0;
    }
    throw internal_error("no subcommand dispatched");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const singular_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
