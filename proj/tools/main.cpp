// cumulant-kit command line driver. All computation happens behind the C
// API; this file only parses flags, shapes output and maps exit codes
// (0 success, 1 domain error, 2 verification failure, 64 usage).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cumulantkit/capi.h"

namespace {

using Json = nlohmann::ordered_json;

struct ResultDeleter {
    void operator()(ck_result* r) const { ck_result_free(r); }
};
using Result = std::unique_ptr<ck_result, ResultDeleter>;

int default_max_degree(int fallback) {
    if (const char* env = std::getenv("CUMULANT_KIT_MAX_DEGREE")) {
        try {
            int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (...) {
        }
        std::cerr << "{\"error\":{\"code\":\"InvalidArgument\",\"message\":"
                     "\"CUMULANT_KIT_MAX_DEGREE must be a non-negative integer\"}}\n";
        std::exit(64);
    }
    return fallback;
}

std::string compact(const Json& partition) {
    std::string s;
    bool first_block = true;
    for (const auto& block : partition.at("blocks")) {
        if (!first_block) s += "|";
        first_block = false;
        bool first = true;
        for (const auto& e : block) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(e.get<int>());
        }
    }
    return s;
}

// Prints the result (or the error) and translates the status to an exit code.
int finish(const Result& r, const std::string& format, const std::string& out_path) {
    ck_status st = ck_result_status(r.get());
    if (st != CK_OK && st != CK_VERIFICATION_FAILED) {
        if (const char* err = ck_result_error(r.get())) std::cerr << err << "\n";
        return 1;
    }
    std::string text = ck_result_output(r.get()) ? ck_result_output(r.get()) : "";
    if (format == "tsv") {
        Json j = Json::parse(text);
        std::string tsv;
        if (j.is_array()) {
            for (const auto& row : j) {
                if (row.is_object() && row.contains("partition") && row.contains("value"))
                    tsv += compact(row.at("partition")) + "\t" + row.at("value").dump() + "\n";
                else if (row.is_object() && row.contains("n"))
                    tsv += compact(row) + "\n";
                else
                    tsv += row.dump() + "\n";
            }
        } else {
            tsv = j.dump() + "\n";
        }
        text = tsv;
    } else if (!text.empty()) {
        text += "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "{\"error\":{\"code\":\"InvalidArgument\",\"message\":\"cannot open output file\"}}\n";
            return 1;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return st == CK_VERIFICATION_FAILED ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for set-partition operads, incidence bialgebras "
                 "and moment-cumulant transforms"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    std::string mode = "nc", algebra = "gap-nc", half, input, insert_text, composition, inputs;
    std::string which = "prec", flavor = "free", seq, lower, upper, suite = "comodule", out_path;
    int n = -1, gap = 1, max_degree = -1;
    bool inverse = false, symbolic = false;

    auto* enumerate = app.add_subcommand("enumerate", "List all (noncrossing) partitions of [n]");
    enumerate->add_option("--mode", mode, "nc or sp")->check(CLI::IsMember({"nc", "sp"}));
    enumerate->add_option("--n", n, "degree")->required();

    auto* gap_compose = app.add_subcommand("gap-compose", "Insert a partition into a gap");
    gap_compose->add_option("--partition", input, "outer partition")->required();
    gap_compose->add_option("--gap", gap, "gap index, 1..deg+1");
    gap_compose->add_option("--insert", insert_text, "partition to insert");
    gap_compose->add_option("--inputs", inputs, "JSON array for simultaneous insertion");

    auto* block_compose = app.add_subcommand("block-compose", "Substitute compositions into blocks");
    block_compose->add_option("--composition", composition, "blocks in slot order")->required();
    block_compose->add_option("--inputs", inputs, "JSON array of compositions")->required();

    auto* coproduct = app.add_subcommand("coproduct", "Incidence coproducts");
    coproduct->add_option("--algebra", algebra, "gap, gap-nc, gap-sp, block, block-nc, block-sp");
    coproduct->add_option("--half", half, "prec or succ (gap algebras only)");
    coproduct->add_option("--input", input, "partition or word")->required();

    auto* ncc = app.add_subcommand("nc-closure", "Finest noncrossing coarsening");
    ncc->add_option("--input", input, "partition")->required();

    auto* ncs = app.add_subcommand("nc-star", "Set partitions with the given closure");
    ncs->add_option("--input", input, "noncrossing partition")->required();

    auto* moeb = app.add_subcommand("moebius", "Moebius function table");
    moeb->add_option("--mode", mode, "nc or sp")->check(CLI::IsMember({"nc", "sp"}));
    moeb->add_option("--n", n, "maximum degree");

    auto* psi = app.add_subcommand("psi", "Universal characters and their inverses");
    psi->add_option("--which", which, "prec, succ or star")
        ->check(CLI::IsMember({"prec", "succ", "star"}));
    psi->add_flag("--inverse", inverse, "evaluate the convolution inverse");
    psi->add_option("--input", input, "noncrossing partition")->required();

    auto* moments = app.add_subcommand("moments", "Moments from cumulants");
    moments->add_option("--flavor", flavor, "free, classical, boolean or monotone")
        ->check(CLI::IsMember({"free", "classical", "boolean", "monotone"}));
    moments->add_option("--cumulants", seq, "JSON array, or [name, n] with --symbolic")->required();
    moments->add_option("--n", n, "target degree");
    moments->add_flag("--symbolic", symbolic, "print the moment polynomial");

    auto* cumulants = app.add_subcommand("cumulants", "Cumulants from moments");
    cumulants->add_option("--flavor", flavor, "free, classical, boolean or monotone")
        ->check(CLI::IsMember({"free", "classical", "boolean", "monotone"}));
    cumulants->add_option("--moments", seq, "JSON array, or [name, n] with --symbolic")->required();
    cumulants->add_option("--n", n, "target degree");
    cumulants->add_flag("--symbolic", symbolic, "print the cumulant polynomial");

    auto* phi = app.add_subcommand("phi", "Fibre of a lattice interval");
    phi->add_option("--lower", lower, "finer partition")->required();
    phi->add_option("--upper", upper, "coarser partition")->required();

    auto* verify = app.add_subcommand("verify", "Structural identity sweeps");
    verify->add_option("--suite", suite, "comodule, unshuffle, coalgebra-maps or operads")
        ->check(CLI::IsMember({"comodule", "unshuffle", "coalgebra-maps", "operads"}));
    verify->add_option("--max-degree", max_degree, "sweep bound");
    verify->add_option("--mode", mode, "nc, sp or both")
        ->check(CLI::IsMember({"nc", "sp", "both"}));
    verify->add_option("--out", out_path, "write the report to a file");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    }

    Result r;
    std::string out_file;
    if (*enumerate) {
        r.reset(ck_enumerate(mode.c_str(), n));
    } else if (*gap_compose) {
        if (!inputs.empty())
            r.reset(ck_gap_compose_full(input.c_str(), inputs.c_str()));
        else
            r.reset(ck_gap_compose(input.c_str(), gap, insert_text.c_str()));
    } else if (*block_compose) {
        r.reset(ck_block_compose(composition.c_str(), inputs.c_str()));
    } else if (*coproduct) {
        r.reset(ck_coproduct(algebra.c_str(), half.empty() ? nullptr : half.c_str(), input.c_str()));
    } else if (*ncc) {
        r.reset(ck_nc_closure(input.c_str()));
    } else if (*ncs) {
        r.reset(ck_nc_star(input.c_str()));
    } else if (*moeb) {
        r.reset(ck_moebius_table(mode.c_str(), n >= 0 ? n : default_max_degree(5)));
    } else if (*psi) {
        r.reset(ck_psi(which.c_str(), inverse ? 1 : 0, input.c_str()));
    } else if (*moments || *cumulants) {
        const char* table = *moments ? "moments" : "cumulants";
        if (symbolic) {
            // Symbolic form: the sequence argument names the variable and the
            // degree, e.g. '["k",4]'.
            std::string var;
            int deg = n;
            Json j = Json::parse(seq, nullptr, false);
            if (!j.is_discarded() && j.is_array() && j.size() == 2 && j[0].is_string() &&
                j[1].is_number_integer()) {
                var = j[0].get<std::string>();
                deg = j[1].get<int>();
            }
            if (deg < 1) deg = n >= 1 ? n : default_max_degree(4);
            r.reset(ck_symbolic(table, flavor.c_str(), var.empty() ? nullptr : var.c_str(), deg));
        } else if (*moments) {
            r.reset(ck_moments(flavor.c_str(), seq.c_str(), n));
        } else {
            r.reset(ck_cumulants(flavor.c_str(), seq.c_str(), n));
        }
    } else if (*phi) {
        r.reset(ck_phi(lower.c_str(), upper.c_str()));
    } else if (*verify) {
        // Triple-tensor sweeps default to degree 4, the others go deeper.
        int fallback = suite == "operads" ? 6 : (suite == "coalgebra-maps" ? 5 : 4);
        r.reset(ck_verify(suite.c_str(), max_degree >= 0 ? max_degree : default_max_degree(fallback),
                          mode.c_str()));
        out_file = out_path;
    }
    return finish(r, format, out_file);
}
