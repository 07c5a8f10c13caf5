#include <CLI11.hpp>

#include "spinstrata/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spinstrata;

int main(int argc, char** argv) {
    CLI::App app{"boundary strata of the moduli space of spin curves"};
    app.require_subcommand(1);

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a dual graph description");
    std::string path;
    analyze->add_option("file", path, "input JSON file")->required();
    AnalysisActions actions;
    analyze->add_flag("--enumerate-supports", actions.enumerate_supports,
                      "report every even spin support of the graph");
    analyze->add_flag("--classify", actions.classify,
                      "classify each stratum (smooth / canonical / non-canonical)");
    analyze->add_flag("--audit-degree", actions.audit_degree,
                      "check the fiber degree identity for the graph");
    analyze->add_flag("--oracle", actions.oracle,
                      "cross-check the criteria against brute-force group closures");
    long long cap = -1;
    analyze->add_option("--closure-cap", cap, "abort group closures beyond this many elements");
    std::string format;
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        AnalysisRequest req = parse_request(buf.str());
        if (cap > 0) req.options.closure_cap = cap;
        if (!format.empty()) req.options.format = format;
        if (!actions.enumerate_supports && !actions.classify && !actions.audit_degree &&
            !actions.oracle)
            actions.classify = true;

        AnalysisReport rep = run_analysis(req, actions);
        if (req.options.format == "json")
            std::cout << report_to_json(rep);
        else
            std::cout << report_to_text(rep);

        int rc = 0;
        for (const SupportReport& s : rep.supports) {
            if (!s.error_code) continue;
            if (*s.error_code == ErrorCode::CapExceeded) return 3;
            rc = 2;
        }
        if (rep.audit_pass && !*rep.audit_pass) rc = 2;
        return rc;
    } catch (const SpinError& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::CapExceeded ? 3 : 2;
    }
}
