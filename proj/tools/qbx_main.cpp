#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qbx/report.hpp"

namespace {

qbx::Enumeration parse_order_flag(const std::string& flag, const qbx::Presentation& p) {
    std::vector<int> ord;
    std::stringstream ss(flag);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int g = -1;
        for (int i = 0; i < p.n; ++i)
            if (p.names[i] == tok) g = i;
        if (g < 0) {
            try {
                std::size_t pos = 0;
                int k = std::stoi(tok, &pos);
                if (pos == tok.size() && k >= 1 && k <= p.n) g = k - 1;
            } catch (...) {
            }
        }
        if (g < 0) throw qbx::input_error("--order: '" + tok + "' is not a generator");
        ord.push_back(g);
    }
    if ((int)ord.size() != p.n)
        throw qbx::input_error("--order must list all " + std::to_string(p.n) + " generators");
    try {
        return qbx::Enumeration::from_order(ord);
    } catch (const qbx::input_error&) {
        throw qbx::input_error("--order must be a permutation of the generators");
    }
}

void emit(const qbx::Json& doc, const std::string& out_path, bool json_only) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw qbx::input_error("cannot write '" + out_path + "'");
        out << text;
    }
    if (!json_only) std::cerr << qbx::render_text(doc);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification toolkit for quadratic algebras with binomial relations"};
    app.require_subcommand(1);

    std::string field_flag, out_path, file, order_flag;
    bool json_only = false, ybe_set = false, ybe_linear = false;
    int max_n = 9, max_degree = 8;
    app.add_option("--field", field_flag, "coefficient field: rational, fp, or fp:<prime>");
    app.add_flag("--json", json_only, "suppress the text rendering on stderr");
    app.add_option("--max-n", max_n, "largest accepted generator count (default 9)");
    app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");

    auto add_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->fallthrough(); // global flags may follow the subcommand
        sub->add_option("file", file, "presentation file (qbx/1 schema; - for stdin)")
            ->required();
        return sub;
    };
    CLI::App* c_check = add_cmd("check", "axioms, unique-solubility, weak cyclicity");
    CLI::App* c_order = add_cmd("order-search", "all enumerations certifying the presentation");
    CLI::App* c_groeb = add_cmd("groebner", "skew shape and degree-3 confluence under an order");
    c_groeb->add_option("--order", order_flag, "comma-separated generator order");
    CLI::App* c_ybe = add_cmd("ybe", "braid relation for the exchange map");
    c_ybe->add_flag("--set", ybe_set, "word-level check only");
    c_ybe->add_flag("--linear", ybe_linear, "linear check only");
    CLI::App* c_dual = add_cmd("dual", "quadratic dual presentation and graded dimensions");
    CLI::App* c_frob = add_cmd("frobenius", "graded dimensions and the split pairing of the dual");
    CLI::App* c_socle = add_cmd("socle", "socle monomial class, heads and tails, regularity");
    CLI::App* c_thb = add_cmd("theorem-b", "three-way equivalence report");
    CLI::App* c_hilb = add_cmd("hilbert", "normal-word counts under a certifying order");
    c_hilb->add_option("--max-degree", max_degree, "largest degree to count (default and cap 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::optional<qbx::FieldDesc> ovr;
        if (!field_flag.empty()) ovr = qbx::parse_field_flag(field_flag);
        qbx::PresentationFile pf = qbx::parse_presentation_file(file, ovr);
        if (pf.pres.n > max_n)
            throw qbx::cap_error("generator count " + std::to_string(pf.pres.n) +
                                 " exceeds cap " + std::to_string(max_n));
        qbx::Json doc;
        int code = 0;
        if (app.got_subcommand(c_check)) {
            doc = qbx::run_check(pf);
        } else if (app.got_subcommand(c_order)) {
            doc = qbx::run_order_search(pf);
        } else if (app.got_subcommand(c_groeb)) {
            qbx::Enumeration e = !order_flag.empty() ? parse_order_flag(order_flag, pf.pres)
                                 : pf.order          ? *pf.order
                                                     : qbx::Enumeration::identity(pf.pres.n);
            doc = qbx::run_groebner(pf, e);
        } else if (app.got_subcommand(c_ybe)) {
            doc = qbx::run_ybe(pf, ybe_set, ybe_linear);
        } else if (app.got_subcommand(c_dual)) {
            doc = qbx::run_dual(pf);
        } else if (app.got_subcommand(c_frob)) {
            doc = qbx::run_frobenius(pf);
        } else if (app.got_subcommand(c_socle)) {
            doc = qbx::run_socle(pf);
        } else if (app.got_subcommand(c_hilb)) {
            doc = qbx::run_hilbert(pf, max_degree);
        } else if (app.got_subcommand(c_thb)) {
            qbx::TheoremBOutcome out = qbx::run_theorem_b(pf);
            doc = out.doc;
            if (out.quantum_binomial && !out.consistent) {
                emit(doc, out_path, json_only);
                std::cerr << "consistency violation: the three conditions disagree on an "
                             "input satisfying all four axioms\n";
                return 2;
            }
        }
        emit(doc, out_path, json_only);
        return code;
    } catch (const qbx::cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const qbx::internal_error& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 2;
    } catch (const qbx::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
