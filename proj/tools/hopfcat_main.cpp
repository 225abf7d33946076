#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopfcat/taskdoc.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const hopfcat::RunReport& report, const std::string& format) {
    std::cout << (format == "json" ? report.json : report.text);
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with Hopf-algebra actions on linear categories"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    bool serial = false;
    app.add_option("--format", format, "output format: text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--serial", serial, "run the exact linear algebra kernels on the serial reference path");

    std::string file, source, target, context = "Mod-C", theorem = "T3_15";
    int degree = 3;
    bool equivariant = false, colinear = false;

    auto* check = app.add_subcommand("check", "validate every structure in the document");
    check->add_option("file", file)->required();

    auto* hom = app.add_subcommand("hom", "solve a Hom space");
    hom->add_option("file", file)->required();
    hom->add_option("--source", source)->required();
    hom->add_option("--target", target)->required();
    hom->add_flag("--equivariant", equivariant, "also compute the H-action on Hom and its invariants");
    hom->add_flag("--colinear", colinear, "also compute the colinear Hom and the rational Hom coinvariants");

    auto* ext = app.add_subcommand("ext", "compute Ext groups");
    ext->add_option("file", file)->required();
    ext->add_option("--source", source)->required();
    ext->add_option("--target", target)->required();
    ext->add_option("--context", context, "Mod-C | Mod-C#H | H-Mod | D-Mod | DM^H | Comod-H");
    ext->add_option("--degree", degree);

    auto* ss = app.add_subcommand("ss", "run a Grothendieck spectral sequence");
    ss->add_option("file", file)->required();
    ss->add_option("--theorem", theorem, "T3_15 | T4_18 | T4_19 | T5_9 | T5_17");
    ss->add_option("--source", source)->required();
    ss->add_option("--target", target)->required();
    ss->add_option("--degree", degree);

    auto* run = app.add_subcommand("run", "run the document's own task list");
    run->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    hopfcat::set_default_exec(serial ? hopfcat::Exec::Serial : hopfcat::Exec::Parallel);

    try {
        hopfcat::TaskDocument doc = hopfcat::parse_task_document(read_file(file));
        if (check->parsed()) return emit(hopfcat::run_check(doc), format);
        if (hom->parsed()) return emit(hopfcat::run_hom(doc, source, target, equivariant, colinear), format);
        if (ext->parsed()) return emit(hopfcat::run_ext(doc, source, target, context, degree), format);
        if (ss->parsed()) return emit(hopfcat::run_ss(doc, theorem, source, target, degree), format);
        return emit(hopfcat::run_document(doc), format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
