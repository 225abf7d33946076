#pragma once

#include <map>

#include "hopfcat/spectral.hpp"

namespace hopfcat {

// A parsed task document: the field, one Hopf algebra, one category carrying
// an H-action or H-coaction, named modules over it, and an ordered task list.
struct TaskDocument {
    FieldSpec field;
    HopfPtr hopf;
    HCatPtr hcat;    // set when the category carries an action
    CoHCatPtr dcat;  // set when the category carries a coaction
    std::vector<std::string> module_names;
    std::map<std::string, EquivModule> equiv_modules;
    std::map<std::string, RelHopfModule> relhopf_modules;

    struct Task {
        std::string op;  // check | hom | ext | ss
        std::string source, target;
        std::string context;  // ext
        std::string theorem;  // ss
        int degree = 3;
        bool equivariant = false;  // hom
        bool colinear = false;     // hom
    };
    std::vector<Task> tasks;
};

// Throws std::invalid_argument with a line/position message on bad input.
TaskDocument parse_task_document(const std::string& json_text);

struct RunReport {
    std::string text;
    std::string json;
    int exit_code = 0;  // 0 pass, 1 computation mismatch, 2 invalid input
};

RunReport run_document(const TaskDocument& doc);

// Single-task helpers backing the CLI subcommands.
RunReport run_check(const TaskDocument& doc);
RunReport run_hom(const TaskDocument& doc, const std::string& source, const std::string& target, bool equivariant,
                  bool colinear);
RunReport run_ext(const TaskDocument& doc, const std::string& source, const std::string& target,
                  const std::string& context, int degree);
RunReport run_ss(const TaskDocument& doc, const std::string& theorem, const std::string& source,
                 const std::string& target, int degree);

}  // namespace hopfcat
