#include "doctest.h"
#include "hopfcat/taskdoc.hpp"

using namespace hopfcat;

namespace {

const char* kC2fixDoc = R"({
  "field": {"kind": "Q"},
  "hopf": "GroupAlgebraC2",
  "category": "C2fix",
  "modules": {"T": "T", "R": "R", "SignT": "SignT"},
  "tasks": [
    {"op": "check"},
    {"op": "hom", "source": "T", "target": "R", "equivariant": true},
    {"op": "ext", "source": "T", "target": "T", "context": "Mod-C", "degree": 3}
  ]
})";

const char* kGroupCohomologyDoc = R"({
  "field": {"kind": "Fp", "p": 2},
  "hopf": "GroupAlgebraC2",
  "category": "C1",
  "modules": {"K": "trivial"},
  "tasks": [{"op": "ext", "source": "K", "target": "K", "context": "Mod-C#H", "degree": 3}]
})";

const char* kRelHopfDoc = R"({
  "field": {"kind": "Q"},
  "hopf": "GroupAlgebraC2",
  "category": "D1",
  "modules": {"M1": "M1", "M1g": "M1g"},
  "tasks": [
    {"op": "check"},
    {"op": "hom", "source": "M1", "target": "M1g", "colinear": true}
  ]
})";

}  // namespace

TEST_CASE("parsing rejects malformed documents with useful messages") {
    CHECK_THROWS_AS(parse_task_document("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_task_document(R"({"field": {"kind": "R"}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_task_document(R"({"field": {"kind": "Q"}, "hopf": "Nope", "category": "C1"})"),
                    std::invalid_argument);
    // unresolved module names
    CHECK_THROWS_AS(parse_task_document(R"({
        "field": {"kind": "Q"}, "hopf": "GroupAlgebraC2", "category": "C2fix",
        "tasks": [{"op": "hom", "source": "nope", "target": "T"}]})"),
                    std::invalid_argument);
    // negative degrees
    CHECK_THROWS_AS(parse_task_document(R"({
        "field": {"kind": "Q"}, "hopf": "GroupAlgebraC2", "category": "C2fix",
        "modules": {"T": "T"},
        "tasks": [{"op": "ext", "source": "T", "target": "T", "degree": -1}]})"),
                    std::invalid_argument);
}

TEST_CASE("check/hom/ext through the document pipeline") {
    TaskDocument doc = parse_task_document(kC2fixDoc);
    RunReport rep = run_document(doc);
    CHECK(rep.exit_code == 0);
    CHECK(rep.text.find("hopf_axioms: pass") != std::string::npos);
    CHECK(rep.text.find("invariants_equal_smash_hom: pass") != std::string::npos);
    CHECK(rep.text.find("ext_dims: 1 1 1 1") != std::string::npos);
}

TEST_CASE("group cohomology document reproduces 1,1,1,1") {
    TaskDocument doc = parse_task_document(kGroupCohomologyDoc);
    RunReport rep = run_document(doc);
    CHECK(rep.exit_code == 0);
    CHECK(rep.text.find("ext_dims: 1 1 1 1") != std::string::npos);
}

TEST_CASE("relative Hopf document runs the colinear machinery") {
    TaskDocument doc = parse_task_document(kRelHopfDoc);
    RunReport rep = run_document(doc);
    CHECK(rep.exit_code == 0);
    CHECK(rep.text.find("colinear_hom_dim: 0") != std::string::npos);
    CHECK(rep.text.find("coinvariants_equal_colinear_hom: pass") != std::string::npos);
}

TEST_CASE("byte-identical output on repeated runs") {
    TaskDocument doc = parse_task_document(kC2fixDoc);
    RunReport a = run_document(doc);
    RunReport b = run_document(parse_task_document(kC2fixDoc));
    CHECK(a.text == b.text);
    CHECK(a.json == b.json);
}

TEST_CASE("spectral-sequence task reports a convergence verdict") {
    TaskDocument doc = parse_task_document(R"({
        "field": {"kind": "Q"}, "hopf": "GroupAlgebraC2", "category": "C2fix",
        "modules": {"T": "T"},
        "tasks": [{"op": "ss", "theorem": "T3_15", "source": "T", "target": "T", "degree": 3}]})");
    RunReport rep = run_document(doc);
    CHECK(rep.exit_code == 0);
    CHECK(rep.text.find("convergence: pass") != std::string::npos);
    CHECK(rep.json.find("\"E2\"") != std::string::npos);
}

TEST_CASE("explicit Hopf structure constants build the Sweedler algebra") {
    TaskDocument doc = parse_task_document(R"({
        "field": {"kind": "Q"},
        "hopf": {"structure_constants": {
            "basis": ["1", "g", "x", "gx"],
            "unit": [1, 0, 0, 0],
            "counit": [1, 1, 0, 0],
            "mult": [
              [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
              [[0,1,0,0],[1,0,0,0],[0,0,0,1],[0,0,1,0]],
              [[0,0,1,0],[0,0,0,-1],[0,0,0,0],[0,0,0,0]],
              [[0,0,0,1],[0,0,-1,0],[0,0,0,0],[0,0,0,0]]
            ],
            "comult": [
              [[0,0,1]],
              [[1,1,1]],
              [[2,0,1],[1,2,1]],
              [[3,1,1],[0,3,1]]
            ],
            "antipode": [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,-1,0]]
        }},
        "category": "C1",
        "modules": {"K": "trivial"},
        "tasks": [{"op": "check"}]})");
    CHECK(same_structure(*doc.hopf, *fixtures::sweedler_q()));
    RunReport rep = run_document(doc);
    CHECK(rep.exit_code == 0);
}

TEST_CASE("failed verdicts exit with code 1") {
    // an explicit category with a broken H-action: g alpha = 2 alpha
    TaskDocument doc = parse_task_document(R"({
        "field": {"kind": "Q"}, "hopf": "GroupAlgebraC2",
        "category": {
          "objects": ["A", "B"],
          "hom": {"A:A": ["idA"], "B:B": ["idB"], "A:B": ["alpha"], "B:A": []},
          "compose": {"A:A:A": [[[1]]], "B:B:B": [[[1]]], "A:A:B": [[[1]]], "A:B:B": [[[1]]]},
          "identity": {"A": [1], "B": [1]},
          "action": {"A:B": [[[1]], [[2]]]}
        },
        "tasks": [{"op": "check"}]})");
    RunReport rep = run_document(doc);
    CHECK(rep.exit_code == 1);
    CHECK(rep.text.find("h_structure: FAIL") != std::string::npos);
}
