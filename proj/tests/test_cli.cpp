#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "reallat/cli.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    CliResult r;
    r.code = reallat::run_cli(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const char* kRect =
    "lattice r0\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[0/1 + 1/1 w]]\n"
    "glue = []\n";

const char* kDiamond =
    "lattice d0\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[0/1 + 1/1 w]]\n"
    "glue = [1|1]\n";

const char* kShear =
    "lattice sh\n"
    "g = 2\n"
    "field = Q(sqrt 2)\n"
    "F = [[1, 1 w], [0, 1]]\n"
    "glue = []\n";

const char* kCorpus =
    "lattice a\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[1 w]]\n"
    "glue = []\n"
    "lattice b\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[2 w]]\n"
    "glue = []\n"
    "lattice c\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[1 + 1 w]]\n"
    "glue = []\n"
    "lattice d\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[1 w]]\n"
    "glue = [1|1]\n";

}  // namespace

TEST_CASE("usage and flag errors") {
    CHECK(run({}).code == 3);
    CHECK(run({"frobnicate"}, kRect).code == 3);
    CHECK(run({"--bogus", "components"}).code == 3);
    CHECK(run({"components", "--seed", "x"}).code == 3);
    CHECK_THAT(run({}).err, ContainsSubstring("usage: reallat"));
}

TEST_CASE("validate command") {
    auto r = run({"validate"}, std::string(kRect) + kDiamond);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "r0: valid lattice, g = 1, field = Q(sqrt 2), glue dim = 0\n"
          "d0: valid lattice, g = 1, field = Q(sqrt 2), glue dim = 1\n");

    auto bad = run({"validate"},
                   "lattice bad\ng = 1\nfield = Q\nF = [[1]]\nglue = [1|0]\n");
    CHECK(bad.code == 1);
    CHECK_THAT(bad.err, ContainsSubstring("error: line 1: document 'bad'"));
}

TEST_CASE("components command") {
    auto r = run({"components"}, std::string(kRect) + kDiamond);
    CHECK(r.code == 0);
    CHECK(r.out == "components: 2\ncomponents: 1 (connected)\n");
}

TEST_CASE("polarize find") {
    auto yes = run({"polarize", "find"}, kRect);
    CHECK(yes.code == 0);
    CHECK(yes.out == "r0: polarizable yes\nS = [[0/1 + 1/1 w]]\n");

    auto no = run({"polarize", "find"}, kShear);
    CHECK(no.code == 0);
    CHECK(no.out == "sh: polarizable no\nQ = [[1/1, 0/1], [0/1, 0/1]]\n");

    // an undecided case: admissible subspace with no definite element and no
    // common kernel direction, out of reach of the bounded search.
    auto unk = run({"polarize", "find", "--budget", "64"},
                   "lattice u\n"
                   "g = 3\n"
                   "field = Q(sqrt 2)\n"
                   "F = [[1, 1 w, 0], [0, 1, 0], [0, 0, 1]]\n"
                   "glue = []\n");
    CHECK(unk.code == 2);
    CHECK(unk.out == "u: polarizable unknown (search budget exhausted)\n");
}

TEST_CASE("polarize verify") {
    std::string good = std::string(kRect) +
                       "form f0\n"
                       "g = 1\n"
                       "field = Q(sqrt 2)\n"
                       "S = [[0/1 + 1/1 w]]\n";
    auto r = run({"polarize", "verify"}, good);
    CHECK(r.code == 0);
    CHECK(r.out == "r0: polarization valid\n");

    std::string bad = std::string(kRect) +
                      "form f0\n"
                      "g = 1\n"
                      "field = Q\n"
                      "S = [[1]]\n";
    auto b = run({"polarize", "verify"}, bad);
    CHECK(b.code == 1);
    CHECK(b.out == "r0: polarization invalid\n");

    auto mismatch = run({"polarize", "verify"}, kRect);
    CHECK(mismatch.code == 1);
    CHECK_THAT(mismatch.err, ContainsSubstring("pairs each lattice with one form"));
}

TEST_CASE("isogeny command") {
    std::string rect_rational =
        "lattice q0\n"
        "g = 1\n"
        "field = Q(sqrt 2)\n"
        "F = [[1]]\n"
        "glue = []\n";

    auto yes = run({"isogeny"}, std::string(kRect) + kDiamond);
    CHECK(yes.code == 0);
    CHECK(yes.out == "isogenous: yes\nU = [[1]]\n");

    auto no = run({"isogeny"}, std::string(kRect) + rect_rational);
    CHECK(no.code == 0);
    CHECK(no.out ==
          "isogenous: no (irrational-ratio)\n"
          "note: period ratio 0/1 + 1/1 w is irrational\n");

    std::string plain2 =
        "lattice p2\n"
        "g = 2\n"
        "field = Q(sqrt 2)\n"
        "F = [[1, 0], [0, 1]]\n"
        "glue = []\n";
    auto unk = run({"isogeny", "--budget", "100"}, plain2 + kShear);
    CHECK(unk.code == 2);
    CHECK(unk.out == "isogenous: unknown\nnote: search budget exhausted\n");

    auto wrong = run({"isogeny"}, kRect);
    CHECK(wrong.code == 1);
    CHECK_THAT(wrong.err, ContainsSubstring("exactly two lattice documents"));
}

TEST_CASE("split command") {
    reallat::RealLattice diam = reallat::parse_documents_text(kDiamond).real[0].lattice;
    std::ostringstream em;
    reallat::emit_document(em, reallat::DescendedDocument{"d0", reallat::embed(diam)});
    auto r = run({"split"}, em.str());
    CHECK(r.code == 0);
    CHECK(r.out == kDiamond);
}

TEST_CASE("dual command") {
    auto r = run({"dual"}, kRect);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "lattice r0.dual\n"
          "g = 1\n"
          "field = Q(sqrt 2)\n"
          "F = [[0/1 + 1/1 w]]\n"
          "glue = []\n");
}

TEST_CASE("normal-form command") {
    auto r = run({"normal-form"}, std::string(kRect) + kDiamond);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "r0: rectangular, alpha = 0/1 + 1/1 w\n"
          "d0: diamond, alpha = 0/1 + 1/2 w\n");
}

TEST_CASE("classify-corpus command") {
    auto r = run({"classify-corpus"}, kCorpus);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "documents: 4\n"
          "classes: 2\n"
          "class a b d\n"
          "class c\n"
          "unknown-pairs: 0\n"
          "note: classes merge only certified equivalences; the partition refines the true "
          "classification\n");
}

TEST_CASE("classify-corpus writes a reloadable manifest") {
    std::string path = "/tmp/reallat_test_manifest.txt";
    auto r = run({"classify-corpus", "--manifest", path, "--seed", "11"}, kCorpus);
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    reallat::CorpusManifest m = reallat::parse_manifest(f);
    CHECK(m.seed == 11);
    CHECK(m.budget == 4096);
    REQUIRE(m.classes.size() == 2);
    CHECK(m.classes[0] == std::vector<int>{0, 1, 3});
    CHECK(m.classes[1] == std::vector<int>{2});
    std::remove(path.c_str());
}

TEST_CASE("gen-random command") {
    std::vector<std::string> args = {"gen-random", "--g", "2", "--field", "Q(sqrt 2)",
                                     "--count", "3", "--seed", "7"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto docs = reallat::parse_documents_text(a.out);
    REQUIRE(docs.real.size() == 3);
    CHECK(docs.real[0].name == "rnd0");
    CHECK(docs.real[2].name == "rnd2");
    for (const auto& doc : docs.real) {
        CHECK(doc.lattice.genus() == 2);
        CHECK(doc.lattice.field().d == 2);
    }

    auto other = run({"gen-random", "--g", "2", "--field", "Q(sqrt 2)", "--count", "3",
                      "--seed", "8"});
    CHECK(other.out != a.out);

    auto bad = run({"gen-random", "--g", "9"});
    CHECK(bad.code == 3);
    CHECK_THAT(bad.err, ContainsSubstring("gen-random supports 1 <= g <= 6"));
}

TEST_CASE("missing input file") {
    auto r = run({"components", "/nonexistent/path.lat"});
    CHECK(r.code == 1);
    CHECK_THAT(r.err, ContainsSubstring("error: cannot open /nonexistent/path.lat"));
}

#ifdef REALLAT_CLI_PATH
TEST_CASE("binary runs end to end") {
    std::string doc = "/tmp/reallat_test_doc.lat";
    std::string outfile = "/tmp/reallat_test_out.txt";
    {
        std::ofstream f(doc);
        REQUIRE(f.good());
        f << kRect << kDiamond;
    }
    std::string cmd = std::string(REALLAT_CLI_PATH) + " components " + doc + " > " + outfile +
                      " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    CHECK(WEXITSTATUS(rc) == 0);
    std::ifstream f(outfile);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "components: 2\ncomponents: 1 (connected)\n");
    std::remove(doc.c_str());
    std::remove(outfile.c_str());
}
#endif
