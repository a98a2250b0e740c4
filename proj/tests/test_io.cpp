#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "reallat/io.hpp"
#include "reallat/random.hpp"

using Catch::Matchers::ContainsSubstring;
using reallat::F2Vec;
using reallat::Field;
using reallat::Mat;
using reallat::RealLattice;
using reallat::Scalar;

namespace {

const Scalar w2 = Scalar::sqrt_of(2);
const Field Q2{2};

F2Vec word(const std::string& bits) {
    F2Vec w;
    for (char c : bits) {
        if (c == '|') continue;
        w.push_back(c == '1' ? 1 : 0);
    }
    return w;
}

RealLattice make(int g, const Field& f, const Mat& period, const std::vector<F2Vec>& glue) {
    return reallat::unwrap(RealLattice::create(g, f, period, glue), "test lattice");
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    size_t at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

const char* kCanonicalRect =
    "lattice r0\n"
    "g = 1\n"
    "field = Q(sqrt 2)\n"
    "F = [[0/1 + 1/1 w]]\n"
    "glue = []\n";

}  // namespace

TEST_CASE("parsing a canonical document") {
    auto docs = reallat::parse_documents_text(kCanonicalRect);
    REQUIRE(docs.real.size() == 1);
    CHECK(docs.descended.empty());
    CHECK(docs.forms.empty());
    CHECK(docs.real[0].name == "r0");
    CHECK(docs.real[0].lattice == make(1, Q2, Mat::from_rows({{w2}}), {}));
    REQUIRE(docs.order.size() == 1);
    CHECK(docs.order[0] == std::make_pair('r', 0));
}

TEST_CASE("lenient forms parse to the same lattice") {
    std::string text =
        "# leading comment\n"
        "lattice  A\r\n"
        "g=1\n"
        "\n"
        "field = Q(sqrt 2)\n"
        "F = [[ 1 + 1 w ]]   # shear by one\n"
        "glue = [ 1|1 ]\n";
    auto docs = reallat::parse_documents_text(text);
    REQUIRE(docs.real.size() == 1);
    CHECK(docs.real[0].lattice ==
          make(1, Q2, Mat::from_rows({{Scalar(1) + w2}}), {word("1|1")}));

    // pure surd literals and bare integers.
    auto more = reallat::parse_documents_text(
        "lattice B\n"
        "g = 2\n"
        "field = Q(sqrt 2)\n"
        "F = [[2, 1/2 w], [0, 1]]\n"
        "glue = [10|01]\n");
    CHECK(more.real[0].lattice ==
          make(2, Q2,
               Mat::from_rows({{Scalar(2), Scalar::rational(1, 2) * w2},
                               {Scalar(0), Scalar(1)}}),
               {word("10|01")}));
}

TEST_CASE("emit then parse is the identity") {
    for (int g = 1; g <= 3; ++g) {
        for (long long d : {0LL, 2LL, 5LL}) {
            auto batch = reallat::gen_random(g, Field{d}, 4600 + 10 * g + d, 5);
            for (size_t k = 0; k < batch.size(); ++k) {
                reallat::LatticeDocument doc{"x" + std::to_string(k), batch[k]};
                auto round = reallat::parse_documents_text(reallat::document_text(doc));
                REQUIRE(round.real.size() == 1);
                CHECK(round.real[0].name == doc.name);
                CHECK(round.real[0].lattice == doc.lattice);
            }
        }
    }
}

TEST_CASE("parse then emit reproduces canonical text") {
    auto docs = reallat::parse_documents_text(kCanonicalRect);
    CHECK(reallat::document_text(docs.real[0]) == kCanonicalRect);

    std::string diamond =
        "lattice d0\n"
        "g = 1\n"
        "field = Q(sqrt 2)\n"
        "F = [[0/1 + 1/1 w]]\n"
        "glue = [1|1]\n";
    auto d = reallat::parse_documents_text(diamond);
    CHECK(reallat::document_text(d.real[0]) == diamond);

    std::string plain =
        "lattice p0\n"
        "g = 2\n"
        "field = Q\n"
        "F = [[1/1, 0/1], [1/1, 2/1]]\n"
        "glue = [10|01]\n";
    auto p = reallat::parse_documents_text(plain);
    CHECK(reallat::document_text(p.real[0]) == plain);
}

TEST_CASE("positioned parse errors") {
    CHECK_THROWS_WITH(reallat::parse_documents_text("banana\n"),
                      "line 1, col 1: expected 'lattice <name>', 'descended <name>', or "
                      "'form <name>'");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 1\n"
                                                    "field = Q\n"
                                                    "F = [[1/0]]\n"
                                                    "glue = []\n"),
                      "line 4, col 4: zero denominator");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 1\n"
                                                    "field = Q\n"
                                                    "F = [[1 + 1 w]]\n"
                                                    "glue = []\n"),
                      "line 4, col 3: surd literal needs a quadratic field");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 1\n"
                                                    "field = Q\n"
                                                    "F = [[1]]\n"
                                                    "glue = [1|10]\n"),
                      "line 5, col 4: glue bit-string must have length 1");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 1\n"),
                      "line 2: unexpected end of input, expected 'field = ...'");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 0\n"
                                                    "field = Q\n"
                                                    "F = [[1]]\n"
                                                    "glue = []\n"),
                      "line 2: g out of supported range [1, 64]");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 1\n"
                                                    "field = Q(sqrt 12)\n"
                                                    "F = [[1]]\n"
                                                    "glue = []\n"),
                      ContainsSubstring("squarefree"));
}

TEST_CASE("semantic errors name the document") {
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice bad\n"
                                                    "g = 1\n"
                                                    "field = Q\n"
                                                    "F = [[1]]\n"
                                                    "glue = [1|0]\n"),
                      "line 1: document 'bad': glue group contains a nonzero element with "
                      "zero y-bits");
    CHECK_THROWS_WITH(reallat::parse_documents_text("lattice sing\n"
                                                    "g = 2\n"
                                                    "field = Q\n"
                                                    "F = [[1, 1], [1, 1]]\n"
                                                    "glue = []\n"),
                      "line 1: document 'sing': period matrix is singular");
}

TEST_CASE("descended and form documents roundtrip") {
    RealLattice diam = make(1, Q2, Mat::from_rows({{w2}}), {word("1|1")});
    reallat::DescendedDocument dd{"e0", reallat::embed(diam)};
    std::ostringstream os;
    reallat::emit_document(os, dd);
    auto parsed = reallat::parse_documents_text(os.str());
    REQUIRE(parsed.descended.size() == 1);
    CHECK(parsed.descended[0].name == "e0");
    CHECK(parsed.descended[0].lattice.frame() == dd.lattice.frame());
    CHECK(parsed.descended[0].lattice.involution() == dd.lattice.involution());

    reallat::FormDocument fd{"s0", 2, Field{0},
                             Mat::from_rows({{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}})};
    std::ostringstream fs;
    reallat::emit_document(fs, fd);
    auto pf = reallat::parse_documents_text(fs.str());
    REQUIRE(pf.forms.size() == 1);
    CHECK(pf.forms[0].name == "s0");
    CHECK(pf.forms[0].g == 2);
    CHECK(pf.forms[0].s == fd.s);

    // document order across kinds is preserved.
    std::string mixed = os.str() + fs.str() + kCanonicalRect;
    auto pm = reallat::parse_documents_text(mixed);
    REQUIRE(pm.order.size() == 3);
    CHECK(pm.order[0].first == 'd');
    CHECK(pm.order[1].first == 'f');
    CHECK(pm.order[2].first == 'r');
}

TEST_CASE("descended documents are validated") {
    CHECK_THROWS_WITH(reallat::parse_documents_text(
                          "descended bad\n"
                          "g = 1\n"
                          "field = Q\n"
                          "P = [[1, 0], [0, 1]]\n"
                          "theta = [[1, 1], [0, -1]]\n"),
                      "line 1: document 'bad': involution does not anticommute with i");
}

namespace {

reallat::CorpusManifest sample_manifest() {
    std::vector<reallat::LatticeDocument> docs;
    docs.push_back({"a", make(1, Q2, Mat::from_rows({{w2}}), {})});
    docs.push_back({"b", make(1, Q2, Mat::from_rows({{Scalar(2) * w2}}), {})});
    docs.push_back({"c", make(1, Q2, Mat::from_rows({{Scalar(1) + w2}}), {})});
    docs.push_back({"d", make(1, Q2, Mat::from_rows({{w2}}), {word("1|1")})});
    std::vector<RealLattice> corpus;
    for (const auto& doc : docs) corpus.push_back(doc.lattice);
    auto cls = reallat::classify_corpus(corpus, 4096);
    return reallat::manifest_from_classification(9, 4096, std::move(docs), cls);
}

}  // namespace

TEST_CASE("manifest writing and reloading") {
    reallat::CorpusManifest m = sample_manifest();
    std::string text = reallat::manifest_text(m);
    CHECK_THAT(text, ContainsSubstring("manifest\nseed = 9\nbudget = 4096\n"));
    CHECK_THAT(text, ContainsSubstring("decision 0 1 yes\nU = [[1]]\n"));
    CHECK_THAT(text, ContainsSubstring("decision 0 2 no irrational-ratio\n"));
    CHECK_THAT(text, ContainsSubstring("class 0 1 3\nclass 2\n"));

    reallat::CorpusManifest back = reallat::parse_manifest_text(text);
    CHECK(back.seed == 9);
    CHECK(back.budget == 4096);
    REQUIRE(back.documents.size() == 4);
    for (size_t k = 0; k < 4; ++k) {
        CHECK(back.documents[k].name == m.documents[k].name);
        CHECK(back.documents[k].lattice == m.documents[k].lattice);
    }
    CHECK(back.decisions.size() == m.decisions.size());
    CHECK(back.classes == m.classes);

    // writing the reloaded manifest is byte identical.
    CHECK(reallat::manifest_text(back) == text);
}

TEST_CASE("manifest reloading re-verifies the evidence") {
    std::string text = reallat::manifest_text(sample_manifest());

    CHECK_THROWS_WITH(reallat::parse_manifest_text(replace_once(text, "U = [[1]]", "U = [[0]]")),
                      ContainsSubstring("stored witness fails verification"));

    CHECK_THROWS_WITH(
        reallat::parse_manifest_text(replace_once(text, "decision 0 2 no irrational-ratio",
                                                  "decision 0 1 no irrational-ratio")),
        ContainsSubstring("stored no-certificate fails verification"));

    CHECK_THROWS_WITH(
        reallat::parse_manifest_text(replace_once(text, "class 0 1 3\nclass 2", "class 0 1 2 3")),
        "manifest partition disagrees with its yes decisions");

    CHECK_THROWS_WITH(reallat::parse_manifest_text(replace_once(text, "class 2\n", "")),
                      "manifest partition misses document 2");

    CHECK_THROWS_WITH(
        reallat::parse_manifest_text(replace_once(text, "class 2\n", "class 2\nclass 2\n")),
        "manifest partition repeats document 2");

    CHECK_THROWS_WITH(reallat::parse_manifest_text("lattice a\n"),
                      ContainsSubstring("expected 'manifest' header"));
}
