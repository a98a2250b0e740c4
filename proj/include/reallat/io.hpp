#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reallat/isogeny.hpp"
#include "reallat/lattice.hpp"

namespace reallat {

struct LatticeDocument {
    std::string name;
    RealLattice lattice;
};

struct DescendedDocument {
    std::string name;
    DescendedLattice lattice;
};

struct FormDocument {
    std::string name;
    int g = 0;
    Field field;
    Mat s;
};

struct ParsedDocuments {
    std::vector<LatticeDocument> real;
    std::vector<DescendedDocument> descended;
    std::vector<FormDocument> forms;
    // document order in the source: ('r', index into real), ('d', ...), ('f', ...).
    std::vector<std::pair<char, int>> order;
};

namespace iodetail {

[[noreturn]] inline void fail_at(int line, size_t col, const std::string& msg) {
    throw error("line " + std::to_string(line) + ", col " + std::to_string(col + 1) + ": " + msg);
}

[[noreturn]] inline void fail_line(int line, const std::string& msg) {
    throw error("line " + std::to_string(line) + ": " + msg);
}

struct SourceLine {
    std::string text;
    int number = 0;
};

inline std::vector<SourceLine> content_lines(std::istream& in) {
    std::vector<SourceLine> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t a = raw.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = raw.find_last_not_of(" \t");
        out.push_back({raw.substr(a, b - a + 1), number});
    }
    return out;
}

inline void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

inline void expect_char(const std::string& s, size_t& p, char c, int line) {
    skip_ws(s, p);
    if (p >= s.size() || s[p] != c) {
        fail_at(line, p, std::string("expected '") + c + "'");
    }
    ++p;
}

inline mpz_class parse_mpz(const std::string& s, size_t& p, int line) {
    skip_ws(s, p);
    size_t start = p;
    bool neg = false;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        neg = s[p] == '-';
        ++p;
    }
    size_t digits = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == digits) fail_at(line, start, "expected an integer");
    mpz_class z(s.substr(digits, p - digits));
    if (neg) z = -z;
    return z;
}

inline mpq_class parse_rat(const std::string& s, size_t& p, int line) {
    mpz_class num = parse_mpz(s, p, line);
    mpq_class q(num);
    size_t mark = p;
    skip_ws(s, p);
    if (p < s.size() && s[p] == '/') {
        ++p;
        mpz_class den = parse_mpz(s, p, line);
        if (den == 0) fail_at(line, mark, "zero denominator");
        q = mpq_class(num, den);
        q.canonicalize();
    } else {
        p = mark;
    }
    return q;
}

// Entry literal: `p/q`, `p/q + r/s w`, `p/q - r/s w`; lenient about spaces,
// bare integers, and a pure surd term `r/s w`.
inline Scalar parse_entry(const std::string& s, size_t& p, long long d, int line) {
    size_t start = p;
    mpq_class first = parse_rat(s, p, line);
    mpq_class rat = 0, sur = 0;
    size_t mark = p;
    skip_ws(s, p);
    if (p < s.size() && s[p] == 'w') {
        ++p;
        sur = first;
    } else {
        p = mark;
        rat = first;
        skip_ws(s, p);
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            bool neg = s[p] == '-';
            ++p;
            mpq_class second = parse_rat(s, p, line);
            skip_ws(s, p);
            if (p >= s.size() || s[p] != 'w') fail_at(line, p, "expected 'w' after surd term");
            ++p;
            sur = neg ? mpq_class(-second) : second;
        }
    }
    if (sur != 0 && d == 0) fail_at(line, start, "surd literal needs a quadratic field");
    if (sur == 0) return Scalar(rat);
    return Scalar::with_surd(rat, sur, d);
}

inline std::vector<std::vector<Scalar>> parse_grid(const std::string& s, size_t& p, long long d,
                                                   int line) {
    std::vector<std::vector<Scalar>> rows;
    expect_char(s, p, '[', line);
    skip_ws(s, p);
    if (p < s.size() && s[p] == ']') {
        ++p;
        return rows;
    }
    while (true) {
        expect_char(s, p, '[', line);
        std::vector<Scalar> row;
        while (true) {
            row.push_back(parse_entry(s, p, d, line));
            skip_ws(s, p);
            if (p < s.size() && s[p] == ',') {
                ++p;
                continue;
            }
            break;
        }
        expect_char(s, p, ']', line);
        rows.push_back(std::move(row));
        skip_ws(s, p);
        if (p < s.size() && s[p] == ',') {
            ++p;
            continue;
        }
        break;
    }
    expect_char(s, p, ']', line);
    if (rows.size() > 1) {
        for (const auto& r : rows) {
            if (r.size() != rows.front().size()) fail_at(line, p, "ragged entry grid");
        }
    }
    return rows;
}

inline Mat grid_to_mat(const std::vector<std::vector<Scalar>>& rows, int m, int n, int line,
                       const char* what) {
    if (static_cast<int>(rows.size()) != m || (m > 0 && static_cast<int>(rows.front().size()) != n)) {
        fail_line(line, std::string(what) + " must be " + std::to_string(m) + "x" +
                            std::to_string(n));
    }
    std::vector<Scalar> flat;
    flat.reserve(static_cast<size_t>(m) * n);
    for (const auto& r : rows) {
        for (const auto& v : r) flat.push_back(v);
    }
    return Mat::from_entries(m, n, std::move(flat));
}

// `key = <rest>`; returns rest.
inline std::string expect_key(const SourceLine& sl, const char* key) {
    const std::string& s = sl.text;
    size_t p = 0;
    size_t klen = std::string(key).size();
    if (s.compare(0, klen, key) != 0) fail_at(sl.number, 0, std::string("expected '") + key + " = ...'");
    p = klen;
    skip_ws(s, p);
    if (p >= s.size() || s[p] != '=') fail_at(sl.number, p, "expected '='");
    ++p;
    skip_ws(s, p);
    return s.substr(p);
}

inline int parse_genus(const SourceLine& sl) {
    std::string v = expect_key(sl, "g");
    size_t p = 0;
    mpz_class z = parse_mpz(v, p, sl.number);
    skip_ws(v, p);
    if (p != v.size()) fail_at(sl.number, p, "trailing text after g");
    if (z < 1 || z > 64) fail_line(sl.number, "g out of supported range [1, 64]");
    return static_cast<int>(z.get_si());
}

inline Field parse_field_value(const SourceLine& sl) {
    std::string v = expect_key(sl, "field");
    size_t p = 0;
    skip_ws(v, p);
    if (p >= v.size() || v[p] != 'Q') fail_at(sl.number, p, "expected 'Q' or 'Q(sqrt d)'");
    ++p;
    skip_ws(v, p);
    if (p == v.size()) return Field{0};
    if (v[p] != '(') fail_at(sl.number, p, "expected '(' in field declaration");
    ++p;
    skip_ws(v, p);
    if (v.compare(p, 4, "sqrt") != 0) fail_at(sl.number, p, "expected 'sqrt'");
    p += 4;
    mpz_class d = parse_mpz(v, p, sl.number);
    expect_char(v, p, ')', sl.number);
    skip_ws(v, p);
    if (p != v.size()) fail_at(sl.number, p, "trailing text after field");
    if (!d.fits_slong_p()) fail_line(sl.number, "discriminant too large");
    Field f{d.get_si()};
    Validation val = validate_field(f);
    if (!val.ok) fail_line(sl.number, val.message);
    return f;
}

inline std::vector<F2Vec> parse_glue_value(const SourceLine& sl, int g) {
    std::string v = expect_key(sl, "glue");
    size_t p = 0;
    expect_char(v, p, '[', sl.number);
    std::vector<F2Vec> words;
    skip_ws(v, p);
    if (p < v.size() && v[p] == ']') {
        ++p;
    } else {
        while (true) {
            F2Vec word;
            auto read_bits = [&](int expected) {
                skip_ws(v, p);
                size_t start = p;
                while (p < v.size() && (v[p] == '0' || v[p] == '1')) {
                    word.push_back(static_cast<unsigned char>(v[p] - '0'));
                    ++p;
                }
                if (static_cast<int>(p - start) != expected) {
                    fail_at(sl.number, start, "glue bit-string must have length " +
                                                  std::to_string(expected));
                }
            };
            read_bits(g);
            expect_char(v, p, '|', sl.number);
            read_bits(g);
            words.push_back(std::move(word));
            skip_ws(v, p);
            if (p < v.size() && v[p] == ',') {
                ++p;
                continue;
            }
            break;
        }
        expect_char(v, p, ']', sl.number);
    }
    skip_ws(v, p);
    if (p != v.size()) fail_at(sl.number, p, "trailing text after glue");
    return words;
}

inline std::string parse_name(const SourceLine& sl, const char* kind) {
    const std::string& s = sl.text;
    size_t p = std::string(kind).size();
    skip_ws(s, p);
    size_t start = p;
    while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) fail_at(sl.number, start, std::string("expected a name after '") + kind + "'");
    std::string name = s.substr(start, p - start);
    skip_ws(s, p);
    if (p != s.size()) fail_at(sl.number, p, "trailing text after name");
    return name;
}

inline const SourceLine& need_line(const std::vector<SourceLine>& lines, size_t i,
                                   const char* what) {
    if (i >= lines.size()) {
        int last = lines.empty() ? 0 : lines.back().number;
        fail_line(last, std::string("unexpected end of input, expected ") + what);
    }
    return lines[i];
}

}  // namespace iodetail

inline LatticeDocument parse_lattice_block(const std::vector<iodetail::SourceLine>& lines,
                                           size_t& i) {
    using namespace iodetail;
    std::string name = parse_name(lines[i], "lattice");
    int head = lines[i].number;
    ++i;
    int g = parse_genus(need_line(lines, i, "'g = ...'"));
    ++i;
    Field field = parse_field_value(need_line(lines, i, "'field = ...'"));
    ++i;
    const SourceLine& fl = need_line(lines, i, "'F = ...'");
    std::string fv = expect_key(fl, "F");
    size_t p = 0;
    Mat period = grid_to_mat(parse_grid(fv, p, field.d, fl.number), g, g, fl.number, "F");
    skip_ws(fv, p);
    if (p != fv.size()) fail_at(fl.number, p, "trailing text after F");
    ++i;
    std::vector<F2Vec> words = parse_glue_value(need_line(lines, i, "'glue = ...'"), g);
    ++i;
    auto checked = RealLattice::create(g, field, period, words);
    if (!checked.ok()) {
        fail_line(head, "document '" + name + "': " + checked.validation.message);
    }
    return {std::move(name), *checked.value};
}

inline DescendedDocument parse_descended_block(const std::vector<iodetail::SourceLine>& lines,
                                               size_t& i) {
    using namespace iodetail;
    std::string name = parse_name(lines[i], "descended");
    int head = lines[i].number;
    ++i;
    int g = parse_genus(need_line(lines, i, "'g = ...'"));
    ++i;
    Field field = parse_field_value(need_line(lines, i, "'field = ...'"));
    ++i;
    const SourceLine& pl = need_line(lines, i, "'P = ...'");
    std::string pv = expect_key(pl, "P");
    size_t p = 0;
    Mat frame = grid_to_mat(parse_grid(pv, p, field.d, pl.number), 2 * g, 2 * g, pl.number, "P");
    skip_ws(pv, p);
    if (p != pv.size()) fail_at(pl.number, p, "trailing text after P");
    ++i;
    const SourceLine& tl = need_line(lines, i, "'theta = ...'");
    std::string tv = expect_key(tl, "theta");
    p = 0;
    Mat theta = grid_to_mat(parse_grid(tv, p, field.d, tl.number), 2 * g, 2 * g, tl.number,
                            "theta");
    skip_ws(tv, p);
    if (p != tv.size()) fail_at(tl.number, p, "trailing text after theta");
    ++i;
    auto checked = DescendedLattice::create(g, field, frame, theta);
    if (!checked.ok()) {
        fail_line(head, "document '" + name + "': " + checked.validation.message);
    }
    return {std::move(name), *checked.value};
}

inline FormDocument parse_form_block(const std::vector<iodetail::SourceLine>& lines, size_t& i) {
    using namespace iodetail;
    std::string name = parse_name(lines[i], "form");
    ++i;
    int g = parse_genus(need_line(lines, i, "'g = ...'"));
    ++i;
    Field field = parse_field_value(need_line(lines, i, "'field = ...'"));
    ++i;
    const SourceLine& sl = need_line(lines, i, "'S = ...'");
    std::string sv = expect_key(sl, "S");
    size_t p = 0;
    Mat s = grid_to_mat(parse_grid(sv, p, field.d, sl.number), g, g, sl.number, "S");
    skip_ws(sv, p);
    if (p != sv.size()) fail_at(sl.number, p, "trailing text after S");
    ++i;
    return {std::move(name), g, field, std::move(s)};
}

inline ParsedDocuments parse_documents(std::istream& in) {
    using namespace iodetail;
    std::vector<SourceLine> lines = content_lines(in);
    ParsedDocuments out;
    size_t i = 0;
    while (i < lines.size()) {
        const std::string& t = lines[i].text;
        if (t.rfind("lattice", 0) == 0) {
            out.real.push_back(parse_lattice_block(lines, i));
            out.order.emplace_back('r', static_cast<int>(out.real.size()) - 1);
        } else if (t.rfind("descended", 0) == 0) {
            out.descended.push_back(parse_descended_block(lines, i));
            out.order.emplace_back('d', static_cast<int>(out.descended.size()) - 1);
        } else if (t.rfind("form", 0) == 0) {
            out.forms.push_back(parse_form_block(lines, i));
            out.order.emplace_back('f', static_cast<int>(out.forms.size()) - 1);
        } else {
            fail_at(lines[i].number, 0,
                    "expected 'lattice <name>', 'descended <name>', or 'form <name>'");
        }
    }
    return out;
}

inline ParsedDocuments parse_documents_text(const std::string& text) {
    std::istringstream in(text);
    return parse_documents(in);
}

// --- emission -------------------------------------------------------------

namespace iodetail {

inline std::string grid_str(const Mat& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

inline std::string int_grid_str(const IMat& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).get_str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

inline std::string field_str(const Field& f) {
    if (f.is_rational()) return "Q";
    return "Q(sqrt " + std::to_string(f.d) + ")";
}

inline std::string glue_str(const GlueGroup& glue, int g) {
    std::string out = "[";
    bool first = true;
    for (const auto& word : glue.basis()) {
        if (!first) out += ", ";
        first = false;
        for (int k = 0; k < g; ++k) out += static_cast<char>('0' + word[static_cast<size_t>(k)]);
        out += "|";
        for (int k = 0; k < g; ++k) {
            out += static_cast<char>('0' + word[static_cast<size_t>(g + k)]);
        }
    }
    out += "]";
    return out;
}

}  // namespace iodetail

inline void emit_document(std::ostream& os, const LatticeDocument& doc) {
    const RealLattice& l = doc.lattice;
    os << "lattice " << doc.name << "\n";
    os << "g = " << l.genus() << "\n";
    os << "field = " << iodetail::field_str(l.field()) << "\n";
    os << "F = " << iodetail::grid_str(l.period()) << "\n";
    os << "glue = " << iodetail::glue_str(l.glue(), l.genus()) << "\n";
}

inline void emit_document(std::ostream& os, const DescendedDocument& doc) {
    const DescendedLattice& l = doc.lattice;
    os << "descended " << doc.name << "\n";
    os << "g = " << l.genus() << "\n";
    os << "field = " << iodetail::field_str(l.field()) << "\n";
    os << "P = " << iodetail::grid_str(l.frame()) << "\n";
    os << "theta = " << iodetail::grid_str(l.involution()) << "\n";
}

inline void emit_document(std::ostream& os, const FormDocument& doc) {
    os << "form " << doc.name << "\n";
    os << "g = " << doc.g << "\n";
    os << "field = " << iodetail::field_str(doc.field) << "\n";
    os << "S = " << iodetail::grid_str(doc.s) << "\n";
}

inline std::string document_text(const LatticeDocument& doc) {
    std::ostringstream os;
    emit_document(os, doc);
    return os.str();
}

// --- corpus manifests -------------------------------------------------------

struct DecisionRecord {
    int i = 0, j = 0;
    IsogenyDecision decision;
};

struct CorpusManifest {
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::vector<LatticeDocument> documents;
    std::vector<DecisionRecord> decisions;
    std::vector<std::vector<int>> classes;
};

inline CorpusManifest manifest_from_classification(std::uint64_t seed, std::uint64_t budget,
                                                   std::vector<LatticeDocument> documents,
                                                   const CorpusClassification& cls) {
    CorpusManifest m;
    m.seed = seed;
    m.budget = budget;
    m.documents = std::move(documents);
    for (const auto& pd : cls.pairs) m.decisions.push_back({pd.i, pd.j, pd.decision});
    m.classes = cls.classes;
    return m;
}

inline void write_manifest(std::ostream& os, const CorpusManifest& m) {
    os << "manifest\n";
    os << "seed = " << m.seed << "\n";
    os << "budget = " << m.budget << "\n";
    os << "\n";
    for (const auto& doc : m.documents) {
        emit_document(os, doc);
        os << "\n";
    }
    for (const auto& rec : m.decisions) {
        os << "decision " << rec.i << " " << rec.j << " ";
        switch (rec.decision.verdict) {
            case IsogenyDecision::Verdict::yes:
                os << "yes\n";
                os << "U = " << iodetail::int_grid_str(*rec.decision.witness) << "\n";
                break;
            case IsogenyDecision::Verdict::no:
                os << "no "
                   << (rec.decision.reason == IsogenyDecision::NoReason::irrational_ratio
                           ? "irrational-ratio"
                           : "trivial-solution-space")
                   << "\n";
                break;
            case IsogenyDecision::Verdict::unknown:
                os << "unknown\n";
                break;
        }
    }
    os << "\n";
    for (const auto& cls : m.classes) {
        os << "class";
        for (int idx : cls) os << " " << idx;
        os << "\n";
    }
}

inline std::string manifest_text(const CorpusManifest& m) {
    std::ostringstream os;
    write_manifest(os, m);
    return os.str();
}

// Reload with full re-verification: Yes witnesses must verify, No reasons
// must reproduce, the partition must match a union-find over the Yes rows.
inline CorpusManifest parse_manifest(std::istream& in) {
    using namespace iodetail;
    std::vector<SourceLine> lines = content_lines(in);
    size_t i = 0;
    if (lines.empty() || lines[0].text != "manifest") {
        fail_line(lines.empty() ? 1 : lines[0].number, "expected 'manifest' header");
    }
    ++i;
    CorpusManifest m;
    {
        std::string v = expect_key(need_line(lines, i, "'seed = ...'"), "seed");
        size_t p = 0;
        mpz_class z = parse_mpz(v, p, lines[i].number);
        if (z < 0 || !z.fits_ulong_p()) fail_line(lines[i].number, "seed out of range");
        m.seed = z.get_ui();
        ++i;
    }
    {
        std::string v = expect_key(need_line(lines, i, "'budget = ...'"), "budget");
        size_t p = 0;
        mpz_class z = parse_mpz(v, p, lines[i].number);
        if (z < 0 || !z.fits_ulong_p()) fail_line(lines[i].number, "budget out of range");
        m.budget = z.get_ui();
        ++i;
    }
    while (i < lines.size() && lines[i].text.rfind("lattice", 0) == 0) {
        m.documents.push_back(parse_lattice_block(lines, i));
    }
    const int n = static_cast<int>(m.documents.size());

    auto parse_index = [&](const std::string& s, size_t& p, int line) {
        mpz_class z = parse_mpz(s, p, line);
        if (z < 0 || z >= n) fail_line(line, "document index out of range");
        return static_cast<int>(z.get_si());
    };

    while (i < lines.size() && lines[i].text.rfind("decision", 0) == 0) {
        const SourceLine& sl = lines[i];
        size_t p = std::string("decision").size();
        DecisionRecord rec;
        rec.i = parse_index(sl.text, p, sl.number);
        rec.j = parse_index(sl.text, p, sl.number);
        skip_ws(sl.text, p);
        std::string verdict = sl.text.substr(p);
        ++i;
        const RealLattice& a = m.documents[static_cast<size_t>(rec.i)].lattice;
        const RealLattice& b = m.documents[static_cast<size_t>(rec.j)].lattice;
        if (verdict == "yes") {
            const SourceLine& ul = need_line(lines, i, "'U = ...' after a yes decision");
            std::string uv = expect_key(ul, "U");
            size_t q = 0;
            int g = a.genus();
            Mat grid = grid_to_mat(parse_grid(uv, q, 0, ul.number), g, g, ul.number, "U");
            ++i;
            IMat u = imat_from_mat(grid, "witness");
            if (!verify_imaginary_isogeny(a, b, u)) {
                fail_line(ul.number, "stored witness fails verification");
            }
            rec.decision.verdict = IsogenyDecision::Verdict::yes;
            rec.decision.witness = u;
        } else if (verdict == "no trivial-solution-space" || verdict == "no irrational-ratio") {
            if (isogeny_solution_lattice(a, b).cols() != 0) {
                fail_line(sl.number, "stored no-certificate fails verification");
            }
            rec.decision.verdict = IsogenyDecision::Verdict::no;
            rec.decision.reason = verdict == "no irrational-ratio"
                                      ? IsogenyDecision::NoReason::irrational_ratio
                                      : IsogenyDecision::NoReason::trivial_solution_space;
        } else if (verdict == "unknown") {
            rec.decision.verdict = IsogenyDecision::Verdict::unknown;
        } else {
            fail_line(sl.number, "unrecognized decision verdict");
        }
        m.decisions.push_back(std::move(rec));
    }

    while (i < lines.size() && lines[i].text.rfind("class", 0) == 0) {
        const SourceLine& sl = lines[i];
        size_t p = std::string("class").size();
        std::vector<int> cls;
        skip_ws(sl.text, p);
        while (p < sl.text.size()) {
            cls.push_back(parse_index(sl.text, p, sl.number));
            skip_ws(sl.text, p);
        }
        if (cls.empty()) fail_line(sl.number, "empty class");
        m.classes.push_back(std::move(cls));
        ++i;
    }
    if (i != lines.size()) fail_at(lines[i].number, 0, "unexpected content after classes");

    // Partition check against the recorded yes decisions.
    std::vector<int> parent(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) parent[static_cast<size_t>(k)] = k;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (const auto& rec : m.decisions) {
        if (rec.decision.verdict != IsogenyDecision::Verdict::yes) continue;
        int ri = find(rec.i), rj = find(rec.j);
        if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
    }
    std::vector<int> claimed(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < m.classes.size(); ++c) {
        for (int idx : m.classes[c]) {
            if (claimed[static_cast<size_t>(idx)] != -1) {
                throw error("manifest partition repeats document " + std::to_string(idx));
            }
            claimed[static_cast<size_t>(idx)] = static_cast<int>(c);
        }
    }
    for (int x = 0; x < n; ++x) {
        if (claimed[static_cast<size_t>(x)] < 0) {
            throw error("manifest partition misses document " + std::to_string(x));
        }
        for (int y = x + 1; y < n; ++y) {
            bool same_claimed = claimed[static_cast<size_t>(x)] == claimed[static_cast<size_t>(y)];
            if (same_claimed != (find(x) == find(y))) {
                throw error("manifest partition disagrees with its yes decisions");
            }
        }
    }
    return m;
}

inline CorpusManifest parse_manifest_text(const std::string& text) {
    std::istringstream in(text);
    return parse_manifest(in);
}

}  // namespace reallat
