#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "reallat/components.hpp"
#include "reallat/io.hpp"
#include "reallat/isogeny.hpp"
#include "reallat/polarization.hpp"
#include "reallat/random.hpp"

namespace reallat {

namespace clidetail {

struct Options {
    std::vector<std::string> positional;
    std::uint64_t seed = 0;
    std::uint64_t budget = 4096;
    std::string manifest_path;
    int g = 1;
    Field field;
    int count = 1;
};

inline int usage(std::ostream& err) {
    err << "usage: reallat <command> [files...] [flags]\n"
           "commands:\n"
           "  validate | split | components | polarize verify | polarize find\n"
           "  dual | isogeny | normal-form | classify-corpus | gen-random\n"
           "flags:\n"
           "  --seed <n> --budget <n> --manifest <path> --g <n> --field <Q|Q(sqrt d)> --count <n>\n"
           "documents are read from file arguments ('-' for stdin) or stdin when none are given\n";
    return 3;
}

inline bool parse_u64_flag(const std::string& s, std::uint64_t& out) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    try {
        out = std::stoull(s);
    } catch (...) {
        return false;
    }
    return true;
}

inline bool parse_int_flag(const std::string& s, int& out) {
    std::uint64_t v = 0;
    if (!parse_u64_flag(s, v) || v > 1000000) return false;
    out = static_cast<int>(v);
    return true;
}

inline void append_documents(ParsedDocuments& all, ParsedDocuments part) {
    int r0 = static_cast<int>(all.real.size());
    int d0 = static_cast<int>(all.descended.size());
    int f0 = static_cast<int>(all.forms.size());
    for (auto& doc : part.real) all.real.push_back(std::move(doc));
    for (auto& doc : part.descended) all.descended.push_back(std::move(doc));
    for (auto& doc : part.forms) all.forms.push_back(std::move(doc));
    for (auto [kind, idx] : part.order) {
        int base = kind == 'r' ? r0 : kind == 'd' ? d0 : f0;
        all.order.emplace_back(kind, base + idx);
    }
}

inline ParsedDocuments read_documents(const std::vector<std::string>& files, std::istream& in) {
    if (files.empty()) return parse_documents(in);
    ParsedDocuments all;
    for (const std::string& path : files) {
        if (path == "-") {
            append_documents(all, parse_documents(in));
            continue;
        }
        std::ifstream f(path);
        if (!f) throw error("cannot open " + path);
        append_documents(all, parse_documents(f));
    }
    return all;
}

inline void emit_blocks_start(std::ostream& out, bool& first) {
    if (!first) out << "\n";
    first = false;
}

}  // namespace clidetail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    using clidetail::Options;
    Options opt;
    bool field_given = false;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> const std::string* {
            if (i + 1 >= args.size()) {
                err << "flag " << flag << " needs a value\n";
                return nullptr;
            }
            return &args[++i];
        };
        if (a == "--seed") {
            const std::string* v = value("--seed");
            if (!v || !clidetail::parse_u64_flag(*v, opt.seed)) return clidetail::usage(err);
        } else if (a == "--budget") {
            const std::string* v = value("--budget");
            if (!v || !clidetail::parse_u64_flag(*v, opt.budget)) return clidetail::usage(err);
        } else if (a == "--manifest") {
            const std::string* v = value("--manifest");
            if (!v) return clidetail::usage(err);
            opt.manifest_path = *v;
        } else if (a == "--g") {
            const std::string* v = value("--g");
            if (!v || !clidetail::parse_int_flag(*v, opt.g)) return clidetail::usage(err);
        } else if (a == "--count") {
            const std::string* v = value("--count");
            if (!v || !clidetail::parse_int_flag(*v, opt.count)) return clidetail::usage(err);
        } else if (a == "--field") {
            const std::string* v = value("--field");
            if (!v) return clidetail::usage(err);
            try {
                opt.field = iodetail::parse_field_value({"field = " + *v, 0});
            } catch (const error&) {
                return clidetail::usage(err);
            }
            field_given = true;
        } else if (!a.empty() && a.size() >= 2 && a[0] == '-' && a[1] == '-') {
            err << "unknown flag " << a << "\n";
            return clidetail::usage(err);
        } else {
            opt.positional.push_back(a);
        }
    }
    (void)field_given;
    if (opt.positional.empty()) return clidetail::usage(err);
    std::string command = opt.positional.front();
    std::vector<std::string> rest(opt.positional.begin() + 1, opt.positional.end());

    try {
        if (command == "validate") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            for (auto [kind, idx] : docs.order) {
                if (kind == 'r') {
                    const LatticeDocument& doc = docs.real[static_cast<size_t>(idx)];
                    out << doc.name << ": valid lattice, g = " << doc.lattice.genus()
                        << ", field = " << iodetail::field_str(doc.lattice.field())
                        << ", glue dim = " << doc.lattice.glue().dim() << "\n";
                } else if (kind == 'd') {
                    const DescendedDocument& doc = docs.descended[static_cast<size_t>(idx)];
                    out << doc.name << ": valid descended lattice, g = " << doc.lattice.genus()
                        << ", field = " << iodetail::field_str(doc.lattice.field()) << "\n";
                } else {
                    const FormDocument& doc = docs.forms[static_cast<size_t>(idx)];
                    out << doc.name << ": form, g = " << doc.g << "\n";
                }
            }
            return 0;
        }

        if (command == "split") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            if (docs.descended.empty()) throw error("split needs descended documents");
            bool first = true;
            for (const DescendedDocument& doc : docs.descended) {
                SplitResult res = split(doc.lattice);
                clidetail::emit_blocks_start(out, first);
                emit_document(out, LatticeDocument{doc.name, res.lattice});
            }
            return 0;
        }

        if (command == "components") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            if (docs.real.empty()) throw error("components needs lattice documents");
            for (const LatticeDocument& doc : docs.real) {
                ComponentGroup a = pi0_via_glue(doc.lattice);
                ComponentGroup b = pi0_via_cohomology(doc.lattice);
                if (a != b) throw error("component computations disagree on " + doc.name);
                out << components_string(a) << "\n";
            }
            return 0;
        }

        if (command == "polarize") {
            if (rest.empty()) return clidetail::usage(err);
            std::string sub = rest.front();
            std::vector<std::string> files(rest.begin() + 1, rest.end());
            ParsedDocuments docs = clidetail::read_documents(files, in);
            if (sub == "verify") {
                if (docs.real.empty() || docs.real.size() != docs.forms.size()) {
                    throw error("polarize verify pairs each lattice with one form");
                }
                bool all_ok = true;
                for (size_t k = 0; k < docs.real.size(); ++k) {
                    const LatticeDocument& ld = docs.real[k];
                    const FormDocument& fd = docs.forms[k];
                    if (fd.g != ld.lattice.genus() ||
                        (!fd.field.is_rational() && fd.field != ld.lattice.field())) {
                        throw error("form " + fd.name + " does not match lattice " + ld.name);
                    }
                    bool ok = verify_polarization(ld.lattice, fd.s);
                    all_ok = all_ok && ok;
                    out << ld.name << ": polarization " << (ok ? "valid" : "invalid") << "\n";
                }
                return all_ok ? 0 : 1;
            }
            if (sub == "find") {
                if (docs.real.empty()) throw error("polarize find needs lattice documents");
                bool any_unknown = false;
                for (const LatticeDocument& doc : docs.real) {
                    PolarizabilityCertificate cert =
                        decide_polarizable(doc.lattice, opt.budget, opt.seed);
                    switch (cert.verdict) {
                        case PolarizabilityCertificate::Verdict::yes:
                            out << doc.name << ": polarizable yes\n";
                            out << "S = " << iodetail::grid_str(*cert.witness) << "\n";
                            break;
                        case PolarizabilityCertificate::Verdict::no:
                            out << doc.name << ": polarizable no\n";
                            out << "Q = " << iodetail::grid_str(*cert.separating) << "\n";
                            break;
                        case PolarizabilityCertificate::Verdict::unknown:
                            out << doc.name << ": polarizable unknown (" << cert.note << ")\n";
                            any_unknown = true;
                            break;
                    }
                }
                return any_unknown ? 2 : 0;
            }
            return clidetail::usage(err);
        }

        if (command == "dual") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            if (docs.real.empty()) throw error("dual needs lattice documents");
            bool first = true;
            for (const LatticeDocument& doc : docs.real) {
                DualResult res = dual_lattice(doc.lattice);
                clidetail::emit_blocks_start(out, first);
                emit_document(out, LatticeDocument{doc.name + ".dual", res.lattice});
            }
            return 0;
        }

        if (command == "isogeny") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            if (docs.real.size() != 2) throw error("isogeny needs exactly two lattice documents");
            IsogenyDecision d = decide_imaginary_isogeny(docs.real[0].lattice,
                                                         docs.real[1].lattice, opt.budget);
            switch (d.verdict) {
                case IsogenyDecision::Verdict::yes:
                    out << "isogenous: yes\n";
                    out << "U = " << iodetail::int_grid_str(*d.witness) << "\n";
                    return 0;
                case IsogenyDecision::Verdict::no:
                    out << "isogenous: no ("
                        << (d.reason == IsogenyDecision::NoReason::irrational_ratio
                                ? "irrational-ratio"
                                : "trivial-solution-space")
                        << ")\n";
                    if (!d.note.empty()) out << "note: " << d.note << "\n";
                    return 0;
                case IsogenyDecision::Verdict::unknown:
                    out << "isogenous: unknown\n";
                    if (!d.note.empty()) out << "note: " << d.note << "\n";
                    return 2;
            }
            return 0;
        }

        if (command == "normal-form") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            if (docs.real.empty()) throw error("normal-form needs lattice documents");
            for (const LatticeDocument& doc : docs.real) {
                NormalForm1D nf = normal_form_1d(doc.lattice);
                out << doc.name << ": "
                    << (nf.kind == LatticeShape1D::rectangular ? "rectangular" : "diamond")
                    << ", alpha = " << nf.alpha.str() << "\n";
            }
            return 0;
        }

        if (command == "classify-corpus") {
            ParsedDocuments docs = clidetail::read_documents(rest, in);
            if (docs.real.empty()) throw error("classify-corpus needs lattice documents");
            std::vector<RealLattice> corpus;
            corpus.reserve(docs.real.size());
            for (const LatticeDocument& doc : docs.real) corpus.push_back(doc.lattice);
            CorpusClassification cls = classify_corpus(corpus, opt.budget);
            out << "documents: " << docs.real.size() << "\n";
            out << "classes: " << cls.classes.size() << "\n";
            for (const auto& c : cls.classes) {
                out << "class";
                for (int idx : c) out << " " << docs.real[static_cast<size_t>(idx)].name;
                out << "\n";
            }
            out << "unknown-pairs: " << cls.unknown_pairs.size() << "\n";
            for (auto [i, j] : cls.unknown_pairs) {
                out << "unknown " << docs.real[static_cast<size_t>(i)].name << " "
                    << docs.real[static_cast<size_t>(j)].name << "\n";
            }
            out << "note: classes merge only certified equivalences; the partition refines the "
                   "true classification\n";
            if (!opt.manifest_path.empty()) {
                CorpusManifest m = manifest_from_classification(opt.seed, opt.budget,
                                                                std::move(docs.real), cls);
                std::ofstream f(opt.manifest_path);
                if (!f) throw error("cannot open " + opt.manifest_path);
                write_manifest(f, m);
            }
            return cls.unknown_pairs.empty() ? 0 : 2;
        }

        if (command == "gen-random") {
            if (!rest.empty()) return clidetail::usage(err);
            if (opt.g < 1 || opt.g > 6) {
                err << "gen-random supports 1 <= g <= 6\n";
                return 3;
            }
            std::vector<RealLattice> lattices = gen_random(opt.g, opt.field, opt.seed, opt.count);
            bool first = true;
            for (size_t k = 0; k < lattices.size(); ++k) {
                clidetail::emit_blocks_start(out, first);
                emit_document(out, LatticeDocument{"rnd" + std::to_string(k), lattices[k]});
            }
            return 0;
        }

        err << "unknown command " << command << "\n";
        return clidetail::usage(err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::istringstream empty;
    return run_cli(args, empty, out, err);
}

}  // namespace reallat
