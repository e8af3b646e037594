#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tpa/tpa.hpp"

using namespace tpa;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, failure = 1, invalid_input = 2, hypothesis = 3 };

struct Config {
    std::string quiver_path;
    std::string dim;
    long long truncate = -1;
    std::string layering;
    std::string rep_path;
    std::string json_path;
    std::string dot_dir;
    size_t trials = 3;
    uint64_t prime = default_prime;
    uint64_t seed = 20130501;
    size_t limit = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot read '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
}

Quiver load_quiver(const Config& c) {
    return parse_quiver(read_file(c.quiver_path));
}

DimVector load_dim(const Config& c, const Quiver& q) {
    if (c.dim.empty()) {
        throw input_error("--dim is required");
    }
    DimVector d = parse_dim_vector(c.dim);
    if (d.size() != q.vertex_count()) {
        throw input_error("--dim has " + std::to_string(d.size()) + " entries but the quiver has "
                          + std::to_string(q.vertex_count()) + " vertices");
    }
    return d;
}

size_t load_truncate(const Config& c) {
    if (c.truncate < 0) {
        throw input_error("--truncate L (paths of length L+1 vanish) is required and must be >= 0");
    }
    return size_t(c.truncate);
}

SemisimpleSequence load_layering(const Config& c, const Quiver& q) {
    if (c.layering.empty()) {
        throw input_error("--layering is required");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(c.layering);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("--layering is not valid JSON: ") + e.what());
    }
    SemisimpleSequence s = sequence_from_json(doc);
    if (s.width() != q.vertex_count()) {
        throw input_error("--layering layers must have one entry per vertex");
    }
    if (c.truncate >= 0 && size_t(c.truncate) + 1 != s.layer_count()) {
        throw input_error("--layering has " + std::to_string(s.layer_count()) + " layers but --truncate asks for "
                          + std::to_string(c.truncate + 1));
    }
    return s;
}

Representation load_rep(const Config& c, const Quiver& q) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(c.rep_path));
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("representation file: ") + e.what());
    }
    return representation_from_json(doc, q, c.prime);
}

void maybe_write_json(const Config& c, const ojson& doc) {
    if (!c.json_path.empty()) {
        write_file(c.json_path, doc.dump(2) + "\n");
    }
}

ojson vectors_to_json(const std::vector<DimVector>& vs) {
    ojson out = ojson::array();
    for (const auto& v : vs) {
        out.push_back(v.entries());
    }
    return out;
}

std::string simples(const DimVector& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            continue;
        }
        s += (s.empty() ? "" : " + ") + std::string("S") + std::to_string(i + 1);
        if (v[i] > 1) {
            s += "^" + std::to_string(v[i]);
        }
    }
    return s.empty() ? "0" : s;
}

std::string layering_text(const SemisimpleSequence& s) {
    std::string out = "(";
    size_t len = std::max<size_t>(s.clipped_length(), 1);
    for (size_t l = 0; l < len; ++l) {
        out += (l ? ", " : "") + simples(s[l]);
    }
    return out + ")";
}

void print_skeleton(const Skeleton& sk, const GenericPresentation& pres, const Quiver& q) {
    std::cout << "  skeleton:";
    for (const auto& p : sk.paths) {
        std::cout << " [" << path_string(q, p) << "]";
    }
    std::cout << "\n  relations:";
    if (pres.relations.empty()) {
        std::cout << " none";
    }
    std::cout << "\n";
    for (const auto& r : pres.relations) {
        std::cout << "    " << relation_string(q, r) << "\n";
    }
}

int run_classify(const Config& c) {
    Quiver q = load_quiver(c);
    DimVector d = load_dim(c, q);
    size_t L = load_truncate(c);
    ClassifyOptions options{c.trials, c.prime, c.seed};
    auto components = classify(q, d, L, options);

    std::cout << "d = " << d << ", L = " << L << " (paths of length " << L + 1 << " vanish)\n"
              << "seed " << c.seed << ", " << c.trials << " trial(s) over F_" << c.prime << "\n"
              << components.size() << " irreducible component" << (components.size() == 1 ? "" : "s") << "\n";
    ojson doc = ojson::array();
    for (size_t i = 0; i < components.size(); ++i) {
        const auto& comp = components[i];
        std::cout << "\n[" << i + 1 << "] rad " << layering_text(comp.rad) << "\n"
                  << "    soc " << layering_text(comp.soc) << "\n"
                  << "    C0 " << simples(comp.c0) << ", endo_dim " << comp.endo_dim
                  << (comp.generically_indecomposable ? " (generically indecomposable)" : "") << "\n";
        print_skeleton(comp.skeleton, comp.presentation, q);
        doc.push_back(component_to_json(comp, q));
        if (!c.dot_dir.empty()) {
            write_file(std::filesystem::path(c.dot_dir) / ("component_" + std::to_string(i + 1) + ".dot"),
                       skeleton_to_dot(comp.skeleton, q, L));
        }
    }
    if (!c.dot_dir.empty()) {
        write_file(std::filesystem::path(c.dot_dir) / "quiver.dot", quiver_to_dot(q));
    }
    maybe_write_json(c, doc);
    return ok;
}

int run_socle(const Config& c) {
    Quiver q = load_quiver(c);
    SemisimpleSequence s = load_layering(c, q);
    SocleWork w = c_layers(s, q);
    ojson doc;
    doc["socle_layering"] = sequence_to_json(generic_socle_layering(s, q));
    doc["generic_socle"] = generic_socle(s, q).entries();
    doc["c_layers"] = vectors_to_json(w.c);
    doc["partials"] = vectors_to_json(w.partials);
    std::cout << doc.dump(2) << "\n";
    maybe_write_json(c, doc);
    return ok;
}

int run_skeleton(const Config& c) {
    Quiver q = load_quiver(c);
    SemisimpleSequence s = load_layering(c, q);
    const size_t L = s.loewy_bound();
    std::optional<size_t> limit;
    if (c.limit > 0) {
        limit = c.limit;
    }
    auto found = skeleta(s, q, limit);
    ojson doc = ojson::array();
    std::cout << found.size() << (found.size() == 1 ? " skeleton" : " skeleta") << " for " << layering_text(s)
              << (limit ? " (limit " + std::to_string(*limit) + ")" : "") << "\n";
    for (size_t i = 0; i < found.size(); ++i) {
        auto pres = build_presentation(found[i], q, L);
        std::cout << "\n[" << i + 1 << "]\n";
        print_skeleton(found[i], pres, q);
        ojson paths = ojson::array();
        for (const auto& p : found[i].paths) {
            paths.push_back(path_string(q, p));
        }
        ojson critical = ojson::array();
        for (const auto& p : critical_paths(found[i], q, L)) {
            critical.push_back(path_string(q, p));
        }
        ojson entry;
        entry["skeleton"] = paths;
        entry["critical"] = critical;
        entry["presentation"] = ojson(presentation_to_json(pres, q));
        doc.push_back(entry);
        if (!c.dot_dir.empty()) {
            write_file(std::filesystem::path(c.dot_dir) / ("skeleton_" + std::to_string(i + 1) + ".dot"),
                       skeleton_to_dot(found[i], q, L));
        }
    }
    if (!c.dot_dir.empty()) {
        write_file(std::filesystem::path(c.dot_dir) / "quiver.dot", quiver_to_dot(q));
    }
    maybe_write_json(c, doc);
    return ok;
}

int run_endo(const Config& c) {
    Quiver q = load_quiver(c);
    ojson doc;
    if (!c.rep_path.empty()) {
        Representation m = load_rep(c, q);
        doc["endo_dim"] = endo_dim(m);
    } else {
        SemisimpleSequence s = load_layering(c, q);
        PrimeField field(c.prime);
        auto pres = build_presentation(first_skeleton(s, q), q, s.loewy_bound());
        auto rng = component_rng(c.seed, 0);
        size_t e = generic_endo_dim(pres, q, field, c.trials, rng);
        doc["layering"] = sequence_to_json(s);
        doc["endo_dim"] = e;
        doc["generically_indecomposable"] = e == 1;
        doc["seed"] = c.seed;
        doc["trials"] = c.trials;
        doc["prime"] = c.prime;
    }
    std::cout << doc.dump(2) << "\n";
    maybe_write_json(c, doc);
    return ok;
}

int run_hereditary(const Config& c) {
    Quiver q = load_quiver(c);
    DimVector d = load_dim(c, q);
    SemisimpleSequence s = hereditary_generic_layering(q, d);
    SemisimpleSequence star = generic_socle_layering(s, q);
    std::cout << "generic top " << d.str() << " -> " << generic_top(d, q) << "\n"
              << "radical layering " << layering_text(s) << "\n"
              << "socle layering " << layering_text(star) << "\n"
              << "C0 " << simples(c_layers(s, q).c[0]) << "\n";
    ojson doc;
    doc["generic_top"] = generic_top(d, q).entries();
    doc["rad"] = sequence_to_json(s);
    doc["soc"] = sequence_to_json(star);
    doc["c0"] = c_layers(s, q).c[0].entries();
    maybe_write_json(c, doc);
    return ok;
}

int run_oracle(const Config& c) {
    Quiver q = load_quiver(c);
    if (c.rep_path.empty()) {
        throw input_error("--rep is required");
    }
    size_t L = load_truncate(c);
    Representation m = load_rep(c, q);
    ojson doc;
    doc["rad"] = sequence_to_json(radical_layering(m, L));
    doc["soc"] = sequence_to_json(socle_layering(m, L));
    doc["endo_dim"] = endo_dim(m);
    std::cout << doc.dump(2) << "\n";
    maybe_write_json(c, doc);
    return ok;
}

int run_enumerate(const Config& c) {
    Quiver q = load_quiver(c);
    DimVector d = load_dim(c, q);
    size_t L = load_truncate(c);
    ojson doc = ojson::array();
    size_t count = 0;
    enumerate_realizable(q, d, L, [&](const SemisimpleSequence& s) {
        ++count;
        std::cout << layering_text(s) << "\n";
        if (!c.json_path.empty()) {
            doc.push_back(sequence_to_json(s));
        }
    });
    std::cout << count << " realizable sequence" << (count == 1 ? "" : "s") << "\n";
    maybe_write_json(c, doc);
    return ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Irreducible components and generic invariants for truncated path algebras"};
    app.require_subcommand(1);
    Config c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--quiver", c.quiver_path, "quiver JSON file")->required();
        sub->add_option("--json", c.json_path, "write machine-readable output here");
    };
    auto add_random = [&](CLI::App* sub) {
        sub->add_option("--trials", c.trials, "random instantiations per endo estimate")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--prime", c.prime, "field characteristic")->capture_default_str();
        sub->add_option("--seed", c.seed, "seed for all randomness")->capture_default_str();
    };

    auto classify_cmd = app.add_subcommand("classify", "list the irreducible components of Rep_d");
    add_common(classify_cmd);
    add_random(classify_cmd);
    classify_cmd->add_option("--dim", c.dim, "dimension vector, e.g. 1,1,1")->required();
    classify_cmd->add_option("--truncate", c.truncate, "L: paths of length L+1 vanish")->required();
    classify_cmd->add_option("--emit-dot", c.dot_dir, "directory for DOT drawings");

    auto socle_cmd = app.add_subcommand("socle", "generic socle data of a radical layering");
    add_common(socle_cmd);
    socle_cmd->add_option("--layering", c.layering, "JSON array of layers")->required();
    socle_cmd->add_option("--truncate", c.truncate, "L, checked against the layering");

    auto skeleton_cmd = app.add_subcommand("skeleton", "skeleta and generic presentations of a layering");
    add_common(skeleton_cmd);
    skeleton_cmd->add_option("--layering", c.layering, "JSON array of layers")->required();
    skeleton_cmd->add_option("--truncate", c.truncate, "L, checked against the layering");
    skeleton_cmd->add_option("--limit", c.limit, "maximum number of skeleta, 0 for all")->capture_default_str();
    skeleton_cmd->add_option("--emit-dot", c.dot_dir, "directory for DOT drawings");

    auto endo_cmd = app.add_subcommand("endo", "generic endomorphism dimension");
    add_common(endo_cmd);
    add_random(endo_cmd);
    auto endo_layering = endo_cmd->add_option("--layering", c.layering, "JSON array of layers");
    auto endo_rep = endo_cmd->add_option("--rep", c.rep_path, "representation JSON file instead of a layering");
    endo_layering->excludes(endo_rep);
    endo_cmd->add_option("--truncate", c.truncate, "L, checked against the layering");

    auto hereditary_cmd = app.add_subcommand("hereditary", "generic layerings of Rep_d(KQ)");
    add_common(hereditary_cmd);
    hereditary_cmd->add_option("--dim", c.dim, "dimension vector")->required();

    auto oracle_cmd = app.add_subcommand("oracle", "layerings and endo_dim of a concrete representation");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--rep", c.rep_path, "representation JSON file")->required();
    oracle_cmd->add_option("--truncate", c.truncate, "L: paths of length L+1 vanish")->required();
    oracle_cmd->add_option("--prime", c.prime, "field characteristic unless the file names one")
        ->capture_default_str();

    auto enumerate_cmd = app.add_subcommand("enumerate", "all realizable radical layerings");
    add_common(enumerate_cmd);
    enumerate_cmd->add_option("--dim", c.dim, "dimension vector")->required();
    enumerate_cmd->add_option("--truncate", c.truncate, "L: paths of length L+1 vanish")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (*classify_cmd) {
            return run_classify(c);
        }
        if (*socle_cmd) {
            return run_socle(c);
        }
        if (*skeleton_cmd) {
            return run_skeleton(c);
        }
        if (*endo_cmd) {
            if (c.layering.empty() && c.rep_path.empty()) {
                throw input_error("endo needs --layering or --rep");
            }
            return run_endo(c);
        }
        if (*hereditary_cmd) {
            return run_hereditary(c);
        }
        if (*oracle_cmd) {
            return run_oracle(c);
        }
        if (*enumerate_cmd) {
            return run_enumerate(c);
        }
    } catch (const hypothesis_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hypothesis;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}
