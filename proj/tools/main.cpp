#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eqca/run.hpp"

namespace {

using eqca::CellCoord;
using eqca::Int;
using eqca::Nat;

CellCoord parse_coord_list(const std::string& s) {
    std::vector<Int> comps;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty coordinate component");
            comps.emplace_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return CellCoord(std::move(comps));
}

int guarded(const std::function<std::string()>& body) {
    try {
        std::cout << body();
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classical and quantum cellular-automaton engine"};
    app.require_subcommand(1);

    eqca::run::RunManifest manifest;
    eqca::run::GalleryParams gallery;
    std::string steps_str = "0";
    std::string measure_str;

    auto add_common = [&](CLI::App* cmd, bool needs_state) {
        cmd->add_option("--rule", manifest.rule_path, "rule JSON file")->required();
        if (needs_state)
            cmd->add_option("--state", manifest.state_path, "initial state JSON file")
                ->required();
        cmd->add_option("--steps", steps_str, "number of steps (arbitrary precision)");
        cmd->add_option("--out", manifest.output_path, "output trace file");
        cmd->add_option("--field", manifest.field_path,
                        "field JSON file (default: the eighth cyclotomic field)");
        cmd->add_option("--index-digit-cap", manifest.index_digit_cap,
                        "inline indices up to this many decimal digits");
    };

    auto* classical = app.add_subcommand("classical-run", "evolve a classical rule");
    add_common(classical, true);

    auto* quantum = app.add_subcommand("quantum-run", "evolve a quantum rule");
    add_common(quantum, true);
    quantum->add_option("--measure", measure_str,
                        "sample this cell (comma-separated coordinates) after the run");
    quantum->add_option("--samples", manifest.samples, "measurement sample count");
    quantum->add_option("--seed", manifest.seed, "measurement seed");

    auto* verify = app.add_subcommand("verify-rule", "validate a rule file");
    verify->add_option("--rule", manifest.rule_path, "rule JSON file")->required();
    verify->add_option("--field", manifest.field_path, "field JSON file");
    verify->add_option("--out", manifest.output_path, "output report file");

    auto* gal = app.add_subcommand("gallery", "run a necessity demo");
    gal->add_option("demo", gallery.demo,
                    "space-inhomogeneous | time-inhomogeneous | unbounded-density | "
                    "unbounded-velocity | nonquiescent-input | scalar-extraction | "
                    "stochastic-correlation")
        ->required();
    gal->add_option("--oracle", gallery.oracle_kind,
                    "primality | parity | all-zeros | all-ones | bits:<01...>");
    gal->add_option("--max-index", gallery.max_index, "highest oracle index to recover");
    gal->add_option("--index", gallery.index, "oracle index (velocity/correlation)");
    gal->add_option("--width", gallery.width, "input width (nonquiescent-input)");
    gal->add_option("--demo-steps", gallery.steps, "step count (time demo)");
    gal->add_option("--x", gallery.head_bit, "segment head bit (velocity demo)");
    gal->add_option("--u", gallery.amplitude, "amplitude (scalar-extraction)");
    gal->add_option("--samples", gallery.samples, "sample count");
    gal->add_option("--seed", gallery.seed, "sampling seed");
    gal->add_flag("--restored", gallery.restored,
                  "run with the dropped hypothesis restored (control run)");
    gal->add_option("--out", gallery.output_path, "output file");
    gal->add_option("--field", gallery.field_path, "field JSON file");

    std::string diff_a, diff_b;
    auto* diff = app.add_subcommand("trace-diff", "compare two trace files exactly");
    diff->add_option("a", diff_a, "first trace")->required();
    diff->add_option("b", diff_b, "second trace")->required();
    diff->add_option("--out", manifest.output_path, "output report file");

    std::string codec_kind;
    std::vector<std::string> codec_args;
    std::size_t dim = 3;
    auto* encode = app.add_subcommand("encode", "pairing / sequence / coordinate encoding");
    encode->add_option("kind", codec_kind, "pair | seq | coord")->required();
    encode->add_option("values", codec_args, "operands");
    auto* decode = app.add_subcommand("decode", "inverse encodings");
    decode->add_option("kind", codec_kind, "pair | seq | coord")->required();
    decode->add_option("values", codec_args, "encoded value");
    decode->add_option("--dim", dim, "lattice dimension for coord decoding");

    CLI11_PARSE(app, argc, argv);

    if (classical->parsed() || quantum->parsed()) {
        try {
            manifest.steps = Nat(steps_str);
            eqca::require_nat(manifest.steps, "--steps");
        } catch (const std::exception&) {
            std::cerr << "error: --steps must be a non-negative integer\n";
            return 1;
        }
    }

    if (classical->parsed()) {
        manifest.mode = "classical";
        return guarded([&] { return eqca::run::run_classical(manifest); });
    }
    if (quantum->parsed()) {
        manifest.mode = "quantum";
        if (!measure_str.empty()) manifest.measure_at = parse_coord_list(measure_str);
        return guarded([&] { return eqca::run::run_quantum(manifest); });
    }
    if (verify->parsed()) {
        manifest.mode = "verify";
        std::string text;
        int rc = guarded([&] { return text = eqca::run::run_verify(manifest); });
        if (rc != 0) return rc;
        // Nonzero exit when any check failed, so scripts can gate on it.
        return eqca::run::json::parse(text)["pass"].get<bool>() ? 0 : 1;
    }
    if (gal->parsed()) return guarded([&] { return eqca::run::run_gallery(gallery); });
    if (diff->parsed()) {
        std::string text;
        int rc = guarded([&] {
            return text = eqca::run::run_trace_diff(diff_a, diff_b, manifest.output_path);
        });
        if (rc != 0) return rc;
        return eqca::run::json::parse(text)["identical"].get<bool>() ? 0 : 1;
    }
    if (encode->parsed()) {
        return guarded([&]() -> std::string {
            using namespace eqca::codec;
            eqca::run::json out;
            if (codec_kind == "pair") {
                if (codec_args.size() != 2)
                    throw std::invalid_argument("encode pair needs two naturals");
                out = {{"op", "pair"}, {"result", pair(Nat(codec_args[0]), Nat(codec_args[1])).get_str()}};
            } else if (codec_kind == "seq") {
                std::vector<Nat> js;
                for (const auto& s : codec_args) js.emplace_back(s);
                out = {{"op", "seq"}, {"result", seq_encode(js).get_str()}};
            } else if (codec_kind == "coord") {
                std::vector<Int> comps;
                for (const auto& s : codec_args) comps.emplace_back(s);
                out = {{"op", "coord"},
                       {"result", coord_index(CellCoord(std::move(comps))).get_str()}};
            } else {
                throw std::invalid_argument("encode kind must be pair, seq or coord");
            }
            return eqca::io::canonical_dump(out);
        });
    }
    if (decode->parsed()) {
        return guarded([&]() -> std::string {
            using namespace eqca::codec;
            if (codec_args.size() != 1)
                throw std::invalid_argument("decode needs exactly one encoded value");
            const Nat k(codec_args[0]);
            eqca::run::json out;
            if (codec_kind == "pair") {
                auto [n, p] = unpair(k);
                out = {{"op", "pair"}, {"result", {n.get_str(), p.get_str()}}};
            } else if (codec_kind == "seq") {
                eqca::run::json seq = eqca::run::json::array();
                for (const auto& j : seq_decode(k)) seq.push_back(j.get_str());
                out = {{"op", "seq"}, {"result", seq}};
            } else if (codec_kind == "coord") {
                out = {{"op", "coord"},
                       {"result", eqca::io::coord_to_json(coord_unindex(k, dim))}};
            } else {
                throw std::invalid_argument("decode kind must be pair, seq or coord");
            }
            return eqca::io::canonical_dump(out);
        });
    }
    return 0;
}
