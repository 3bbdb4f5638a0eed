#include "eqca/run.hpp"

#include <cmath>

#include "eqca/gallery.hpp"

namespace eqca::run {

namespace {

const FieldSpec* load_field(const std::string& path, std::optional<FieldSpec>& storage) {
    if (path.empty()) return &FieldSpec::zeta8();
    storage.emplace(io::field_from_json(io::load_json_file(path)));
    return &*storage;
}

std::string finish(const json& j, const std::string& output_path) {
    std::string text = io::canonical_dump(j);
    if (!output_path.empty()) io::write_text_file(output_path, text);
    return text;
}

json index_json_impl(double est_bits, std::size_t digit_cap, const json& structured,
                     const std::function<Nat()>& compute) {
    // Indices up to about a million digits are always computed (so they can
    // be digested with an exact digit count); a larger inline cap raises the
    // willingness accordingly, up to the encoder's own size budget.
    const double budget_bits =
        std::min(codec::kMaxEncodedBits,
                 double(std::max<std::size_t>(digit_cap, 1000000)) * 3.33 * 1.25 + 256.0);
    if (est_bits > budget_bits)
        return json{{"omitted", true},
                    {"reason", "predicted size exceeds the digit cap"},
                    {"state_sha256", io::sha256_hex(io::canonical_dump(structured))}};
    const Nat idx = compute();
    const std::size_t digits = decimal_digits(idx);
    if (digits > digit_cap) {
        const std::string s = idx.get_str();
        return json{{"digits", digits}, {"sha256", io::sha256_hex(s)}};
    }
    return json(idx.get_str());
}

}  // namespace

json config_index_json(const Config& cfg, std::size_t digit_cap) {
    return index_json_impl(config_index_bits_estimate(cfg), digit_cap,
                           io::config_to_json(cfg), [&] { return config_index(cfg); });
}

json vector_index_json(const StateVector& v, std::size_t digit_cap) {
    return index_json_impl(vector_index_bits_estimate(v), digit_cap,
                           io::statevector_to_json(v), [&] { return vector_index(v); });
}

std::string run_classical(const RunManifest& m) {
    const ClassicalRule rule =
        io::classical_rule_from_json(io::load_json_file(m.rule_path));
    Config cfg = io::config_from_json(io::load_json_file(m.state_path));

    json steps = json::array();
    Nat t = 0;
    while (true) {
        steps.push_back(json{{"config", io::config_to_json(cfg)},
                             {"index", config_index_json(cfg, m.index_digit_cap)}});
        if (t == m.steps) break;
        cfg = step(cfg, rule);
        t += 1;
    }
    json out{{"mode", "classical"},
             {"rule", io::classical_rule_to_json(rule)},
             {"steps", steps}};
    return finish(out, m.output_path);
}

std::string run_quantum(const RunManifest& m) {
    std::optional<FieldSpec> field_storage;
    const FieldSpec* spec = load_field(m.field_path, field_storage);
    const QcaRule rule = io::qca_rule_from_json(io::load_json_file(m.rule_path), spec);
    const StateVector initial =
        io::statevector_from_json(io::load_json_file(m.state_path), spec);
    DoubledState psi = embed_primary(initial, rule.n());

    json steps = json::array();
    Nat t = 0;
    while (true) {
        const StateVector primary = project_primary(psi);
        steps.push_back(json{{"state", io::statevector_to_json(primary)},
                             {"vector_index", vector_index_json(primary, m.index_digit_cap)},
                             {"norm", io::scalar_to_json(inner(primary, primary))}});
        if (t == m.steps) break;
        psi = qca_step(psi, rule);
        t += 1;
    }
    json out{{"mode", "quantum"},
             {"field", io::field_to_json(*spec)},
             {"rule", io::qca_rule_to_json(rule)},
             {"steps", steps}};
    if (m.measure_at) {
        const auto histogram = measure_cell(psi, *m.measure_at, m.seed, m.samples);
        json h = json::object();
        for (const auto& [sym, count] : histogram) h[std::to_string(sym)] = count;
        out["measurement"] = json{{"cell", io::coord_to_json(*m.measure_at)},
                                  {"samples", m.samples},
                                  {"seed", m.seed},
                                  {"histogram", h}};
    }
    return finish(out, m.output_path);
}

std::string run_verify(const RunManifest& m) {
    const json raw = io::load_json_file(m.rule_path);
    json out;
    if (raw.contains("chi")) {
        out["rule_kind"] = "classical";
        json checks;
        bool quiescent = true, total = true, in_range = true;
        try {
            const ClassicalRule rule = io::classical_rule_from_json(raw);
            (void)rule;
        } catch (const std::invalid_argument& e) {
            const std::string msg = e.what();
            if (msg.find("quiescence") != std::string::npos) quiescent = false;
            else if (msg.find("out of range") != std::string::npos) in_range = false;
            else total = false;
        }
        checks["quiescence"] = quiescent;
        checks["table_total"] = total;
        checks["entries_in_range"] = in_range;
        out["checks"] = checks;
        out["pass"] = quiescent && total && in_range;
    } else if (raw.contains("K")) {
        std::optional<FieldSpec> field_storage;
        const FieldSpec* spec = load_field(m.field_path, field_storage);
        Neighborhood nb = io::neighborhood_from_json(raw.at("offsets"));
        const std::size_t len = raw.at("K").size();
        const auto dim = std::size_t(std::llround(std::sqrt(double(len))));
        if (dim * dim != len) throw std::invalid_argument("K is not square");
        int n = raw.contains("n")
                    ? raw["n"].get<int>()
                    : std::max(1, int(std::llround(std::pow(double(dim),
                                                            1.0 / double(nb.r() + 1)))));
        const ScalarMatrix k = io::matrix_from_json(raw["K"], spec, dim, dim);
        const RuleCheck rc = verify_qca_rule(n, nb, k);
        json commutation = json::array();
        for (const auto& [off, ok] : rc.commutation)
            commutation.push_back(json{{"offset", io::coord_to_json(off)}, {"ok", ok}});
        out["rule_kind"] = "quantum";
        out["checks"] = json{{"unitarity", rc.unitary},
                             {"quiescence", rc.quiescent},
                             {"commutation", commutation}};
        out["pass"] = rc.ok();
    } else {
        throw std::invalid_argument("rule file has neither chi (classical) nor K (quantum)");
    }
    return finish(out, m.output_path);
}

std::string run_gallery(const GalleryParams& p) {
    using namespace eqca::gallery;
    Oracle oracle = Oracle::primality();
    if (p.oracle_kind == "primality") oracle = Oracle::primality();
    else if (p.oracle_kind == "parity") oracle = Oracle::parity();
    else if (p.oracle_kind == "all-zeros") oracle = Oracle::all_zeros();
    else if (p.oracle_kind == "all-ones") oracle = Oracle::all_ones();
    else if (p.oracle_kind.rfind("bits:", 0) == 0)
        oracle = Oracle::bitstring(p.oracle_kind.substr(5));
    else throw std::invalid_argument("unknown oracle: " + p.oracle_kind);

    auto result_json = [&](const DemoResult& r) {
        json bits = json::array();
        for (const auto& b : r.recovered)
            bits.push_back(json{{"index", b.index}, {"bit", b.bit}, {"method", b.method}});
        json out{{"demo", r.demo},
                 {"oracle", oracle.name},
                 {"recovered_bits", bits},
                 {"matches_oracle", r.matches_oracle},
                 {"hypothesis_restored", p.restored}};
        for (const auto& [k, v] : r.extra) out[k] = v;
        return out;
    };

    json out;
    if (p.demo == "space-inhomogeneous") {
        std::vector<std::uint64_t> indices;
        for (std::uint64_t i = 0; i <= p.max_index; ++i) indices.push_back(i);
        out = result_json(demo_space_inhomogeneous(oracle, indices, p.restored));
    } else if (p.demo == "time-inhomogeneous") {
        out = result_json(demo_time_inhomogeneous(oracle, p.steps, p.restored));
    } else if (p.demo == "unbounded-density") {
        out = result_json(demo_unbounded_density(oracle, p.max_index, p.restored));
    } else if (p.demo == "unbounded-velocity") {
        out = result_json(demo_unbounded_velocity(oracle, p.index, p.head_bit, p.restored));
    } else if (p.demo == "nonquiescent-input") {
        out = result_json(demo_nonquiescent_input(oracle, p.width, p.restored));
    } else if (p.demo == "stochastic-correlation") {
        out = result_json(
            demo_stochastic_correlation(oracle, p.index, p.samples, p.seed, p.restored));
    } else if (p.demo == "scalar-extraction") {
        std::optional<FieldSpec> field_storage;
        const FieldSpec* spec = load_field(p.field_path, field_storage);
        const Scalar u = spec->from_rational(parse_rat(p.amplitude));
        const auto r = demo_scalar_extraction(u, p.samples, p.seed);
        out = json{{"demo", "scalar-extraction"},
                   {"exact_p0", format_rat(r.exact_p0)},
                   {"estimate", format_rat(r.estimate)},
                   {"samples", r.samples},
                   {"seed", r.seed}};
    } else {
        throw std::invalid_argument("unknown demo: " + p.demo);
    }
    return finish(out, p.output_path);
}

json trace_diff(const json& a, const json& b) {
    json report{{"identical", true}};
    auto diverge = [&](const std::string& where, const json& detail) {
        if (report["identical"].get<bool>()) {
            report["identical"] = false;
            report["first_divergence"] = detail.is_null() ? json{{"at", where}}
                                                          : json{{"at", where}, {"detail", detail}};
        }
    };

    for (const auto& key : {"mode", "rule", "field"}) {
        const bool in_a = a.contains(key), in_b = b.contains(key);
        if (in_a != in_b || (in_a && a[key] != b[key])) {
            diverge(std::string("header:") + key, json());
            break;
        }
    }

    const json empty = json::array();
    const json& sa = a.contains("steps") ? a["steps"] : empty;
    const json& sb = b.contains("steps") ? b["steps"] : empty;
    report["steps_a"] = sa.size();
    report["steps_b"] = sb.size();
    report["length_mismatch"] = sa.size() != sb.size();
    const std::size_t common = std::min(sa.size(), sb.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (sa[i] == sb[i]) continue;
        std::string field = "step";
        for (const auto& [k, v] : sa[i].items())
            if (!sb[i].contains(k) || sb[i][k] != v) {
                field = k;
                break;
            }
        diverge("step", json{{"step", i}, {"field", field}});
        break;
    }
    if (sa.size() != sb.size()) report["identical"] = false;
    return report;
}

std::string run_trace_diff(const std::string& path_a, const std::string& path_b,
                           const std::string& output_path) {
    const json report = trace_diff(io::load_json_file(path_a), io::load_json_file(path_b));
    return finish(report, output_path);
}

}  // namespace eqca::run
