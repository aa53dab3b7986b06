// Command-line front end: Gray map evaluation, property verification, code
// operations and fixture access. Exit codes: 0 success or verdict true,
// 1 verdict false, 2 usage or domain error, 3 enumeration cap exceeded.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ringcode/ringcode.hpp>

using nlohmann::ordered_json;
using namespace ringcode;

namespace {

struct RunContext {
    bool json = false;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::string command;
    ordered_json inputs = ordered_json::object();
    std::vector<std::string> notes;
    // matrix payloads keep their notes on stdout so the output stays a valid
    // matrix file; scalar payloads push notes to stderr to keep stdout bare
    bool notes_on_stdout = false;
    ordered_json result = ordered_json::object();
    std::optional<bool> verdict;
    std::string text;
};

int finish(RunContext& ctx, int exit_status) {
    if (ctx.json) {
        ordered_json rep;
        rep["tool"] = "ringcode";
        rep["command"] = ctx.command;
        rep["inputs"] = ctx.inputs;
        rep["input_digest"] = "fnv1a:" + fnv1a_digest(ctx.inputs.dump());
        rep["notes"] = ctx.notes;
        rep["result"] = ctx.result;
        if (ctx.verdict) rep["verdict"] = *ctx.verdict;
        rep["exit_status"] = exit_status;
        std::cout << rep.dump(2) << "\n";
    } else {
        for (const auto& n : ctx.notes) (ctx.notes_on_stdout ? std::cout : std::cerr) << "# " << n << "\n";
        std::cout << ctx.text;
    }
    return exit_status;
}

ordered_json matrix_json(const RingMatrix& M) {
    ordered_json j;
    j["ring"] = ordered_json{{"p", M.spec().p()}, {"s", M.spec().s()}};
    j["n"] = M.cols();
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < M.row_count(); ++i) {
        j["rows"].push_back(M.row(i).entries());
    }
    return j;
}

std::string matrix_text(const RingMatrix& M) { return serialize(MatrixFile{{}, M}); }

MatrixFile load_matrix_arg(const std::string& arg, RunContext& ctx) {
    std::string raw;
    if (is_fixture_name(arg)) {
        NamedFixture fx = get_fixture(arg);
        if (!fx.matrix) throw std::invalid_argument("fixture " + arg + " is a map table, not a matrix");
        raw = fx.raw;
        ctx.inputs["matrix"] = arg;
        ctx.inputs["matrix_digest"] = "fnv1a:" + fnv1a_digest(raw);
        for (const auto& n : fx.matrix->notes) ctx.notes.push_back(n);
        return std::move(*fx.matrix);
    }
    raw = read_text_file(arg);
    MatrixFile mf = parse_matrix_file(raw);
    ctx.inputs["matrix"] = arg;
    ctx.inputs["matrix_digest"] = "fnv1a:" + fnv1a_digest(raw);
    for (const auto& n : mf.notes) ctx.notes.push_back(n);
    return mf;
}

ExtensionLayout parse_layout(const std::string& name) {
    if (name == "blockwise") return ExtensionLayout::Blockwise;
    if (name == "split") return ExtensionLayout::Split;
    throw std::invalid_argument("layout must be 'blockwise' or 'split', got '" + name + "'");
}

std::string join_entries(const RingVector& v) {
    std::string line;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) line += ' ';
        line += std::to_string(v[i]);
    }
    return line;
}

struct MapOptions {
    bool eta = false, xi = false, carlet = false, compose = false, vega = false;
    unsigned s = 0;
    std::uint64_t p = 2;
    std::optional<std::uint64_t> value;
    std::string matrix_arg;
    bool table = false;
    std::string layout = "blockwise";
};

int run_map(const MapOptions& opt, RunContext& ctx) {
    ctx.command = "map";
    const int variants = opt.eta + opt.xi + opt.carlet + opt.compose + opt.vega;
    if (variants != 1) {
        throw std::invalid_argument("choose exactly one of --eta, --xi, --carlet, --compose, --vega");
    }
    const int sources = (opt.value.has_value() ? 1 : 0) + (!opt.matrix_arg.empty() ? 1 : 0) + (opt.table ? 1 : 0);
    if (sources != 1) {
        throw std::invalid_argument("choose exactly one input: --value, --matrix or --table");
    }

    const char* variant_name = opt.eta      ? "eta"
                               : opt.xi     ? "xi"
                               : opt.carlet ? "carlet"
                               : opt.compose ? "compose"
                                            : "vega";
    ctx.inputs["variant"] = variant_name;
    ctx.inputs["s"] = opt.s;
    if (opt.carlet) ctx.inputs["p"] = opt.p;

    if (opt.eta || opt.xi) {
        ModularGrayMap map = opt.eta ? ModularGrayMap::eta(opt.s) : ModularGrayMap::xi(opt.s);
        if (opt.value) {
            ctx.inputs["value"] = *opt.value;
            auto [a, b] = map.apply(*opt.value);
            ctx.result["image"] = {a, b};
            ctx.text = std::to_string(a) + " " + std::to_string(b) + "\n";
            return finish(ctx, 0);
        }
        if (opt.table) {
            GrayTableFile tf{{}, variant_name, opt.s, map.table()};
            ctx.result["table"] = ordered_json::array();
            for (const auto& [a, b] : tf.entries) ctx.result["table"].push_back({a, b});
            ctx.text = serialize(tf);
            return finish(ctx, 0);
        }
        ExtensionLayout layout = parse_layout(opt.layout);
        ctx.inputs["layout"] = opt.layout;
        ctx.notes_on_stdout = true;
        MatrixFile mf = load_matrix_arg(opt.matrix_arg, ctx);
        require_same_spec(map.domain(), mf.matrix.spec(), "map --matrix");
        RingMatrix image = map_generator_rows(map, layout, LinearCode(std::move(mf.matrix)));
        ctx.result = matrix_json(image);
        ctx.text = matrix_text(image);
        return finish(ctx, 0);
    }

    if (!opt.matrix_arg.empty()) {
        throw std::invalid_argument("--matrix applies only to --eta and --xi");
    }

    auto apply_one = [&](std::uint64_t u) -> RingVector {
        if (opt.carlet) return CarletMap(opt.p, opt.s).apply(u);
        if (opt.compose) return compose_modular(opt.s, u);
        return vega_map(opt.s, u);
    };

    if (opt.value) {
        ctx.inputs["value"] = *opt.value;
        RingVector img = apply_one(*opt.value);
        ctx.result["image"] = img.entries();
        ctx.text = join_entries(img) + "\n";
        return finish(ctx, 0);
    }

    const std::uint64_t domain = opt.carlet ? RingSpec(opt.p, opt.s).modulus() : (std::uint64_t{1} << opt.s);
    ctx.result["table"] = ordered_json::array();
    std::string text;
    for (std::uint64_t u = 0; u < domain; ++u) {
        RingVector img = apply_one(u);
        ctx.result["table"].push_back(img.entries());
        text += std::to_string(u) + " " + join_entries(img) + "\n";
    }
    ctx.text = std::move(text);
    return finish(ctx, 0);
}

int run_verify_isometry(bool use_xi, unsigned s, const std::string& source_kind, const std::string& image_kind,
                        std::size_t n, const std::string& layout_name, RunContext& ctx) {
    ctx.command = "verify isometry";
    ctx.inputs["variant"] = use_xi ? "xi" : "eta";
    ctx.inputs["s"] = s;
    ctx.inputs["source_weight"] = source_kind;
    ctx.inputs["image_weight"] = image_kind;
    ctx.inputs["n"] = n;
    ctx.inputs["layout"] = layout_name;

    ModularGrayMap map = use_xi ? ModularGrayMap::xi(s) : ModularGrayMap::eta(s);
    IsometryReport report = verify_isometry(map, parse_layout(layout_name), parse_weight_kind(source_kind),
                                            parse_weight_kind(image_kind), n, ctx.cap);

    ctx.result["pairs_checked"] = report.pairs_checked;
    ctx.result["violation_count"] = report.violations.size();
    ctx.result["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
        ctx.result["violations"].push_back(ordered_json{{"u", v.u.entries()},
                                                        {"v", v.v.entries()},
                                                        {"source_distance", v.source_distance.to_string()},
                                                        {"image_distance", v.image_distance.to_string()}});
    }
    ctx.verdict = report.isometric();

    std::string text = std::to_string(report.pairs_checked) + " pairs, " +
                       std::to_string(report.violations.size()) + " violations\n";
    std::size_t shown = 0;
    for (const auto& v : report.violations) {
        if (shown == 10) {
            text += "... and " + std::to_string(report.violations.size() - shown) + " more\n";
            break;
        }
        text += "violation: u=(" + join_entries(v.u) + ") v=(" + join_entries(v.v) + ") source=" +
                v.source_distance.to_string() + " image=" + v.image_distance.to_string() + "\n";
        ++shown;
    }
    ctx.text = std::move(text);
    return finish(ctx, report.isometric() ? 0 : 1);
}

int run_verify_composition(unsigned s, RunContext& ctx) {
    ctx.command = "verify composition";
    ctx.inputs["s"] = s;
    CompositionReport report = verify_composition_theorem(s);
    const char* match = report.match == CompositionMatch::Exact             ? "exact"
                        : report.match == CompositionMatch::PermutationOnly ? "permutation-only"
                                                                            : "unequal";
    ctx.result["inputs_checked"] = report.inputs_checked;
    ctx.result["match"] = match;
    if (report.match == CompositionMatch::PermutationOnly) ctx.result["permutation"] = report.permutation;
    ctx.verdict = report.match == CompositionMatch::Exact;

    std::string text;
    if (report.match == CompositionMatch::Exact) {
        text = "exact match under default point order\n";
    } else if (report.match == CompositionMatch::PermutationOnly) {
        text = "match after reordering evaluation points:";
        for (auto c : report.permutation) text += " " + std::to_string(c);
        text += "\n";
    } else {
        text = "mismatch: the staged map differs from the direct map on at least one input\n";
    }
    ctx.text = std::move(text);
    return finish(ctx, *ctx.verdict ? 0 : 1);
}

int run_verify_rm_image(unsigned s, RunContext& ctx) {
    ctx.command = "verify rm-image";
    ctx.inputs["s"] = s;
    const bool holds = image_is_rm2(s);
    ctx.result["holds"] = holds;
    ctx.verdict = holds;
    ctx.text = std::string(holds ? "true" : "false") + "\n";
    return finish(ctx, holds ? 0 : 1);
}

int run_verify_basis_independence(const std::string& matrix_arg, const std::string& layout_name, RunContext& ctx) {
    ctx.command = "verify basis-independence";
    ctx.inputs["layout"] = layout_name;
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    const bool independent =
        verify_mapped_basis_independence(LinearCode(std::move(mf.matrix)), parse_layout(layout_name), ctx.cap);
    ctx.result["independent"] = independent;
    ctx.verdict = independent;
    ctx.text = std::string(independent ? "true" : "false") + "\n";
    return finish(ctx, independent ? 0 : 1);
}

int run_code_standard_form(const std::string& matrix_arg, RunContext& ctx) {
    ctx.command = "code standard-form";
    ctx.notes_on_stdout = true;
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    StandardForm sf = standard_form(LinearCode(std::move(mf.matrix)));

    ctx.result["profile"] = sf.profile;
    ctx.result["permutation"] = sf.column_permutation;
    ctx.result["matrix"] = matrix_json(sf.matrix);

    std::string profile_line = "profile:";
    for (auto k : sf.profile) profile_line += " " + std::to_string(k);
    std::string perm_line = "permutation:";
    for (auto c : sf.column_permutation) perm_line += " " + std::to_string(c);
    ctx.notes.push_back(profile_line);
    ctx.notes.push_back(perm_line);
    ctx.text = matrix_text(sf.matrix);
    return finish(ctx, 0);
}

int run_code_dual(const std::string& matrix_arg, RunContext& ctx) {
    ctx.command = "code dual";
    ctx.notes_on_stdout = true;
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    LinearCode d = dual(LinearCode(std::move(mf.matrix)));
    ctx.result = matrix_json(d.generators());
    ctx.text = matrix_text(d.generators());
    return finish(ctx, 0);
}

int run_code_enumerate(const std::string& matrix_arg, RunContext& ctx) {
    ctx.command = "code enumerate";
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    std::vector<RingVector> words = enumerate_codewords(LinearCode(std::move(mf.matrix)), ctx.cap);
    std::sort(words.begin(), words.end());

    ctx.result["count"] = words.size();
    ctx.result["words"] = ordered_json::array();
    std::string text;
    for (const auto& w : words) {
        ctx.result["words"].push_back(w.entries());
        text += join_entries(w) + "\n";
    }
    ctx.text = std::move(text);
    return finish(ctx, 0);
}

int run_code_min_distance(const std::string& matrix_arg, const std::string& kind_name, RunContext& ctx) {
    ctx.command = "code min-distance";
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    std::vector<RingVector> words = enumerate_codewords(LinearCode(std::move(mf.matrix)), ctx.cap);

    std::vector<WeightKind> kinds;
    if (kind_name.empty()) {
        kinds = {WeightKind::Hamming, WeightKind::Lee, WeightKind::Euclidean, WeightKind::ChineseEuclidean,
                 WeightKind::Homogeneous};
    } else {
        ctx.inputs["weight"] = kind_name;
        kinds = {parse_weight_kind(kind_name)};
    }

    std::string text;
    for (WeightKind kind : kinds) {
        WeightValue v = min_weight(words, kind);
        if (v.is_exact()) {
            ctx.result[weight_kind_name(kind)] = v.integer_value();
        } else {
            ctx.result[weight_kind_name(kind)] = v.as_double();
        }
        text += std::string(weight_kind_name(kind)) + ": " + v.to_string() + "\n";
    }
    ctx.text = std::move(text);
    return finish(ctx, 0);
}

int run_code_cardinality(const std::string& matrix_arg, RunContext& ctx) {
    ctx.command = "code cardinality";
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    StandardForm sf = standard_form(LinearCode(std::move(mf.matrix)));
    const std::uint64_t card = cardinality(sf);
    ctx.result["cardinality"] = card;
    ctx.result["p_dimension"] = p_dimension(sf);
    ctx.text = std::to_string(card) + "\n";
    return finish(ctx, 0);
}

int run_code_self_orthogonal(const std::string& matrix_arg, RunContext& ctx) {
    ctx.command = "code self-orthogonal";
    MatrixFile mf = load_matrix_arg(matrix_arg, ctx);
    LinearCode code(std::move(mf.matrix));
    const bool ortho = is_self_orthogonal(code);
    const bool dual_eq = ortho && is_self_dual(code);
    ctx.result["self_orthogonal"] = ortho;
    ctx.result["self_dual"] = dual_eq;
    ctx.verdict = ortho;
    ctx.text = std::string("self-orthogonal: ") + (ortho ? "true" : "false") + "\n" +
               "self-dual: " + (dual_eq ? "true" : "false") + "\n";
    return finish(ctx, ortho ? 0 : 1);
}

int run_fixtures(const std::string& action, const std::string& name, RunContext& ctx) {
    ctx.command = "fixtures " + action;
    if (action == "list") {
        ctx.result["fixtures"] = ordered_json::array();
        std::string text;
        for (const auto& f : fixture_registry()) {
            ctx.result["fixtures"].push_back(ordered_json{
                {"name", f.name}, {"kind", fixture_kind_name(f.kind)}, {"provenance", f.provenance}});
            text += f.name + " (" + fixture_kind_name(f.kind) + "): " + f.provenance + "\n";
        }
        ctx.text = std::move(text);
        return finish(ctx, 0);
    }
    if (action == "path") {
        ctx.result["path"] = fixture_directory();
        ctx.text = fixture_directory() + "\n";
        return finish(ctx, 0);
    }
    ctx.inputs["name"] = name;
    NamedFixture fx = get_fixture(name);
    ctx.result["name"] = fx.info.name;
    ctx.result["kind"] = fixture_kind_name(fx.info.kind);
    ctx.result["provenance"] = fx.info.provenance;
    ctx.result["content"] = fx.raw;
    ctx.text = fx.raw;
    return finish(ctx, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes over Z_{p^s} and their Gray maps"};
    app.require_subcommand(1);

    bool json_flag = false;
    app.add_flag("--json", json_flag, "emit a JSON run report instead of plain text");
    std::uint64_t cap_flag = 0;
    auto* cap_opt = app.add_option("--cap", cap_flag, "enumeration cap (default 2^26, or $RINGCODE_CAP)");
    bool force_flag = false;
    app.add_flag("--force", force_flag, "ignore the enumeration cap");

    MapOptions mo;
    auto* map_cmd = app.add_subcommand("map", "apply a Gray map to a value, a table or generator rows");
    map_cmd->fallthrough();
    map_cmd->add_flag("--eta", mo.eta, "modular Gray map");
    map_cmd->add_flag("--xi", mo.xi, "permuted modular Gray map (s in {2, 3, 4})");
    map_cmd->add_flag("--carlet", mo.carlet, "generalized Gray map over Z_{p^s}");
    map_cmd->add_flag("--compose", mo.compose, "full staged product of modular maps, down to Z_2");
    map_cmd->add_flag("--vega", mo.vega, "staged product of modular maps stopping at Z_4");
    map_cmd->add_option("-s,--exponent", mo.s, "ring exponent s")->required();
    map_cmd->add_option("-p,--prime", mo.p, "prime for --carlet (default 2)");
    std::uint64_t map_value = 0;
    auto* value_opt = map_cmd->add_option("--value", map_value, "single ring element to map");
    map_cmd->add_option("--matrix", mo.matrix_arg, "matrix file or fixture name to map row by row");
    map_cmd->add_flag("--table", mo.table, "print the full value table");
    map_cmd->add_option("--layout", mo.layout, "blockwise or split (default blockwise)");

    auto* verify_cmd = app.add_subcommand("verify", "check map and code properties exhaustively");
    verify_cmd->fallthrough();
    verify_cmd->require_subcommand(1);

    bool vi_xi = false;
    unsigned vi_s = 0;
    std::string vi_source = "homogeneous", vi_image = "homogeneous", vi_layout = "blockwise";
    std::size_t vi_n = 1;
    auto* vi_cmd = verify_cmd->add_subcommand("isometry", "distance preservation over all word pairs");
    vi_cmd->fallthrough();
    vi_cmd->add_flag("--xi", vi_xi, "check xi instead of eta");
    bool vi_eta = false;
    vi_cmd->add_flag("--eta", vi_eta, "check eta (the default)");
    vi_cmd->add_option("-s,--exponent", vi_s, "ring exponent s")->required();
    std::string vi_weight;
    vi_cmd->add_option("--weight", vi_weight, "weight kind used on both sides");
    vi_cmd->add_option("--source-weight", vi_source, "weight on the domain (default homogeneous)");
    vi_cmd->add_option("--image-weight", vi_image, "weight on the image (default homogeneous)");
    vi_cmd->add_option("-n,--length", vi_n, "word length (default 1)");
    vi_cmd->add_option("--layout", vi_layout, "blockwise or split (default blockwise)");

    unsigned vc_s = 0;
    auto* vc_cmd = verify_cmd->add_subcommand("composition", "staged modular maps against the generalized map");
    vc_cmd->fallthrough();
    vc_cmd->add_option("-s,--exponent", vc_s, "ring exponent s")->required();

    unsigned vr_s = 0;
    auto* vr_cmd = verify_cmd->add_subcommand("rm-image", "one-coordinate eta image against the two-generator span");
    vr_cmd->fallthrough();
    vr_cmd->add_option("-s,--exponent", vr_s, "ring exponent s")->required();

    std::string vb_matrix, vb_layout = "blockwise";
    auto* vb_cmd = verify_cmd->add_subcommand("basis-independence", "p-linear independence of mapped basis rows");
    vb_cmd->fallthrough();
    vb_cmd->add_option("--matrix", vb_matrix, "matrix file or fixture name")->required();
    vb_cmd->add_option("--layout", vb_layout, "blockwise or split (default blockwise)");

    auto* code_cmd = app.add_subcommand("code", "operations on a code given by generator rows");
    code_cmd->fallthrough();
    code_cmd->require_subcommand(1);

    std::string cs_matrix, cd_matrix, ce_matrix, cm_matrix, cc_matrix, co_matrix, cm_weight;
    auto* cs_cmd = code_cmd->add_subcommand("standard-form", "canonical generator matrix with pivot profile");
    cs_cmd->fallthrough();
    cs_cmd->add_option("matrix", cs_matrix, "matrix file or fixture name")->required();
    auto* cd_cmd = code_cmd->add_subcommand("dual", "generators of the dual code");
    cd_cmd->fallthrough();
    cd_cmd->add_option("matrix", cd_matrix, "matrix file or fixture name")->required();
    auto* ce_cmd = code_cmd->add_subcommand("enumerate", "all codewords, sorted");
    ce_cmd->fallthrough();
    ce_cmd->add_option("matrix", ce_matrix, "matrix file or fixture name")->required();
    auto* cm_cmd = code_cmd->add_subcommand("min-distance", "minimum nonzero weight, per weight kind");
    cm_cmd->fallthrough();
    cm_cmd->add_option("matrix", cm_matrix, "matrix file or fixture name")->required();
    cm_cmd->add_option("--weight", cm_weight, "restrict to one weight kind");
    auto* cc_cmd = code_cmd->add_subcommand("cardinality", "number of codewords");
    cc_cmd->fallthrough();
    cc_cmd->add_option("matrix", cc_matrix, "matrix file or fixture name")->required();
    auto* co_cmd = code_cmd->add_subcommand("self-orthogonal", "self-orthogonality and self-duality");
    co_cmd->fallthrough();
    co_cmd->add_option("matrix", co_matrix, "matrix file or fixture name")->required();

    auto* fx_cmd = app.add_subcommand("fixtures", "list or show the named reference inputs");
    fx_cmd->fallthrough();
    fx_cmd->require_subcommand(1);
    auto* fl_cmd = fx_cmd->add_subcommand("list", "names, kinds and provenance");
    fl_cmd->fallthrough();
    std::string fs_name;
    auto* fs_cmd = fx_cmd->add_subcommand("show", "print a fixture file verbatim");
    fs_cmd->fallthrough();
    fs_cmd->add_option("name", fs_name, "fixture name")->required();
    auto* fp_cmd = fx_cmd->add_subcommand("path", "directory the fixtures load from");
    fp_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    RunContext ctx;
    ctx.json = json_flag;
    if (const char* env = std::getenv("RINGCODE_CAP")) {
        try {
            ctx.cap = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: RINGCODE_CAP must be an integer\n";
            return 2;
        }
    }
    if (cap_opt->count() > 0) ctx.cap = cap_flag;
    if (force_flag) ctx.cap = UINT64_MAX;

    try {
        if (app.got_subcommand(map_cmd)) {
            if (value_opt->count() > 0) mo.value = map_value;
            return run_map(mo, ctx);
        }
        if (app.got_subcommand(verify_cmd)) {
            if (verify_cmd->got_subcommand(vi_cmd)) {
                if (vi_eta && vi_xi) throw std::invalid_argument("choose one of --eta, --xi");
                if (!vi_weight.empty()) vi_source = vi_image = vi_weight;
                return run_verify_isometry(vi_xi, vi_s, vi_source, vi_image, vi_n, vi_layout, ctx);
            }
            if (verify_cmd->got_subcommand(vc_cmd)) return run_verify_composition(vc_s, ctx);
            if (verify_cmd->got_subcommand(vr_cmd)) return run_verify_rm_image(vr_s, ctx);
            return run_verify_basis_independence(vb_matrix, vb_layout, ctx);
        }
        if (app.got_subcommand(code_cmd)) {
            if (code_cmd->got_subcommand(cs_cmd)) return run_code_standard_form(cs_matrix, ctx);
            if (code_cmd->got_subcommand(cd_cmd)) return run_code_dual(cd_matrix, ctx);
            if (code_cmd->got_subcommand(ce_cmd)) return run_code_enumerate(ce_matrix, ctx);
            if (code_cmd->got_subcommand(cm_cmd)) return run_code_min_distance(cm_matrix, cm_weight, ctx);
            if (code_cmd->got_subcommand(cc_cmd)) return run_code_cardinality(cc_matrix, ctx);
            return run_code_self_orthogonal(co_matrix, ctx);
        }
        if (fx_cmd->got_subcommand(fl_cmd)) return run_fixtures("list", "", ctx);
        if (fx_cmd->got_subcommand(fp_cmd)) return run_fixtures("path", "", ctx);
        return run_fixtures("show", fs_name, ctx);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
