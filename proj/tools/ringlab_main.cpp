#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringlab/cache.hpp"
#include "ringlab/report.hpp"

namespace {

using namespace ringlab;

struct GlobalOptions {
    std::size_t cap = kDefaultSizeCap;
    std::string cache_dir;
    std::string out_path;
    std::string format = "json";
    int jobs = 1;
};

long long us_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int emit(const GlobalOptions& opts, const ReportDocument& doc) {
    std::string text = opts.format == "table" ? render_table(doc)
                                              : dump_document(doc.full());
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out_path);
        if (!out) throw Error("cannot open output path " + opts.out_path);
        out << text;
    }
    return doc.payload.at("summary").at("fail").get<int>() > 0 ? 1 : 0;
}

RingTable build_from_expr(const std::string& expr, std::size_t cap) {
    auto ast = parse_ring_expr(expr);
    if (static_ring_order(*ast) > cap)
        throw SizeCapError("expression order " + std::to_string(static_ring_order(*ast)) +
                           " exceeds size cap " + std::to_string(cap));
    auto ring = build_ring(*ast, cap);
    ring.label = ast->text;
    ring.fingerprint = ring_fingerprint_hex(ring);
    return ring;
}

int cmd_sets(const GlobalOptions& opts, const std::string& expr) {
    auto t0 = std::chrono::steady_clock::now();
    auto ring = build_from_expr(expr, opts.cap);
    CachedSetsProvider provider{std::filesystem::path(opts.cache_dir)};
    const auto& sets = provider.get(ring);
    auto audit = audit_delta_closure(ring, sets);
    VerifySummary summary;
    (audit.ok ? summary.pass : summary.fail) += 1;
    long long us = us_since(t0);
    auto doc = make_report("sets", Json{{"expr", expr}, {"cap", opts.cap}},
                           {sets_result_json(ring, sets, audit)}, summary, {us}, us);
    return emit(opts, doc);
}

int cmd_classify(const GlobalOptions& opts, const std::string& expr) {
    auto t0 = std::chrono::steady_clock::now();
    auto ring = build_from_expr(expr, opts.cap);
    CachedSetsProvider provider{std::filesystem::path(opts.cache_dir)};
    const auto& sets = provider.get(ring);
    auto verdict = classify_ring(ring, sets);
    VerifySummary summary;
    summary.pass = 1;  // classification always completes; flags are data
    long long us = us_since(t0);
    auto doc = make_report("classify", Json{{"expr", expr}, {"cap", opts.cap}},
                           {classify_result_json(ring, verdict)}, summary, {us}, us);
    return emit(opts, doc);
}

int cmd_decompose(const GlobalOptions& opts, const std::string& expr, int element,
                  const std::string& kind_name) {
    auto t0 = std::chrono::steady_clock::now();
    auto kind = decomposition_kind_from_string(kind_name);
    if (!kind) throw UsageError("unknown decomposition kind '" + kind_name + "'");
    auto ring = build_from_expr(expr, opts.cap);
    if (element < 0 || element >= ring.order)
        throw UsageError("element index " + std::to_string(element) +
                         " out of range for " + ring.label);
    CachedSetsProvider provider{std::filesystem::path(opts.cache_dir)};
    const auto& sets = provider.get(ring);
    auto dec = decompose(ring, sets, element, *kind);
    bool verified = dec && verify_decomposition(ring, sets, *dec);
    VerifySummary summary;
    (dec && verified ? summary.pass : summary.fail) += 1;
    long long us = us_since(t0);
    auto doc = make_report(
        "decompose",
        Json{{"expr", expr}, {"cap", opts.cap}, {"element", element}, {"kind", kind_name}},
        {decompose_result_json(ring, element, *kind, dec, verified)}, summary, {us}, us);
    return emit(opts, doc);
}

int cmd_verify(const GlobalOptions& opts, const std::string& theorem_id,
               const std::string& corpus_path) {
    auto t0 = std::chrono::steady_clock::now();
    std::string corpus_text;
    std::string corpus_name;
    if (corpus_path.empty()) {
        corpus_text = default_corpus_text();
        corpus_name = "default";
    } else {
        std::ifstream in(corpus_path);
        if (!in) throw UsageError("cannot read corpus file " + corpus_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        corpus_text = buf.str();
        corpus_name = corpus_path;
    }
    auto spec = parse_corpus_spec(corpus_text, opts.cap);
    spec.output_path = opts.out_path;
    auto items = build_corpus(spec);
    CachedSetsProvider provider{std::filesystem::path(opts.cache_dir)};
    auto reports = theorem_id == "all"
                       ? verify_all(items, provider, opts.jobs)
                       : verify(theorem_id, items, provider, opts.jobs);
    auto summary = summarize(reports);
    std::vector<Json> results;
    std::vector<long long> times;
    results.reserve(reports.size());
    for (const auto& rep : reports) {
        results.push_back(theorem_report_json(rep));
        times.push_back(rep.elapsed.count());
    }
    auto doc = make_report(
        "verify",
        Json{{"theorem", theorem_id}, {"corpus", corpus_name}, {"cap", opts.cap}},
        std::move(results), summary, std::move(times), us_since(t0));
    return emit(opts, doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring structure toolkit: structural sets, ring classes, "
                 "decompositions and a statement-verification registry"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--cap", opts.cap, "maximum constructed ring/group order")
        ->capture_default_str();
    app.add_option("--cache", opts.cache_dir, "structural-set cache directory");
    app.add_option("--out", opts.out_path, "write the report here instead of stdout");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--jobs", opts.jobs, "parallel workers over corpus items")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string expr, theorem_id = "all", corpus_path, kind;
    int element = 0;

    auto* sets_cmd = app.add_subcommand("sets", "structural subsets of one ring");
    sets_cmd->fallthrough();
    sets_cmd->add_option("expr", expr, "ring construction expression")->required();

    auto* classify_cmd = app.add_subcommand("classify", "class membership of one ring");
    classify_cmd->fallthrough();
    classify_cmd->add_option("expr", expr, "ring construction expression")->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "run registered statements over a corpus");
    verify_cmd->fallthrough();
    verify_cmd->add_option("theorem", theorem_id, "statement id or 'all'")->required();
    verify_cmd->add_option("--corpus", corpus_path,
                           "corpus file (one expression per line; default: built-in)");

    auto* decompose_cmd =
        app.add_subcommand("decompose", "certificate search for one element");
    decompose_cmd->fallthrough();
    decompose_cmd->add_option("expr", expr, "ring construction expression")->required();
    decompose_cmd->add_option("element", element, "element index")->required();
    decompose_cmd->add_option("kind", kind, "decomposition kind")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help and version requests exit 0; real argument errors exit 2
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sets_cmd->parsed()) return cmd_sets(opts, expr);
        if (classify_cmd->parsed()) return cmd_classify(opts, expr);
        if (verify_cmd->parsed()) return cmd_verify(opts, theorem_id, corpus_path);
        if (decompose_cmd->parsed()) return cmd_decompose(opts, expr, element, kind);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
