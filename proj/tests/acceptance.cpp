// Acceptance suite: one timed pass/fail line per criterion, nonzero exit on
// any failure. Criteria pin exact sets, verdicts and runtime budgets.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ringlab/cache.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, long long budget_ms,
               const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool ok = error.empty() && (budget_ms <= 0 || ms <= budget_ms);
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title
              << " (" << ms << " ms";
    if (budget_ms > 0) std::cout << ", budget " << budget_ms << " ms";
    std::cout << ")";
    if (!error.empty()) std::cout << " -- " << error;
    if (error.empty() && budget_ms > 0 && ms > budget_ms) std::cout << " -- over budget";
    std::cout << "\n";
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

std::vector<CorpusItem> built_corpus() {
    auto spec = parse_corpus_spec(default_corpus_text(), kDefaultSizeCap);
    return build_corpus(spec);
}

void require_all_pass(const std::vector<TheoremReport>& reports, const std::string& id) {
    for (const auto& rep : reports)
        require(rep.verdict != Verdict::Fail,
                id + " failed on " + rep.subject + ": " + rep.note);
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args, const std::string& tag) {
    auto out_path = fs::temp_directory_path() / ("ringlab-acceptance-" + tag + ".out");
    std::string cmd = std::string(RINGLAB_CLI_BIN) + " " + args + " > " +
                      out_path.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

}  // namespace

int main() {
    auto corpus = built_corpus();
    MemoSetsProvider sets;

    criterion(1, "structural-set oracles and delta form agreement", 1000, [&] {
        const auto& z4 = sets.get(*corpus[2].ring);  // Z(4)
        require(corpus[2].expr == "Z(4)", "corpus layout changed");
        require(z4.delta.indices() == std::vector<int>{0, 2}, "delta(Z4) != {0,2}");
        require(z4.jacobson.indices() == std::vector<int>{0, 2}, "jacobson(Z4) != {0,2}");
        require(z4.tripotents.indices() == std::vector<int>{0, 1, 3},
                "tripotents(Z4) != {0,1,3}");
        require(corpus[1].expr == "Z(3)", "corpus layout changed");
        require(sets.get(*corpus[1].ring).delta.indices() == std::vector<int>{0},
                "delta(Z3) != {0}");
        // delta() recomputes and cross-checks all three defining forms
        for (const auto& item : corpus) {
            if (!item.ring) continue;
            const auto& s = sets.get(*item.ring);
            (void)s;
            delta(*item.ring, s.units);
        }
    });

    criterion(2, "the a^3/a^4 congruence premises hold on Z5/Z7 yet neither is DT", 1000,
              [&] {
                  auto z5 = make_zn(5);
                  auto z7 = make_zn(7);
                  const auto& s5 = sets.get(z5);
                  const auto& s7 = sets.get(z7);
                  require(!is_dt(z5, s5).ok, "Z5 unexpectedly DT");
                  require(!is_dt(z7, s7).ok, "Z7 unexpectedly DT");
                  for (int a = 0; a < 7; ++a) {
                      bool found = false;
                      for (int e : s7.tripotents.indices())
                          if (s7.jacobson.contains(z7.sub_of(z7.pow_of(a, 3), e))) found = true;
                      require(found, "Z7 premise fails at " + std::to_string(a));
                  }
                  for (int a = 0; a < 5; ++a) {
                      bool found = false;
                      for (int e : s5.idempotents.indices())
                          if (s5.jacobson.contains(z5.sub_of(z5.pow_of(a, 4), e))) found = true;
                      require(found, "Z5 premise fails at " + std::to_string(a));
                  }
              });

    criterion(3, "equivalence suite agrees on every corpus ring", 30000, [&] {
        for (const char* id : {"cor-4.9", "thm-4.10", "thm-4.11", "thm-4.12"})
            require_all_pass(verify(id, corpus, sets), id);
    });

    criterion(4, "DT consequence suite", 30000, [&] {
        for (const char* id : {"cor-2.8", "cor-nil", "lem-4.1", "lem-4.2", "prop-4.3",
                               "prop-4.4"})
            require_all_pass(verify(id, corpus, sets), id);
        // at least the cyclic DT members must actually exercise the checks
        auto reports = verify("cor-2.8", corpus, sets);
        int passes = 0;
        for (const auto& rep : reports) passes += rep.verdict == Verdict::Pass ? 1 : 0;
        require(passes >= 8, "too few DT members exercised the consequence suite");
    });

    criterion(5, "Boolean x Yaqub factorization of R/J for every DT member", 10000, [&] {
        int checked = 0;
        for (const auto& item : corpus) {
            if (!item.ring) continue;
            const auto& s = sets.get(*item.ring);
            if (!is_dt(*item.ring, s).ok) continue;
            auto rj = rj_factorization(*item.ring, s);
            require(rj.ok(), item.expr + ": " + rj.note);
            ++checked;
        }
        require(checked >= 10, "too few DT members were factored");
    });

    criterion(6, "group-ring suite: transfer lemmas and DT instances", 120000, [&] {
        for (const char* id :
             {"lem-3.2", "lem-3.3", "lem-3.4", "lem-3.5", "lem-3.6", "lem-3.8"})
            require_all_pass(verify(id, corpus, sets), id);
        auto dt_of = [&](const std::string& expr) {
            for (const auto& item : corpus)
                if (item.expr == expr) return is_dt(*item.ring, sets.get(*item.ring)).ok;
            throw Error("corpus is missing " + expr);
        };
        for (const char* expr :
             {"GR(Z(2),C(2))", "GR(Z(2),C(4))", "GR(Z(2),E(2,2))", "GR(Z(3),C(3))"})
            require(dt_of(expr), std::string(expr) + " should be DT");
        require(!dt_of("M(2,Z(2))"), "M(2,Z(2)) should not be DT");
        require(!dt_of("Prod(Z(2),Z(7))"), "Prod(Z(2),Z(7)) should not be DT");
    });

    criterion(7, "cold/warm cache runs emit byte-identical payloads with exit 0", 0, [&] {
        auto cache_dir = fs::temp_directory_path() / "ringlab-acceptance-cache";
        fs::remove_all(cache_dir);
        auto cold = run_cli("--cache " + cache_dir.string() + " verify all", "cold");
        auto warm = run_cli("--cache " + cache_dir.string() + " verify all", "warm");
        require(cold.exit_code == 0, "cold run exit code " + std::to_string(cold.exit_code));
        require(warm.exit_code == 0, "warm run exit code " + std::to_string(warm.exit_code));
        auto cold_payload = nlohmann::json::parse(cold.out).at("payload").dump(2);
        auto warm_payload = nlohmann::json::parse(warm.out).at("payload").dump(2);
        require(cold_payload == warm_payload, "payload bodies differ between runs");
        require(nlohmann::json::parse(cold.out).at("payload").at("summary").at("fail") == 0,
                "verify-all reported failures");
        fs::remove_all(cache_dir);
    });

    if (failures == 0) std::cout << "all acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
