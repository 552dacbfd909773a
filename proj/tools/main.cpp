#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lmg/classification.hpp"
#include "lmg/equivalence.hpp"
#include "lmg/io.hpp"
#include "lmg/oracle.hpp"
#include "lmg/representation.hpp"
#include "lmg/separation.hpp"
#include "lmg/transform.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

lmg::GraphClass parse_class(const std::string& name) {
    auto c = lmg::class_from_name(name);
    if (!c) throw lmg::InvalidQuery("unknown class '" + name + "'");
    return *c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_classify(const std::string& path) {
    lmg::MixedGraph g = lmg::parse_file(path);
    lmg::ClassMembership m = lmg::classify(g);
    auto line = [&](const std::string& name, bool ok) {
        std::cout << name << ": " << yes_no(ok);
        auto it = m.witnesses.find(name);
        if (it != m.witnesses.end()) std::cout << " (" << it->second << ")";
        std::cout << "\n";
    };
    line("ug", m.is_ug);
    line("bg", m.is_bg);
    line("dag", m.is_dag);
    line("rcg", m.is_rcg);
    line("ancestral", m.is_ancestral);
    line("maximal", m.is_maximal);
    line("mag", m.is_ancestral && m.is_maximal);
    return kYes;
}

int run_equiv(const std::string& path1, const std::string& path2, const std::string& method,
              bool witness) {
    lmg::MixedGraph g1 = lmg::parse_file(path1);
    lmg::MixedGraph g2 = lmg::parse_file(path2);
    bool eq;
    if (method == "oracle")
        eq = lmg::models_equal(g1, g2);
    else
        eq = lmg::equivalent_mags(g1, g2,
                                  method == "paths" ? lmg::EquivMethod::Paths
                                                    : lmg::EquivMethod::Order);
    std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    if (!eq && witness) {
        auto w = lmg::equivalence_witness(g1, g2);
        if (w) std::cout << "witness: " << *w << "\n";
    }
    return eq ? kYes : kNo;
}

int run_repr(const std::string& path, const std::string& target, bool explain) {
    lmg::MixedGraph g = lmg::parse_file(path);
    lmg::ReprVerdict v = lmg::representable_as(g, parse_class(target));
    std::cout << (v.possible ? "possible" : "impossible") << "\n";
    if (!v.possible && explain) {
        if (v.violated_condition) std::cout << "violated: " << to_string(*v.violated_condition) << "\n";
        if (!v.witness.empty()) std::cout << "witness: " << v.witness << "\n";
    }
    return v.possible ? kYes : kNo;
}

int run_transform(const std::string& path, const std::string& target, const std::string& out,
                  bool log, bool force) {
    lmg::MixedGraph g = lmg::parse_file(path);
    lmg::TransformOptions opts;
    opts.force = force;
    lmg::TransformReport report = lmg::transform_to(g, parse_class(target), opts);
    std::string text = lmg::serialize(report.output);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw lmg::Error("cannot write '" + out + "'");
        f << text;
    }
    if (log)
        for (const auto& step : report.steps) std::cout << step.to_text(report.output) << "\n";
    if (report.verified && !*report.verified)
        std::cerr << "warning: precondition failed, output not verified\n";
    return kYes;
}

int run_model(const std::string& path, std::optional<int> max_cond) {
    lmg::MixedGraph g = lmg::parse_file(path);
    std::cout << lmg::independence_model(g, max_cond).to_text();
    return kYes;
}

int run_verify(const std::string& path, const std::string& target) {
    lmg::MixedGraph g = lmg::parse_file(path);
    lmg::TransformReport report = lmg::transform_to(g, parse_class(target));
    bool ok = lmg::models_equal(g, report.output);
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kYes : kNo;
}

// Runs per_file over each path; with a prefix line between files in batch
// mode.  The worst exit code wins.
int run_each(const std::vector<std::string>& paths,
             const std::function<int(const std::string&)>& per_file) {
    int rc = kYes;
    for (const auto& p : paths) {
        if (paths.size() > 1) std::cout << p << ":\n";
        rc = std::max(rc, per_file(p));
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loopless mixed graph toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string file2, method = "order", target, out;
    bool witness = false, explain = false, log = false, force = false, each = false;
    std::optional<int> max_cond;

    auto* classify = app.add_subcommand("classify", "Class membership of a graph");
    classify->add_option("file", files, "graph file(s)")->required();
    classify->add_flag("--each", each, "process multiple files");

    auto* equiv = app.add_subcommand("equiv", "Markov equivalence of two graphs");
    equiv->add_option("file1", file2, "first graph file")->required();
    equiv->add_option("file2", files, "second graph file")->required()->expected(1);
    equiv->add_option("--method", method, "order|paths|oracle")
        ->check(CLI::IsMember({"order", "paths", "oracle"}));
    equiv->add_flag("--witness", witness, "print a distinguishing feature");

    auto* repr = app.add_subcommand("repr", "Representability in a target class");
    repr->add_option("file", files, "graph file(s)")->required();
    repr->add_option("--as", target, "dag|ug|bg|rcg")->required();
    repr->add_flag("--explain", explain, "print the violated condition");
    repr->add_flag("--each", each, "process multiple files");

    auto* transform = app.add_subcommand("transform", "Markov equivalent graph of a target class");
    transform->add_option("file", files, "graph file")->required()->expected(1);
    transform->add_option("--to", target, "dag|ug|bg|rcg")->required();
    transform->add_option("-o", out, "output file (default stdout)");
    transform->add_flag("--log", log, "print rewrite steps");
    transform->add_flag("--force", force, "run even if the precondition fails");

    auto* model = app.add_subcommand("model", "Independence model of a graph");
    model->add_option("file", files, "graph file(s)")->required();
    model->add_option("--max-cond", max_cond, "cap on conditioning set size");
    model->add_flag("--each", each, "process multiple files");

    auto* verify = app.add_subcommand("verify", "Transform then cross-check against the oracle");
    verify->add_option("file", files, "graph file(s)")->required();
    verify->add_option("--to", target, "dag|ug|bg|rcg")->required();
    verify->add_flag("--each", each, "process multiple files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kYes : kError;
    }

    try {
        if (!each && files.size() > 1) throw lmg::InvalidQuery("multiple files need --each");
        if (classify->parsed()) return run_each(files, run_classify);
        if (equiv->parsed()) return run_equiv(file2, files.front(), method, witness);
        if (repr->parsed())
            return run_each(files, [&](const std::string& p) { return run_repr(p, target, explain); });
        if (transform->parsed()) return run_transform(files.front(), target, out, log, force);
        if (model->parsed())
            return run_each(files, [&](const std::string& p) { return run_model(p, max_cond); });
        if (verify->parsed())
            return run_each(files, [&](const std::string& p) { return run_verify(p, target); });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
