#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "bcond/scenario.hpp"

namespace {

using bcond::ReportFormat;

enum class Command { condition, decompose, check };

struct Outcome {
    int code;
    std::string text;  // report on success, message on failure
};

Outcome run_one(Command cmd, const std::string& path, ReportFormat format, bool decimals) {
    try {
        bcond::Scenario s = bcond::load_scenario(path);
        switch (cmd) {
        case Command::condition:
            return {0, bcond::run_condition(s, format, decimals)};
        case Command::decompose:
            return {0, bcond::run_decompose(s, format)};
        case Command::check:
            return {0, bcond::run_check(s)};
        }
        return {1, "error: unknown command\n"};
    } catch (const bcond::impossible_problem_error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const bcond::total_conflict_error& e) {
        return {3, std::string("error: ") + e.what() + "\n"};
    } catch (const bcond::error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

int run_batch(Command cmd, const std::string& dir, ReportFormat format, bool decimals) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".scn")
            files.push_back(entry.path());
    if (ec) {
        std::cerr << "error: cannot read directory '" << dir << "'\n";
        return 1;
    }
    std::sort(files.begin(), files.end());

    // Scenarios are independent; evaluate them concurrently and print in
    // name order.
    std::vector<std::future<Outcome>> futures;
    futures.reserve(files.size());
    for (const auto& f : files)
        futures.push_back(std::async(std::launch::async, run_one, cmd, f.string(),
                                     format, decimals));

    int worst = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        Outcome out = futures[i].get();
        std::cout << "== " << files[i].filename().string() << " ==\n" << out.text;
        worst = std::max(worst, out.code);
    }
    return worst;
}

int dispatch(Command cmd, const std::string& file, const std::string& all_dir,
             const std::string& format_name, bool decimals) {
    ReportFormat format = format_name == "tsv" ? ReportFormat::tsv : ReportFormat::text;
    if (!all_dir.empty())
        return run_batch(cmd, all_dir, format, decimals);
    Outcome out = run_one(cmd, file, format, decimals);
    (out.code == 0 ? std::cout : std::cerr) << out.text;
    return out.code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"belief mass revision under an absolutely-true conditioning event"};
    app.require_subcommand(1);

    std::string file, file2, all_dir;
    std::string format = "text";
    bool decimals = false;

    auto add_common = [&](CLI::App* sub, bool with_all) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "tsv"}))
            ->capture_default_str();
        sub->add_flag("--decimals", decimals, "append a 6-place decimal column");
        auto* f = sub->add_option("file", file, "scenario file");
        if (with_all) {
            auto* all = sub->add_option("--all", all_dir, "run every .scn file in a directory");
            f->excludes(all);
        } else {
            f->required();
        }
    };

    auto* cmd_condition =
        app.add_subcommand("condition", "revise the prior by the scenario's rule");
    add_common(cmd_condition, true);
    auto* cmd_decompose =
        app.add_subcommand("decompose", "classify the prior focals against the event");
    add_common(cmd_decompose, true);
    auto* cmd_check = app.add_subcommand("check", "validate a mass table");
    add_common(cmd_check, true);

    auto* cmd_combine = app.add_subcommand("combine", "Dempster-combine two mass files");
    cmd_combine->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();
    cmd_combine->add_flag("--decimals", decimals, "append a 6-place decimal column");
    cmd_combine->add_option("first", file, "first mass file")->required();
    cmd_combine->add_option("second", file2, "second mass file")->required();

    CLI11_PARSE(app, argc, argv);

    auto needs_file = [&](CLI::App* sub) {
        if (file.empty() && all_dir.empty()) {
            std::cerr << "error: " << sub->get_name() << " needs a file or --all <dir>\n";
            return true;
        }
        return false;
    };

    if (cmd_condition->parsed()) {
        if (needs_file(cmd_condition))
            return 1;
        return dispatch(Command::condition, file, all_dir, format, decimals);
    }
    if (cmd_decompose->parsed()) {
        if (needs_file(cmd_decompose))
            return 1;
        return dispatch(Command::decompose, file, all_dir, format, decimals);
    }
    if (cmd_check->parsed()) {
        if (needs_file(cmd_check))
            return 1;
        return dispatch(Command::check, file, all_dir, format, decimals);
    }
    if (cmd_combine->parsed()) {
        try {
            bcond::Scenario a = bcond::load_scenario(file);
            bcond::Scenario b = bcond::load_scenario(file2);
            std::cout << bcond::run_combine(
                a, b, format == "tsv" ? ReportFormat::tsv : ReportFormat::text, decimals);
            return 0;
        } catch (const bcond::total_conflict_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        } catch (const bcond::error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return 1;
}
