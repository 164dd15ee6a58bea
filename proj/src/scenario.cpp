#include "bcond/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace bcond {

const char* to_string(RuleKind rule) noexcept {
    switch (rule) {
    case RuleKind::scr: return "scr";
    case RuleKind::bcr17: return "bcr17";
    case RuleKind::qbcr1: return "qbcr1";
    case RuleKind::qbcr2: return "qbcr2";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw validation_error("line " + std::to_string(line) + ": " + what);
}

struct Item {
    int line;
    std::string text;
};

struct RawScenario {
    std::optional<Item> frame, labels, mode, model_head, condition, rule;
    std::vector<Item> model_items;
    std::vector<Item> mass_items, qmass_items;
    bool has_mass = false, has_qmass = false;
    int mass_line = 0, qmass_line = 0, model_line = 0;
};

RawScenario collect(std::string_view text) {
    enum class Block { none, model_empty, mass, qmass };
    RawScenario raw;
    Block block = Block::none;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::string_view body = trim(line);
        if (body.empty())
            continue;

        std::string_view key;
        std::string_view value;
        if (auto colon = body.find(':'); colon != std::string_view::npos) {
            std::string_view head = trim(body.substr(0, colon));
            static const char* keys[] = {"frame", "labels", "mode", "model",
                                         "mass",  "qmass",  "condition", "rule"};
            for (const char* k : keys) {
                if (head == k) {
                    key = head;
                    value = trim(body.substr(colon + 1));
                    break;
                }
            }
        }

        if (key.empty()) {
            // Continuation line of the current block.
            switch (block) {
            case Block::model_empty: {
                std::string_view rest = body;
                while (!rest.empty()) {
                    auto comma = rest.find(',');
                    std::string_view piece = trim(rest.substr(0, comma));
                    if (!piece.empty())
                        raw.model_items.push_back({lineno, std::string(piece)});
                    if (comma == std::string_view::npos)
                        break;
                    rest.remove_prefix(comma + 1);
                }
                continue;
            }
            case Block::mass:
                raw.mass_items.push_back({lineno, std::string(body)});
                continue;
            case Block::qmass:
                raw.qmass_items.push_back({lineno, std::string(body)});
                continue;
            case Block::none:
                fail(lineno, "expected a '<section>:' line");
            }
        }

        block = Block::none;
        auto set_once = [&](std::optional<Item>& slot, std::string_view k) {
            if (slot)
                fail(lineno, "duplicate '" + std::string(k) + ":' section");
            slot = Item{lineno, std::string(value)};
        };

        if (key == "frame") {
            set_once(raw.frame, key);
        } else if (key == "labels") {
            set_once(raw.labels, key);
        } else if (key == "mode") {
            set_once(raw.mode, key);
        } else if (key == "model") {
            set_once(raw.model_head, key);
            raw.model_line = lineno;
            std::string_view head = trim(value);
            if (head.rfind("empty", 0) == 0) {
                std::string_view rest = trim(head.substr(5));
                if (rest.empty() || rest.front() != ':')
                    fail(lineno, "expected 'empty:' in model section");
                rest = trim(rest.substr(1));
                raw.model_head->text = "empty";
                block = Block::model_empty;
                while (!rest.empty()) {
                    auto comma = rest.find(',');
                    std::string_view piece = trim(rest.substr(0, comma));
                    if (!piece.empty())
                        raw.model_items.push_back({lineno, std::string(piece)});
                    if (comma == std::string_view::npos)
                        break;
                    rest.remove_prefix(comma + 1);
                }
            }
        } else if (key == "mass") {
            if (raw.has_mass)
                fail(lineno, "duplicate 'mass:' section");
            raw.has_mass = true;
            raw.mass_line = lineno;
            block = Block::mass;
            if (!value.empty())
                raw.mass_items.push_back({lineno, std::string(value)});
        } else if (key == "qmass") {
            if (raw.has_qmass)
                fail(lineno, "duplicate 'qmass:' section");
            raw.has_qmass = true;
            raw.qmass_line = lineno;
            block = Block::qmass;
            if (!value.empty())
                raw.qmass_items.push_back({lineno, std::string(value)});
        } else if (key == "condition") {
            set_once(raw.condition, key);
        } else if (key == "rule") {
            set_once(raw.rule, key);
        }
    }
    return raw;
}

std::pair<std::string, std::string> split_entry(const Item& item) {
    auto eq = item.text.find('=');
    if (eq == std::string::npos)
        fail(item.line, "expected '<expression> = <value>'");
    std::string expr{trim(std::string_view(item.text).substr(0, eq))};
    std::string value{trim(std::string_view(item.text).substr(eq + 1))};
    if (expr.empty() || value.empty())
        fail(item.line, "expected '<expression> = <value>'");
    return {expr, value};
}

RuleKind parse_rule(const Item& item) {
    std::string_view v = trim(item.text);
    if (v == "scr") return RuleKind::scr;
    if (v == "bcr17") return RuleKind::bcr17;
    if (v == "qbcr1") return RuleKind::qbcr1;
    if (v == "qbcr2") return RuleKind::qbcr2;
    fail(item.line, "unknown rule '" + std::string(v) + "' (scr, bcr17, qbcr1, qbcr2)");
}

} // namespace

Scenario parse_scenario(std::string_view text) {
    RawScenario raw = collect(text);

    if (!raw.frame)
        throw validation_error("scenario has no 'frame:' section");
    std::vector<std::string> atoms;
    {
        std::istringstream in(raw.frame->text);
        std::string word;
        while (in >> word)
            atoms.push_back(word);
    }

    Scenario s;
    Frame frame = [&] {
        try {
            return Frame(atoms);
        } catch (const validation_error& e) {
            fail(raw.frame->line, e.what());
        }
    }();

    Mode mode = Mode::hyper;
    if (raw.mode) {
        std::string_view v = trim(raw.mode->text);
        if (v == "hyper")
            mode = Mode::hyper;
        else if (v == "super")
            mode = Mode::super;
        else
            fail(raw.mode->line, "mode must be 'hyper' or 'super'");
    }

    if (raw.labels) {
        std::string_view v = trim(raw.labels->text);
        int max = 0;
        if (v.empty())
            fail(raw.labels->line, "expected the top label index");
        for (char c : v) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(raw.labels->line, "expected the top label index");
            max = max * 10 + (c - '0');
        }
        try {
            s.scale = LabelScale(max);
        } catch (const validation_error& e) {
            fail(raw.labels->line, e.what());
        }
    }

    // Constraints are canonicalized against the unconstrained frame; every
    // region of each listed expression becomes empty.
    std::vector<MintermMask> empty_minterms;
    bool shafer = false;
    if (raw.model_head) {
        std::string_view head = trim(raw.model_head->text);
        if (head == "shafer") {
            shafer = true;
        } else if (head == "free") {
            // nothing declared empty
        } else if (head == "empty") {
            ModelPtr free_model = Model::make(frame, mode);
            for (const Item& item : raw.model_items) {
                try {
                    Expression e = parse_expression(item.text, frame);
                    Proposition p = canonicalize(e, free_model);
                    for (MintermMask m : p.regions().regions())
                        empty_minterms.push_back(m);
                } catch (const validation_error& e) {
                    fail(item.line, e.what());
                }
            }
        } else {
            fail(raw.model_head->line, "model must be 'shafer', 'free' or 'empty: ...'");
        }
    }

    try {
        s.model = shafer ? Model::shafer(frame, mode) : Model::make(frame, mode, empty_minterms);
    } catch (const validation_error& e) {
        fail(raw.model_head ? raw.model_head->line : raw.frame->line, e.what());
    }

    if (raw.has_mass && raw.has_qmass)
        fail(raw.qmass_line, "scenario has both 'mass:' and 'qmass:' sections");
    if (!raw.has_mass && !raw.has_qmass)
        throw validation_error("scenario has no mass section ('mass:' or 'qmass:')");

    if (raw.has_mass) {
        Bba bba(s.model);
        for (const Item& item : raw.mass_items) {
            auto [expr_text, value_text] = split_entry(item);
            try {
                Proposition p = canonicalize(parse_expression(expr_text, s.model->frame()), s.model);
                bba.add(p, parse_rational(value_text));
            } catch (const validation_error& e) {
                fail(item.line, e.what());
            }
        }
        if (bba.masses().empty())
            fail(raw.mass_line, "empty mass table");
        s.bba = std::move(bba);
    } else {
        if (!s.scale)
            fail(raw.qmass_line, "qualitative masses need a 'labels:' section");
        Qbba qbba(s.model, *s.scale);
        for (const Item& item : raw.qmass_items) {
            auto [expr_text, value_text] = split_entry(item);
            try {
                Proposition p = canonicalize(parse_expression(expr_text, s.model->frame()), s.model);
                qbba.add(p, parse_label(value_text, *s.scale));
            } catch (const validation_error& e) {
                fail(item.line, e.what());
            }
        }
        if (qbba.masses().empty())
            fail(raw.qmass_line, "empty qualitative mass table");
        s.qbba = std::move(qbba);
    }

    if (raw.condition) {
        try {
            s.condition = parse_expression(raw.condition->text, s.model->frame());
        } catch (const validation_error& e) {
            fail(raw.condition->line, e.what());
        }
    }

    if (raw.rule) {
        s.rule = parse_rule(*raw.rule);
        bool wants_quant = *s.rule == RuleKind::scr || *s.rule == RuleKind::bcr17;
        if (wants_quant && !s.quantitative())
            fail(raw.rule->line, "rule '" + std::string(to_string(*s.rule)) +
                                     "' needs a quantitative 'mass:' section");
        if (!wants_quant && s.quantitative())
            fail(raw.rule->line, "rule '" + std::string(to_string(*s.rule)) +
                                     "' needs a qualitative 'qmass:' section");
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario(buffer.str());
    } catch (const validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

Proposition conditioning_event(const Scenario& s) {
    if (!s.condition)
        throw validation_error("scenario has no 'condition:' section");
    Proposition event = canonicalize(*s.condition, s.model);
    if (event.is_empty())
        throw impossible_problem_error("conditioning event is empty under model");
    return event;
}

std::variant<Bba, Qbba> apply_rule(const Scenario& s) {
    if (!s.rule)
        throw validation_error("scenario has no 'rule:' section");
    Proposition event = conditioning_event(s);
    switch (*s.rule) {
    case RuleKind::scr: return scr_condition(*s.bba, event);
    case RuleKind::bcr17: return bcr17_condition(*s.bba, event);
    case RuleKind::qbcr1: return qbcr1_condition(*s.qbba, event);
    case RuleKind::qbcr2: return qbcr2_condition(*s.qbba, event);
    }
    throw error("corrupt rule kind");
}

namespace {

struct Row {
    std::string name;
    std::string hex;
    std::string value;
    std::string decimal;  // empty unless requested
};

void sort_rows(std::vector<Row>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return a.name < b.name; });
}

std::string emit(const std::vector<Row>& rows, ReportFormat format) {
    std::string out;
    for (const Row& r : rows) {
        if (format == ReportFormat::tsv) {
            out += r.hex;
            out += '\t';
            out += r.name;
            out += '\t';
            out += r.value;
            if (!r.decimal.empty()) {
                out += '\t';
                out += r.decimal;
            }
        } else {
            out += r.name;
            out += " = ";
            out += r.value;
            if (!r.decimal.empty()) {
                out += " (";
                out += r.decimal;
                out += ')';
            }
        }
        out += '\n';
    }
    return out;
}

std::vector<Row> mass_rows(const Bba& m, bool decimals) {
    std::vector<Row> rows;
    for (const auto& [p, v] : m.masses()) {
        Row r{render(p), p.regions().to_hex(), format_rational(v), ""};
        if (decimals)
            r.decimal = format_decimal(v, 6);
        rows.push_back(std::move(r));
    }
    sort_rows(rows);
    return rows;
}

std::vector<Row> mass_rows(const Qbba& qm) {
    std::vector<Row> rows;
    for (const auto& [p, l] : qm.masses())
        rows.push_back({render(p), p.regions().to_hex(), to_string(l), ""});
    sort_rows(rows);
    return rows;
}

std::string quasi_norm_line(const QuasiNormStatus& st, int max_index) {
    std::string kind = st.exact ? "exact" : st.clamped_ok ? "clamped" : "no";
    return "quasi-normalized: " + kind + " (" + std::to_string(st.raw_index_sum) + "/" +
           std::to_string(max_index) + ")";
}

std::vector<Row> class_rows(const Scenario& s, const DecompositionContext& ctx) {
    std::vector<Proposition> focals =
        s.quantitative() ? s.bba->focals() : s.qbba->focals();
    std::vector<Row> rows;
    for (const auto& [p, c] : ctx.decompose(focals))
        rows.push_back({render(p), p.regions().to_hex(), to_string(c), ""});
    sort_rows(rows);
    return rows;
}

std::string class_lines(const std::vector<Row>& rows) {
    std::string out;
    for (const Row& r : rows) {
        out += r.name;
        out += ": ";
        out += r.value;
        out += '\n';
    }
    return out;
}

// Masses loaded from separate files live on distinct model objects; combining
// them requires structurally identical models.
Bba rebind(const Bba& m, const ModelPtr& target) {
    const Model& a = *m.model();
    const Model& b = *target;
    if (a.frame().atoms() != b.frame().atoms() || a.mode() != b.mode() ||
        a.empty_regions() != b.empty_regions())
        throw validation_error("mass files describe different frames or models");
    Bba out(target);
    for (const auto& [p, v] : m.masses())
        out.add(target->proposition(p.regions()), v);
    return out;
}

void require_valid_prior(const Bba& m) {
    BbaDiagnostics diag = validate_bba(m);
    if (!diag.sum_ok)
        throw validation_error("prior masses sum to " + format_rational(diag.sum) +
                               ", expected 1");
}

} // namespace

std::string run_condition(const Scenario& s, ReportFormat format, bool decimals) {
    if (!s.rule)
        throw validation_error("scenario has no 'rule:' section");
    Proposition event = conditioning_event(s);
    DecompositionContext ctx(event, s.condition->atoms());

    if (s.quantitative())
        require_valid_prior(*s.bba);

    std::string notes;
    std::vector<Row> rows;
    std::string tail;
    if (s.quantitative()) {
        Bba result = *s.rule == RuleKind::scr ? scr_condition(*s.bba, event)
                                              : bcr17_condition(*s.bba, event);
        rows = mass_rows(result, decimals);
        tail = "sum: " + format_rational(result.total()) + "\n";
    } else {
        QuasiNormStatus prior = quasi_norm_status(*s.qbba);
        if (!prior.clamped_ok)
            notes += "warning: prior is not quasi-normalized (raw " +
                     std::to_string(prior.raw_index_sum) + "/" +
                     std::to_string(s.scale->max_index()) + ")\n";
        Qbba result = [&] {
            if (*s.rule == RuleKind::qbcr1)
                return qbcr1_condition(*s.qbba, event);
            Qbcr2Diag diag;
            Qbba out = qbcr2_condition(*s.qbba, event, &diag);
            if (diag.floor_loss > 0)
                tail += "note: floor division leaked " + std::to_string(diag.floor_loss) +
                        " index unit" + (diag.floor_loss == 1 ? "" : "s") + "\n";
            if (diag.event_received_share)
                tail += "note: conditioning event received a uniform share\n";
            return out;
        }();
        rows = mass_rows(result);
        tail += quasi_norm_line(quasi_norm_status(result), s.scale->max_index()) + "\n";
    }

    if (format == ReportFormat::tsv)
        return emit(rows, format);

    std::string out;
    out += "rule: " + std::string(to_string(*s.rule)) + "\n";
    out += "condition: " + std::string(trim(s.condition->source())) + "\n";
    out += notes;
    out += "classes:\n";
    out += class_lines(class_rows(s, ctx));
    out += "masses:\n";
    out += emit(rows, format);
    out += tail;
    return out;
}

std::string run_decompose(const Scenario& s, ReportFormat format) {
    Proposition event = conditioning_event(s);
    DecompositionContext ctx(event, s.condition->atoms());
    std::vector<Row> rows = class_rows(s, ctx);
    if (format == ReportFormat::tsv)
        return emit(rows, format);
    return class_lines(rows);
}

std::string run_check(const Scenario& s) {
    std::string out;
    if (s.quantitative()) {
        out += "focals: " + std::to_string(s.bba->masses().size()) + "\n";
        BbaDiagnostics diag = validate_bba(*s.bba);
        out += "sum: " + format_rational(diag.sum) + "\n";
        if (!diag.sum_ok)
            throw validation_error("prior masses sum to " + format_rational(diag.sum) +
                                   ", expected 1");
        out += "valid\n";
    } else {
        QuasiNormStatus st = quasi_norm_status(*s.qbba);
        out += "focals: " + std::to_string(s.qbba->masses().size()) + "\n";
        out += "raw index sum: " + std::to_string(st.raw_index_sum) + "/" +
               std::to_string(s.scale->max_index()) + "\n";
        if (st.exact)
            out += "exact quasi-normalized\n";
        else if (st.clamped_ok)
            out += "clamped quasi-normalized\n";
        else
            out += "not quasi-normalized\n";
    }
    return out;
}

std::string run_combine(const Scenario& a, const Scenario& b, ReportFormat format,
                        bool decimals) {
    if (!a.quantitative() || !b.quantitative())
        throw validation_error("combine needs two quantitative mass files");
    require_valid_prior(*a.bba);
    require_valid_prior(*b.bba);
    CombineResult result = dempster_combine(*a.bba, rebind(*b.bba, a.model));
    std::vector<Row> rows = mass_rows(result.combined, decimals);
    std::string out = emit(rows, format);
    if (format == ReportFormat::text)
        out += "K = " + format_rational(result.conflict) + "\n";
    return out;
}

} // namespace bcond
