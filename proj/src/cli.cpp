/* Copyright 2026 The powerlab Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "powerlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerlab/enumeration.hpp"
#include "powerlab/factorization.hpp"
#include "powerlab/morphism.hpp"
#include "powerlab/repetitions.hpp"
#include "powerlab/verifier.hpp"
#include "powerlab/word.hpp"

namespace powerlab::cli {

namespace {

using json = nlohmann::json;

// Input errors detected after CLI11 parsing; mapped to exit_usage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

ExponentThreshold threshold_arg(const std::string& text) {
    try {
        return parse_threshold(text);
    } catch (const std::exception& e) {
        throw UsageError("invalid threshold '" + text + "': " + e.what());
    }
}

BinaryWord word_arg(const std::string& text) {
    try {
        return parse_word(text);
    } catch (const ParseError& e) {
        throw UsageError("invalid word '" + text + "': " + e.what());
    }
}

BinaryMorphism morphism_arg(const std::string& text) {
    try {
        return parse_morphism(text);
    } catch (const ParseError& e) {
        throw UsageError("invalid morphism '" + text + "': " + e.what());
    }
}

json occurrence_json(const PowerOccurrence& o) {
    return {{"start", o.start}, {"period", o.period}, {"length", o.length}, {"exponent", o.exponent().to_string()}};
}

json check_json(const BinaryWord& w, const ExponentThreshold& t) {
    json occurrences = json::array();
    for (const auto& o : find_occurrences(w, t)) {
        occurrences.push_back(occurrence_json(o));
    }
    const bool free = occurrences.empty();
    return {{"word", w.to_string()}, {"threshold", t.to_string()}, {"free", free}, {"occurrences", occurrences}};
}

std::string trim_line(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
        line.pop_back();
    }
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) {
        ++lead;
    }
    return line.substr(lead);
}

struct Options {
    std::string threshold = "7/3";
    std::string word;

    // factorize
    bool tower = false;
    std::size_t min_core = 7;

    // morphism
    std::string morphism;
    std::string apply_word;
    std::string compose_with;
    unsigned power_k = 0;
    std::string letter = "0";
    std::size_t fix_length = 0;

    // tm
    std::size_t tm_length = 0;

    // enumerate / count
    std::size_t length = 0;
    std::string prefix;
    std::string suffix;
    std::vector<std::string> no_prefix;
    std::vector<std::string> no_suffix;
    std::string first;
    unsigned workers = 1;
    std::string format;
    std::string lengths;
    bool symmetry = false;

    // verify
    std::vector<std::string> claims;
    std::string report_path = "powerlab-report.json";
    bool timings = false;
    VerifierConfig config;
};

int cmd_check(const Options& o, std::ostream& out, std::istream& in) {
    const ExponentThreshold t = threshold_arg(o.threshold);
    if (!o.word.empty()) {
        const json j = check_json(word_arg(o.word), t);
        out << j.dump() << '\n';
        return j["free"].get<bool>() ? exit_ok : exit_violation;
    }
    // Batch mode: one JSON line per nonblank input line. Every line is validated first.
    std::vector<BinaryWord> words;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        line = trim_line(line);
        if (line.empty()) {
            continue;
        }
        try {
            words.push_back(parse_word(line));
        } catch (const ParseError& e) {
            throw UsageError("line " + std::to_string(lineno) + ": invalid word '" + line + "': " + e.what());
        }
    }
    bool all_free = true;
    for (const auto& w : words) {
        const json j = check_json(w, t);
        all_free = all_free && j["free"].get<bool>();
        out << j.dump() << '\n';
    }
    return all_free ? exit_ok : exit_violation;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const BinaryWord w = word_arg(o.word);
    const ExponentThreshold t = threshold_arg(o.threshold);
    if (w.empty()) {
        throw UsageError("scan needs a nonempty word");
    }
    const MaxExponent m = max_exponent(w);
    json j = check_json(w, t);
    j["max_exponent"] = m.exponent.to_string();
    j["witness"] = occurrence_json(m.witness);
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_factorize(const Options& o, std::ostream& out) {
    const BinaryWord w = word_arg(o.word);
    const ExponentThreshold t = threshold_arg(o.threshold);
    json j = {{"word", w.to_string()}, {"threshold", t.to_string()}};
    if (o.tower) {
        const DecompositionTower tower = decomposition_tower(w, t, o.min_core);
        json levels = json::array();
        for (const auto& level : tower.levels) {
            levels.push_back({{"u", level.u.to_string()}, {"v", level.v.to_string()}});
        }
        j["levels"] = levels;
        j["core"] = tower.core.to_string();
    } else {
        json fs = json::array();
        for (const auto& f : factorize(w, t)) {
            fs.push_back({{"u", f.u.to_string()}, {"y", f.y.to_string()}, {"v", f.v.to_string()}});
        }
        j["factorizations"] = fs;
    }
    out << j.dump() << '\n';
    return exit_ok;
}

int cmd_morphism(const Options& o, const CLI::App& app, std::ostream& out) {
    const BinaryMorphism h = morphism_arg(o.morphism);
    if (app.got_subcommand("apply")) {
        out << apply(h, word_arg(o.apply_word)).to_string() << '\n';
    } else if (app.got_subcommand("compose")) {
        out << compose(h, morphism_arg(o.compose_with)).to_string() << '\n';
    } else if (app.got_subcommand("power")) {
        out << power(h, o.power_k).to_string() << '\n';
    } else if (app.got_subcommand("classify")) {
        out << classify_form(h).to_string() << '\n';
    } else {
        if (o.letter != "0" && o.letter != "1") {
            throw UsageError("invalid letter '" + o.letter + "'");
        }
        const Symbol a = o.letter == "0" ? Symbol::Zero : Symbol::One;
        try {
            out << fixed_point_prefix(h, a, o.fix_length).to_string() << '\n';
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return exit_ok;
}

EnumerationQuery enumeration_query(const Options& o) {
    EnumerationQuery q;
    q.length = o.length;
    q.threshold = threshold_arg(o.threshold);
    if (!o.prefix.empty()) {
        q.required_prefix = word_arg(o.prefix);
    }
    if (!o.suffix.empty()) {
        q.required_suffix = word_arg(o.suffix);
    }
    for (const auto& p : o.no_prefix) {
        q.excluded_prefixes.push_back(word_arg(p));
    }
    for (const auto& s : o.no_suffix) {
        q.excluded_suffixes.push_back(word_arg(s));
    }
    if (!o.first.empty()) {
        if (o.first != "0" && o.first != "1") {
            throw UsageError("invalid first symbol '" + o.first + "'");
        }
        q.first_symbol = o.first == "0" ? Symbol::Zero : Symbol::One;
    }
    try {
        q.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return q;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const std::size_t ceiling = listing_ceiling();
    if (o.length > ceiling) {
        throw UsageError("length " + std::to_string(o.length) + " exceeds the listing ceiling " +
                         std::to_string(ceiling) + " (set POWERLAB_MAX_ENUM to raise it)");
    }
    const EnumerationQuery q = enumeration_query(o);
    EnumerationOptions options;
    options.workers = o.workers;
    const auto words = enumerate(q, options);
    if (o.format == "json") {
        json list = json::array();
        for (const auto& w : words) {
            list.push_back(w.to_string());
        }
        out << json{{"length", q.length}, {"threshold", q.threshold.to_string()}, {"count", words.size()},
                    {"words", list}}
                   .dump()
            << '\n';
    } else {
        for (const auto& w : words) {
            out << w.to_string() << '\n';
        }
    }
    return exit_ok;
}

int cmd_count(const Options& o, std::ostream& out) {
    const std::size_t dots = o.lengths.find("..");
    std::size_t first = 0;
    std::size_t last = 0;
    if (dots == std::string::npos) {
        first = last = parse_size(o.lengths, "length range");
    } else {
        first = parse_size(std::string_view(o.lengths).substr(0, dots), "length range");
        last = parse_size(std::string_view(o.lengths).substr(dots + 2), "length range");
    }
    if (first > last) {
        throw UsageError("empty length range '" + o.lengths + "'");
    }
    const ExponentThreshold t = threshold_arg(o.threshold);
    CountOptions options;
    options.workers = o.workers;
    options.symmetry_reduced = o.symmetry;
    const CountTable table = count(first, last, t, options);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [n, c] : table) {
            rows.push_back({{"length", n}, {"count", c}});
        }
        out << json{{"threshold", t.to_string()}, {"counts", rows}}.dump() << '\n';
    } else {
        out << "length,count\n";
        for (const auto& [n, c] : table) {
            out << n << ',' << c << '\n';
        }
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto& known = claim_ids::all();
    for (const auto& id : o.claims) {
        if (id != "all" && std::find(known.begin(), known.end(), id) == known.end()) {
            std::string valid;
            for (const auto& k : known) {
                valid += "\n  " + std::string(k);
            }
            throw UsageError("unknown claim id '" + id + "'; valid ids are 'all' or:" + valid);
        }
    }
    VerifierConfig config = o.config;
    config.workers = o.workers;
    const VerificationReport report = run_all(config, o.claims);
    const std::string body = to_json(report, o.timings).dump(2) + "\n";

    const bool report_to_out = o.report_path == "-";
    std::ostream& summary = report_to_out ? err : out;
    if (report_to_out) {
        out << body;
    } else {
        std::ofstream file(o.report_path, std::ios::binary);
        if (!file || !(file << body)) {
            throw UsageError("cannot write report to '" + o.report_path + "'");
        }
    }
    for (const auto& r : report.results) {
        summary << (r.passed ? "PASS " : "FAIL ") << r.claim_id;
        if (o.timings) {
            summary << " (" << static_cast<long long>(r.elapsed.count()) << " ms)";
        }
        summary << '\n';
        if (!r.passed) {
            for (const auto& w : r.witnesses) {
                summary << "  witness: " << w << '\n';
            }
        }
    }
    summary << (report.overall ? "overall: PASS" : "overall: FAIL") << " (" << report.results.size() << " claims)\n";
    return report.overall ? exit_ok : exit_violation;
}

} // namespace

std::size_t listing_ceiling() {
    const char* env = std::getenv("POWERLAB_MAX_ENUM");
    if (env == nullptr) {
        return default_listing_ceiling;
    }
    std::size_t value = 0;
    const std::string_view text(env);
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
        return default_listing_ceiling;
    }
    return value;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Detect, count and verify fractional powers in binary words", "powerlab"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Check a word (or stdin, one per line) for forbidden powers");
    check->add_option("word", o.word, "Binary word; omit to read stdin");
    check->add_option("-t,--threshold", o.threshold, "Threshold, e.g. 7/3 or 7/3+")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "Report the maximal exponent and forbidden occurrences of a word");
    scan->add_option("word", o.word, "Binary word")->required();
    scan->add_option("-t,--threshold", o.threshold, "Threshold")->capture_default_str();

    auto* fact = app.add_subcommand("factorize", "Factorize a free word as u mu(y) v");
    fact->add_option("word", o.word, "Binary word")->required();
    fact->add_option("-t,--threshold", o.threshold, "Threshold in (2, 7/3]")->capture_default_str();
    fact->add_flag("--tower", o.tower, "Iterate the factorization on the core");
    fact->add_option("--min-core", o.min_core, "Stop once the core is at most this long")->capture_default_str();

    auto* morph = app.add_subcommand("morphism", "Apply, compose, iterate or classify a morphism");
    morph->add_option("morphism", o.morphism, "Rules '0->w;1->w' or a name: mu, E, id, h-seebold19")->required();
    morph->require_subcommand(1);
    morph->add_subcommand("apply", "Image of a word")->add_option("word", o.apply_word, "Binary word")->required();
    morph->add_subcommand("compose", "This morphism after another")
        ->add_option("other", o.compose_with, "Inner morphism")
        ->required();
    morph->add_subcommand("power", "k-fold composition")->add_option("k", o.power_k, "Exponent")->required();
    morph->add_subcommand("classify", "MuPower(k), EComposeMuPower(k) or Other");
    auto* fix = morph->add_subcommand("fixpoint", "Prefix of the fixed point");
    fix->add_option("--letter", o.letter, "Start letter")->capture_default_str();
    fix->add_option("--length", o.fix_length, "Prefix length")->required();

    auto* tm = app.add_subcommand("tm", "Prefix of the Thue-Morse word");
    tm->add_option("--length", o.tm_length, "Prefix length")->required();

    auto* en = app.add_subcommand("enumerate", "List all free words of a length");
    en->add_option("--length", o.length, "Word length")->required();
    en->add_option("-t,--threshold", o.threshold, "Threshold")->capture_default_str();
    en->add_option("--prefix", o.prefix, "Required prefix");
    en->add_option("--suffix", o.suffix, "Required suffix");
    en->add_option("--no-prefix", o.no_prefix, "Excluded prefix (repeatable)");
    en->add_option("--no-suffix", o.no_suffix, "Excluded suffix (repeatable)");
    en->add_option("--first", o.first, "Required first symbol");
    en->add_option("--workers", o.workers, "Worker threads")->capture_default_str();
    en->add_option("--format", o.format, "lines or json")
        ->check(CLI::IsMember({"lines", "json"}))
        ->default_val("lines");

    auto* cnt = app.add_subcommand("count", "Count free words per length");
    cnt->add_option("--lengths", o.lengths, "Length or range a..b")->required();
    cnt->add_option("-t,--threshold", o.threshold, "Threshold")->capture_default_str();
    cnt->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
    cnt->add_flag("--symmetry", o.symmetry, "Count words starting with 0 and double");
    cnt->add_option("--workers", o.workers, "Worker threads")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Run the claim checks and write a JSON report");
    ver->add_option("claims", o.claims, "Claim ids or 'all'");
    ver->add_option("--report", o.report_path, "Report path; '-' for standard output")->capture_default_str();
    ver->add_flag("--timings", o.timings, "Include elapsed_ms per claim");
    ver->add_option("--workers", o.workers, "Worker threads for enumeration")->capture_default_str();
    auto& c = o.config;
    ver->add_option("--lemma1-length", c.lemma1_length)->capture_default_str();
    ver->add_flag("--lemma1-symmetry", c.lemma1_symmetry_reduced, "Enumerate words starting with 0 only");
    ver->add_option("--lemma2-max-length", c.lemma2_max_length)->capture_default_str();
    ver->add_option("--lemma3-census-length", c.lemma3_census_length)->capture_default_str();
    ver->add_option("--lemma3-census-threshold", c.lemma3_census_threshold)->capture_default_str();
    ver->add_option("--lemma3-max-j", c.lemma3_max_j)->capture_default_str();
    ver->add_option("--lemma5-lengths", c.lemma5_lengths)->delimiter(',');
    ver->add_option("--lemma6-bound", c.lemma6_bound)->capture_default_str();
    ver->add_option("--theorem1-max-length", c.theorem1_max_length)->capture_default_str();
    ver->add_option("--theorem2-max-length", c.theorem2_max_length)->capture_default_str();
    ver->add_option("--theorem7-max-image", c.theorem7_max_image)->capture_default_str();
    ver->add_option("--theorem9-prefix", c.theorem9_prefix)->capture_default_str();
    ver->add_option("--intro-prefix", c.intro_prefix)->capture_default_str();
    ver->add_option("--corollary8-image1", c.corollary8_image1)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, out, in);
        }
        if (scan->parsed()) {
            return cmd_scan(o, out);
        }
        if (fact->parsed()) {
            return cmd_factorize(o, out);
        }
        if (morph->parsed()) {
            return cmd_morphism(o, *morph, out);
        }
        if (tm->parsed()) {
            out << thue_morse_direct(o.tm_length).to_string() << '\n';
            return exit_ok;
        }
        if (en->parsed()) {
            return cmd_enumerate(o, out);
        }
        if (cnt->parsed()) {
            return cmd_count(o, out);
        }
        return cmd_verify(o, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace powerlab::cli
