// Command-line front end for the partition workbench: partition algebra
// queries, segment enumeration, witness searches, filter membership and
// game play (batch and interactive).

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "partlab/partlab.hpp"

namespace {

using namespace partlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // Fails or Exhausted
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;  // horizon exhausted

int verdict_exit(const Verdict& v) {
    switch (v.tag()) {
        case Verdict::Tag::Holds: return kExitOk;
        case Verdict::Tag::Fails: return kExitNegative;
        case Verdict::Tag::Unknown: return kExitUnknown;
    }
    return kExitUsage;
}

json verdict_json(const Verdict& v) {
    json j;
    j["tag"] = v.is_holds() ? "holds" : v.is_fails() ? "fails" : "unknown";
    if (v.witness()) j["witness_n"] = *v.witness();
    if (v.counterexample()) j["counterexample"] = {v.counterexample()->first, v.counterexample()->second};
    if (v.is_unknown()) j["horizon"] = v.horizon();
    if (!v.note().empty()) j["note"] = v.note();
    if (!v.subset().empty()) j["subset"] = v.subset();
    if (!v.details().empty()) j["details"] = v.details();
    return j;
}

int report_verdict(const Verdict& v, bool as_json) {
    if (as_json) std::cout << verdict_json(v).dump() << "\n";
    else std::cout << v.to_string() << "\n";
    return verdict_exit(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << body;
}

bool looks_like_segment(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[';
    }
    return false;
}

Coloring load_coloring(const std::string& spec) {
    if (spec.rfind("rule:", 0) == 0) return Coloring::parse_rule(spec);
    return Coloring::parse_text(read_file(spec));
}

FilterGens load_filter(const std::string& path, int horizon) {
    return FilterGens::parse_text(read_file(path), horizon);
}

std::string colored_rgs(const Segment& s, bool use_color) {
    static const char* palette[] = {"\033[31m", "\033[32m", "\033[33m",
                                    "\033[34m", "\033[35m", "\033[36m"};
    if (!use_color) return s.to_string();
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < s.domain(); ++i) {
        if (i) os << ',';
        os << palette[s.label(i) % 6] << s.label(i) << "\033[0m";
    }
    os << ']';
    return os.str();
}

// ---- part ----

int run_part(const std::string& op, const std::string& a, const std::string& b, int horizon,
             int restrict_to, bool as_json) {
    if (op == "canon") {
        // Arbitrary labels allowed, so parse leniently.
        std::string inner = a;
        std::vector<long long> labels;
        std::string tok;
        for (char c : inner)
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') tok += c;
            else {
                if (!tok.empty()) labels.push_back(std::stoll(tok));
                tok.clear();
            }
        if (!tok.empty()) labels.push_back(std::stoll(tok));
        std::cout << Segment::canonicalize(std::span<const long long>(labels)).to_string() << "\n";
        return kExitOk;
    }
    if (op == "restrict") {
        InfinitePartition x = InfinitePartition::parse(a);
        std::cout << x.restrict_to(restrict_to).to_string() << "\n";
        return kExitOk;
    }
    if (op == "glue") {
        if (looks_like_segment(a)) {
            std::cout << glue_initial(Segment::parse(a), restrict_to).to_string() << "\n";
        } else {
            InfinitePartition g = glue_initial(InfinitePartition::parse(a), restrict_to);
            std::cout << g.to_string() << "\n";
        }
        return kExitOk;
    }
    if (op == "meet") {
        if (looks_like_segment(a) != looks_like_segment(b))
            throw std::invalid_argument("meet needs two segments or two partition expressions");
        if (looks_like_segment(a)) {
            std::cout << meet(Segment::parse(a), Segment::parse(b)).to_string() << "\n";
        } else {
            InfinitePartition m = meet(InfinitePartition::parse(a), InfinitePartition::parse(b));
            std::cout << m.to_string() << "\n";
            if (restrict_to > 0) std::cout << m.restrict_to(restrict_to).to_string() << "\n";
        }
        return kExitOk;
    }
    if (op == "coarser") {
        Verdict v = [&] {
            if (looks_like_segment(a) && looks_like_segment(b))
                return is_coarser(Segment::parse(a), Segment::parse(b));
            if (looks_like_segment(a))
                return is_coarser(Segment::parse(a), InfinitePartition::parse(b));
            return is_coarser(InfinitePartition::parse(a), InfinitePartition::parse(b), horizon);
        }();
        return report_verdict(v, as_json);
    }
    if (op == "star") {
        Verdict v = coarser_star(InfinitePartition::parse(a), InfinitePartition::parse(b), horizon);
        return report_verdict(v, as_json);
    }
    throw std::invalid_argument("unknown part operation: " + op);
}

// ---- game play (interactive) ----

int run_game_play(const std::string& strategy_file, int depth, int cap, int display) {
    StrategyI one(SegmentIndexedFamily::parse_text(read_file(strategy_file)));
    bool tty = isatty(STDOUT_FILENO);
    Transcript t;
    std::optional<Segment> last;
    for (int n = 1; n <= depth; ++n) {
        InfinitePartition x = one.next(last);
        t.push_x(x);
        std::cout << "Player I plays: " << x.to_string() << "\n";
        std::cout << "  restricted to " << display << ": "
                  << colored_rgs(x.restrict_to(display), tty) << "\n";
        while (true) {
            std::cout << "move " << n << "> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                std::cout << "\nend of input; game aborted\n";
                return kExitOk;
            }
            if (line == "quit" || line == "q") {
                std::cout << "game aborted\n";
                return kExitOk;
            }
            Segment s;
            try {
                s = Segment::parse(line);
            } catch (const std::exception& e) {
                std::cout << "cannot read move: " << e.what() << "\n";
                continue;
            }
            if (s.domain() > cap) {
                std::cout << "move rejected: domain cap " << cap << " exceeded\n";
                continue;
            }
            Verdict v = validate_move(t, s);
            if (!v.is_holds()) {
                std::cout << "move rejected: " << v.note() << "\n";
                continue;
            }
            t.push_s(s, v);
            last = s;
            break;
        }
    }
    std::cout << "game complete\n" << t.to_text();
    std::cout << "limit prefix: " << limit_prefix(t).to_string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partlab: finite combinatorics of partitions of omega"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit structured JSON output");

    // part
    auto* part = app.add_subcommand("part", "partition algebra: meet, coarser, glue, restrict, star, canon");
    std::string part_op, part_a, part_b;
    int part_h = kDefaultHorizon, part_n = 0;
    part->add_option("op", part_op, "meet|coarser|star|glue|restrict|canon")->required();
    part->add_option("a", part_a, "segment or partition expression")->required();
    part->add_option("b", part_b, "second argument");
    part->add_option("--horizon", part_h, "horizon for verdicts");
    part->add_option("--n", part_n, "glue bound / restriction length");

    // enum
    auto* enm = app.add_subcommand("enum", "enumerate bounded segment families");
    int enum_k = 0, enum_bound = -1, enum_dom = -1;
    std::string enum_of, enum_within;
    enm->add_option("--k", enum_k, "number of blocks")->required();
    enm->add_option("--bound", enum_bound, "domain bound (inclusive)");
    enm->add_option("--dom", enum_dom, "exact domain");
    enm->add_option("--of", enum_of, "filter: u* coarser than this partition");
    enm->add_option("--within", enum_within, "filter: this segment initial in u");

    // search
    auto* search = app.add_subcommand("search", "dual-Ramsey witness searches");
    std::string search_kind, search_coloring, search_base = "singletons";
    int search_bound = 8, search_blocks = 0, search_depth = 0, search_k = -1;
    search->add_option("kind", search_kind, "dr|scp")->required();
    search->add_option("--coloring", search_coloring, "coloring file or rule:...")->required();
    search->add_option("--base", search_base, "base partition expression");
    search->add_option("--bound", search_bound, "domain bound");
    search->add_option("--blocks", search_blocks, "target blocks (dr)");
    search->add_option("--depth", search_depth, "levels (scp)");
    search->add_option("--k", search_k, "family arity / level base");

    // respect
    auto* respect = app.add_subcommand("respect", "respects/disregards classification and search");
    std::string respect_op, respect_f, respect_x, respect_base = "singletons";
    int respect_h = kDefaultHorizon, respect_bound = 8, respect_blocks = 3;
    respect->add_option("op", respect_op, "classify|search")->required();
    respect->add_option("--f", respect_f, "surjection expression")->required();
    respect->add_option("--x", respect_x, "partition (classify)");
    respect->add_option("--base", respect_base, "base partition (search)");
    respect->add_option("--horizon", respect_h, "horizon");
    respect->add_option("--bound", respect_bound, "domain bound (search)");
    respect->add_option("--blocks", respect_blocks, "target blocks (search)");

    // filter
    auto* filter = app.add_subcommand("filter", "finitely generated partition filters");
    std::string filter_op, filter_file, filter_left, filter_right, filter_x, filter_f, filter_out;
    int filter_h = kDefaultHorizon;
    filter->add_option("op", filter_op, "member|push|preimage|interleave|below|proper")->required();
    filter->add_option("--filter", filter_file, "filter file");
    filter->add_option("--left", filter_left, "left filter file");
    filter->add_option("--right", filter_right, "right filter file");
    filter->add_option("--x", filter_x, "queried partition expression");
    filter->add_option("--f", filter_f, "surjection expression");
    filter->add_option("-o,--out", filter_out, "output filter file");
    filter->add_option("--horizon", filter_h, "horizon");

    // color
    auto* color = app.add_subcommand("color", "build coloring tables from rules");
    std::string color_op, color_rule, color_out;
    int color_k = 2, color_bound = 6;
    color->add_option("op", color_op, "build")->required();
    color->add_option("--rule", color_rule, "rule:membership(...)|rule:lemma1(...)|rule:constant(...)")->required();
    color->add_option("--k", color_k, "table arity");
    color->add_option("--bound", color_bound, "table domain bound");
    color->add_option("-o,--out", color_out, "output file (default stdout)");

    // game
    auto* game = app.add_subcommand("game", "referee: simulated or interactive play");
    std::string game_op, game_strategy, game_follow, game_u, game_ext;
    int game_depth = 4, game_cap = 64, game_display = 16, game_h = kDefaultHorizon;
    game->add_option("op", game_op, "sim|play")->required();
    game->add_option("--strategy", game_strategy, "Player I strategy file")->required();
    game->add_option("--follow", game_follow, "Player II follows this partition (sim)");
    game->add_option("--depth", game_depth, "rounds to play");
    game->add_option("--cap", game_cap, "per-move domain cap");
    game->add_option("--display", game_display, "display horizon (play)");
    game->add_option("--u", game_u, "filter file for the winner check (sim)");
    game->add_option("--extension", game_ext, "declared limit extension (sim)");
    game->add_option("--horizon", game_h, "winner-check horizon");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*part) {
            int n = part_n;
            if ((part_op == "glue" || part_op == "restrict") && part->count("--n") == 0) {
                if (part_b.empty()) throw std::invalid_argument(part_op + " needs a bound");
                n = std::stoi(part_b);
            }
            return run_part(part_op, part_a, part_b, part_h, n, as_json);
        }
        if (*enm) {
            FamilyFilter ff;
            if (!enum_of.empty()) ff.of = InfinitePartition::parse(enum_of);
            if (!enum_within.empty()) ff.within = Segment::parse(enum_within);
            bool exact = enum_dom >= 0;
            int bound = exact ? enum_dom : enum_bound;
            if (bound < 0) throw std::invalid_argument("enum needs --bound or --dom");
            auto fam = enumerate_segments(enum_k, bound, ff, exact);
            if (as_json) {
                json arr = json::array();
                fam.for_each([&](const Segment& s) {
                    arr.push_back(s.to_string());
                    return true;
                });
                std::cout << arr.dump() << "\n";
            } else {
                fam.for_each([&](const Segment& s) {
                    std::cout << s.to_string() << "\n";
                    return true;
                });
            }
            return kExitOk;
        }
        if (*search) {
            Coloring pi = load_coloring(search_coloring);
            InfinitePartition base = InfinitePartition::parse(search_base);
            WitnessResult r;
            if (search_kind == "dr") {
                if (search_blocks <= 0) throw std::invalid_argument("search dr needs --blocks");
                r = dr_witness_search(pi, base, search_bound, search_blocks, search_k);
            } else if (search_kind == "scp") {
                if (search_depth <= 0) throw std::invalid_argument("search scp needs --depth");
                int k = search_k >= 0 ? search_k : pi.arity().value_or(1) - 1;
                r = scp_witness_search(pi, base, search_bound, search_depth, k);
            } else {
                throw std::invalid_argument("unknown search kind: " + search_kind);
            }
            if (as_json) {
                json j;
                j["found"] = r.found;
                if (r.found) {
                    j["witness"] = r.witness.to_string();
                    j["color"] = r.color;
                    j["degenerate"] = r.degenerate;
                }
                j["candidates"] = r.candidates;
                std::cout << j.dump() << "\n";
            } else if (r.found) {
                std::cout << "witness " << r.witness.to_string() << " color " << r.color
                          << (r.degenerate ? " (degenerate)" : "") << "\n";
            } else {
                std::cout << "exhausted after " << r.candidates << " candidates\n";
            }
            return r.found ? kExitOk : kExitNegative;
        }
        if (*respect) {
            Surjection f = Surjection::parse(respect_f);
            if (respect_op == "classify") {
                if (respect_x.empty()) throw std::invalid_argument("respect classify needs --x");
                RespectVerdict rv = classify_respect(f, InfinitePartition::parse(respect_x), respect_h);
                if (as_json) {
                    json j{{"class", rv.label_text()},
                           {"horizon", rv.horizon},
                           {"exact", rv.exact},
                           {"note", rv.note}};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << rv.label_text() << (rv.exact ? "" : " (at horizon)") << " [" << rv.note
                              << "]\n";
                }
                return kExitOk;
            }
            if (respect_op == "search") {
                RespectWitness rw =
                    respect_witness_search(f, InfinitePartition::parse(respect_base), respect_bound,
                                           respect_blocks);
                if (as_json) {
                    json j;
                    j["found"] = rw.search.found;
                    if (rw.search.found) {
                        j["witness"] = rw.search.witness.to_string();
                        j["color"] = rw.search.color;
                        j["class"] = rw.recheck.label_text();
                        j["consistent"] = rw.consistent;
                    }
                    std::cout << j.dump() << "\n";
                } else if (rw.search.found) {
                    std::cout << "witness " << rw.search.witness.to_string() << " color "
                              << rw.search.color << " classified " << rw.recheck.label_text() << "\n";
                } else {
                    std::cout << "exhausted\n";
                }
                return rw.search.found ? kExitOk : kExitNegative;
            }
            throw std::invalid_argument("unknown respect operation: " + respect_op);
        }
        if (*filter) {
            if (filter_op == "member") {
                FilterGens F = load_filter(filter_file, filter_h);
                Verdict v = F.member(InfinitePartition::parse(filter_x), filter_h);
                return report_verdict(v, as_json);
            }
            if (filter_op == "proper") {
                FilterGens F = load_filter(filter_file, filter_h);
                return report_verdict(F.proper(filter_h), as_json);
            }
            if (filter_op == "push" || filter_op == "preimage") {
                FilterGens F = load_filter(filter_file, filter_h);
                Surjection f = Surjection::parse(filter_f);
                FilterGens out = filter_op == "push" ? push_filter(f, F) : preimage_filter(f, F);
                if (filter_out.empty()) std::cout << out.to_text();
                else write_file(filter_out, out.to_text());
                return kExitOk;
            }
            if (filter_op == "interleave") {
                FilterGens D = load_filter(filter_left, filter_h);
                FilterGens E = load_filter(filter_right, filter_h);
                FilterGens out = interleave_filters(D, E);
                if (filter_out.empty()) std::cout << out.to_text();
                else write_file(filter_out, out.to_text());
                return kExitOk;
            }
            if (filter_op == "below") {
                FilterGens F = load_filter(filter_left, filter_h);
                FilterGens G = load_filter(filter_right, filter_h);
                Verdict v = below_check(F, G, Surjection::parse(filter_f), filter_h);
                return report_verdict(v, as_json);
            }
            throw std::invalid_argument("unknown filter operation: " + filter_op);
        }
        if (*color) {
            if (color_op != "build") throw std::invalid_argument("unknown color operation: " + color_op);
            Coloring rule = Coloring::parse_rule(color_rule);
            std::map<Segment, int> table;
            enumerate_segments(color_k, color_bound).for_each([&](const Segment& u) {
                table[u] = rule.color_of(u);
                return true;
            });
            Coloring out = Coloring::from_table(color_k, color_bound, rule.colors(), std::move(table));
            if (color_out.empty()) std::cout << out.to_text();
            else write_file(color_out, out.to_text());
            return kExitOk;
        }
        if (*game) {
            if (game_op == "play") return run_game_play(game_strategy, game_depth, game_cap, game_display);
            if (game_op != "sim") throw std::invalid_argument("unknown game operation: " + game_op);
            if (game_follow.empty()) throw std::invalid_argument("game sim needs --follow");
            StrategyI one(SegmentIndexedFamily::parse_text(read_file(game_strategy)));
            FollowStrategy two{InfinitePartition::parse(game_follow)};
            PlayResult pr = play(one, two, game_depth, game_cap);
            std::cout << pr.transcript.to_text();
            if (!pr.completed) {
                std::cout << "aborted at move " << pr.aborted_move << " (player " << pr.offender
                          << "): " << pr.reason << "\n";
                return kExitNegative;
            }
            std::cout << "limit prefix: " << limit_prefix(pr.transcript).to_string() << "\n";
            if (!game_u.empty()) {
                if (game_ext.empty()) throw std::invalid_argument("winner check needs --extension");
                FilterGens U = load_filter(game_u, game_h);
                Verdict v = winner_check(pr.transcript, U, InfinitePartition::parse(game_ext), game_h);
                std::cout << (v.is_holds() ? "Player I wins"
                              : v.is_fails() ? "Player II wins"
                                             : "undecided") << ": " << v.to_string() << "\n";
                return verdict_exit(v);
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
