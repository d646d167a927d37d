#include "weylord/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "weylord/io.hpp"

namespace weylord::cli {

namespace {

struct Options {
    std::string format = "text";
    std::uint64_t max_words = default_max_words;
    std::uint64_t max_perms = default_max_perms;
    unsigned jobs = 1;

    // normal-order, board
    std::string word;
    std::string method = "rook";
    // word, rook
    std::string heights;
    unsigned u = 0;
    unsigned d = 0;
    bool naive = false;
    // tsym, poly, moments
    unsigned n = 0;
    bool brute = false;
    bool closed = false;
    std::string l;
    // verify
    std::string identity;
    std::optional<unsigned> n_max;
    std::vector<std::string> ls;
    std::optional<std::string> verify_word;
};

class Output {
public:
    explicit Output(const Options& opt) : json_(opt.format == "json") {}

    bool json() const { return json_; }
    void emit(const std::string& text, const nlohmann::json& value) {
        out_ << (json_ ? value.dump() : text) << '\n';
    }
    std::ostringstream& stream() { return out_; }

private:
    bool json_;
    std::ostringstream out_;
};

int cmd_normal_order(const Options& opt, Output& out) {
    const Word w(opt.word);
    if (opt.method == "rook") {
        const NormalForm f = normal_order_rook(w);
        out.emit(to_string(f), to_json(f));
        return exit_ok;
    }
    if (opt.method == "rewrite") {
        const NormalForm f = normal_order_rewrite(w);
        out.emit(to_string(f), to_json(f));
        return exit_ok;
    }
    const NormalForm by_rook = normal_order_rook(w);
    const NormalForm by_rewrite = normal_order_rewrite(w);
    if (by_rook == by_rewrite) {
        out.emit(to_string(by_rook), to_json(by_rook));
        return exit_ok;
    }
    out.emit("rook: " + to_string(by_rook) + "\nrewrite: " + to_string(by_rewrite),
             {{"rook", to_json(by_rook)}, {"rewrite", to_json(by_rewrite)}});
    return exit_failed;
}

int cmd_board(const Options& opt, Output& out) {
    const FerrersBoard b = word_to_board(Word(opt.word));
    out.emit(to_string(b), to_json(b, rook_numbers(b)));
    return exit_ok;
}

int cmd_word(const Options& opt, Output& out) {
    const Word w = board_to_word(parse_board(opt.heights), opt.u, opt.d);
    out.emit(w.letters(), {{"word", w.letters()}});
    return exit_ok;
}

int cmd_rook(const Options& opt, Output& out) {
    const FerrersBoard b = parse_board(opt.heights);
    const RookVector r = opt.naive ? rook_numbers_naive(b) : rook_numbers(b);
    out.emit(to_string(r.r), to_json(b, r));
    return exit_ok;
}

int cmd_tsym(const Options& opt, Output& out) {
    const NormalForm f = opt.brute ? symmetric_T_brute(opt.n, opt.max_words) : symmetric_T_closed(opt.n);
    out.emit(to_string(f), to_json(f));
    return exit_ok;
}

int cmd_moments(const Options& opt, Output& out) {
    const auto mu = moments_from_recurrence(opt.n);
    out.emit(to_string(mu), to_json(mu));
    return exit_ok;
}

int emit_poly(const Polynomial& p, Output& out) {
    out.emit(to_string(p), to_json(p));
    return exit_ok;
}

int cmd_verify(const Options& opt, Output& out) {
    std::vector<Rational> ls;
    for (const auto& text : opt.ls) ls.push_back(parse_rational(text));
    if (ls.empty()) ls = default_l_samples();

    std::vector<VerificationReport> reports;
    if (opt.verify_word) {
        if (opt.identity != "eq21") throw std::invalid_argument("--word applies to 'verify eq21' only");
        reports.push_back(verify_eq21(Word(*opt.verify_word)));
    } else if (opt.identity == "all") {
        reports = verify_all(opt.n_max.value_or(6), ls, {opt.max_words, opt.max_perms}, opt.jobs);
    } else {
        const unsigned n_max = opt.n_max.value_or(identity_range(opt.identity).default_max);
        reports = verify_identity(opt.identity, n_max, ls, {opt.max_words, opt.max_perms});
    }

    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
    if (out.json()) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& r : reports) all.push_back(to_json(r));
        out.stream() << all.dump() << '\n';
    } else {
        for (const auto& r : reports) out.stream() << to_text(r) << '\n';
        out.stream() << (reports.size() - failed) << "/" << reports.size() << " passed\n";
    }
    return failed ? exit_failed : exit_ok;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
    Options opt;
    CLI::App app{"Exact normal ordering in the Weyl algebra DU - UD = 1", "weylord"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-words", opt.max_words, "Cap on brute-force word enumerations");
    app.add_option("--max-perms", opt.max_perms, "Cap on permutation enumerations");
    app.add_option("--jobs", opt.jobs, "Worker count for 'verify all'")->check(CLI::Range(1u, 64u));

    auto* normal = app.add_subcommand("normal-order", "Normal form of a word over {D,U}");
    normal->add_option("word", opt.word, "Word over D and U")->required();
    normal->add_option("--method", opt.method, "rook, rewrite or both")->check(CLI::IsMember({"rook", "rewrite", "both"}));

    auto* board = app.add_subcommand("board", "Ferrers board of a word");
    board->add_option("word", opt.word, "Word over D and U")->required();

    auto* word = app.add_subcommand("word", "Word of a board inside a --u by --d box");
    word->add_option("heights", opt.heights, "Comma-separated column heights or '-'")->required();
    word->add_option("--u", opt.u, "Number of U letters")->required();
    word->add_option("--d", opt.d, "Number of D letters")->required();

    auto* rook = app.add_subcommand("rook", "Rook numbers of a board");
    rook->add_option("heights", opt.heights, "Comma-separated column heights or '-'")->required();
    rook->add_flag("--naive", opt.naive, "Count placements exhaustively");

    auto* tsym = app.add_subcommand("tsym", "Sum of all words with n D's and n U's");
    tsym->add_option("n", opt.n)->required();
    auto* brute = tsym->add_flag("--brute", opt.brute, "Sum normal forms of every word");
    auto* closed = tsym->add_flag("--closed", opt.closed, "Closed form (default)");
    brute->excludes(closed);

    auto* poly = app.add_subcommand("poly", "Polynomial families");
    poly->require_subcommand(1);
    auto* poly_s = poly->add_subcommand("S", "Meixner-Pollaczek S_n");
    poly_s->add_option("n", opt.n)->required();
    auto* poly_hahn = poly->add_subcommand("hahn", "Continuous Hahn P_n(x; l)");
    poly_hahn->add_option("n", opt.n)->required();
    poly_hahn->add_option("--l", opt.l, "Rational parameter")->required();
    auto* poly_stirling = poly->add_subcommand("stirling", "t(t-1)...(t-n+1) with Stirling coefficients");
    poly_stirling->add_option("n", opt.n)->required();
    auto* poly_secant = poly->add_subcommand("secant", "Secant numbers E_0, E_2, ..., E_2N");
    poly_secant->add_option("N", opt.n)->required();

    auto* moments = app.add_subcommand("moments", "Moments of S_n by weighted Dyck paths");
    moments->add_option("N", opt.n)->required();

    std::vector<std::string> verify_names = identity_names();
    verify_names.push_back("all");
    auto* verify = app.add_subcommand("verify", "Check identities exactly");
    verify->add_option("identity", opt.identity)->required()->check(CLI::IsMember(verify_names));
    verify->add_option("--n-max", opt.n_max, "Largest parameter");
    verify->add_option("--l", opt.ls, "Values of l for bd2")->expected(1, -1);
    verify->add_option("--word", opt.verify_word, "Single word for eq21");

    Result result;
    std::ostringstream out_stream, err_stream;
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out_stream, err_stream);
        result.out = out_stream.str();
        result.err = err_stream.str();
        result.exit_code = code == 0 ? exit_ok : exit_usage;
        return result;
    }

    if (opt.max_words > default_max_words)
        err_stream << "warning: --max-words " << opt.max_words << " is above the default " << default_max_words
                   << "; brute-force runs may be slow\n";
    if (opt.max_perms > default_max_perms)
        err_stream << "warning: --max-perms " << opt.max_perms << " is above the default " << default_max_perms
                   << "; permutation runs may be slow\n";

    Output out(opt);
    try {
        if (*normal) {
            result.exit_code = cmd_normal_order(opt, out);
        } else if (*board) {
            result.exit_code = cmd_board(opt, out);
        } else if (*word) {
            result.exit_code = cmd_word(opt, out);
        } else if (*rook) {
            result.exit_code = cmd_rook(opt, out);
        } else if (*tsym) {
            result.exit_code = cmd_tsym(opt, out);
        } else if (*poly_s) {
            result.exit_code = emit_poly(meixner_S_recurrence(opt.n), out);
        } else if (*poly_hahn) {
            result.exit_code = emit_poly(continuous_hahn_P(opt.n, parse_rational(opt.l)), out);
        } else if (*poly_stirling) {
            std::vector<GaussianRational> row;
            for (unsigned k = 0; k <= opt.n; ++k) row.emplace_back(Rational(stirling_first(opt.n, k)));
            result.exit_code = emit_poly(Polynomial(std::move(row)), out);
        } else if (*poly_secant) {
            const auto e = secant_numbers(opt.n);
            out.emit(to_string(e), to_json(e));
        } else if (*moments) {
            result.exit_code = cmd_moments(opt, out);
        } else if (*verify) {
            result.exit_code = cmd_verify(opt, out);
        }
    } catch (const std::exception& e) {
        // Malformed words, boards or rationals, inadmissible l, parameters
        // above a cap.
        err_stream << "error: " << e.what() << '\n';
        result.exit_code = exit_usage;
    }
    result.out = out.stream().str();
    result.err = err_stream.str();
    return result;
}

}  // namespace weylord::cli
