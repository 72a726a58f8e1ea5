#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "liesq/verify.hpp"

#ifndef LIESQ_DEFAULT_CORPUS
#define LIESQ_DEFAULT_CORPUS "data/golden/corpus.json"
#endif

namespace {

using namespace liesq;

Int budget_for(bool force) {
    return force ? std::numeric_limits<Int>::max() / 4 : kDefaultCharBudget;
}

void add_format(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

int cmd_roots(const std::string& sys, const std::string& fmt) {
    const RootSystem& rs = get_system(parse_system(sys));
    if (fmt == "json") {
        nlohmann::json js;
        js["system"] = system_name(rs.id);
        js["rank"] = rs.rank;
        js["ambient"] = rs.amb;
        js["simple_roots"] = nlohmann::json::array();
        for (const auto& a : rs.simples) js["simple_roots"].push_back(eps_str(a, rs.L));
        js["fundamental_weights"] = nlohmann::json::array();
        for (const auto& b : rs.fund) js["fundamental_weights"].push_back(eps_str(b, rs.L));
        js["positive_even_roots"] = rs.pos.size();
        js["positive_odd_roots"] = rs.pos_odd.size();
        js["rho"] = eps_str(rs.rho, rs.L);
        const auto t = rs.table1_row();
        js["rho_norm_sq"] = rat_str(t.rho_norm_sq);
        js["max_coroot_norm_sq"] = rat_str(t.max_coroot_norm_sq);
        js["dim_g"] = t.dim_g;
        js["adjoint_weight"] = rs.adjoint;
        std::cout << js.dump(2) << '\n';
        return 0;
    }
    std::cout << "system: " << system_name(rs.id) << '\n';
    std::cout << "rank: " << rs.rank << '\n';
    std::cout << "ambient dimension: " << rs.amb << '\n';
    for (std::size_t i = 0; i < rs.simples.size(); ++i)
        std::cout << "alpha" << i + 1 << " = e:" << eps_str(rs.simples[i], rs.L) << '\n';
    for (std::size_t i = 0; i < rs.fund.size(); ++i)
        std::cout << "beta" << i + 1 << " = e:" << eps_str(rs.fund[i], rs.L) << '\n';
    std::cout << "positive roots: " << rs.pos.size() << " even, " << rs.pos_odd.size()
              << " odd\n";
    std::cout << "rho = e:" << eps_str(rs.rho, rs.L) << '\n';
    const auto t = rs.table1_row();
    std::cout << "rho_norm_sq = " << rat_str(t.rho_norm_sq) << '\n';
    std::cout << "max_coroot_norm_sq = " << rat_str(t.max_coroot_norm_sq) << '\n';
    std::cout << "dim_g = " << t.dim_g << '\n';
    std::cout << "adjoint highest weight: " << weight_str(rs.adjoint) << '\n';
    return 0;
}

int cmd_dim(const std::string& sys, const std::string& weight) {
    const RootSystem& rs = get_system(parse_system(sys));
    std::cout << dim_irrep(rs, parse_weight(rs, weight)).get_str() << '\n';
    return 0;
}

int cmd_char(const std::string& sys, const std::string& weight, bool force,
             const std::string& fmt) {
    const RootSystem& rs = get_system(parse_system(sys));
    const auto f = parse_weight(rs, weight);
    const GradedChar& c = irrep_character(rs, f, budget_for(force));
    if (fmt == "json")
        std::cout << character_json(c).dump(2) << '\n';
    else
        std::cout << dump_character(c);
    return 0;
}

int cmd_square(const std::string& sys, const std::string& weight, const std::string& kind,
               bool force, const std::string& fmt) {
    const RootSystem& rs = get_system(parse_system(sys));
    const auto f = parse_weight(rs, weight);
    const SquareKind k = parse_kind(kind);
    const Int budget = budget_for(force);
    const GradedChar& c = irrep_character(rs, f, budget);
    auto [s, a] = square_chars(c);
    const Decomposition d = decompose(k == SquareKind::Symmetric ? s : a, budget);
    if (fmt == "json")
        std::cout << decomposition_json(d).dump(2) << '\n';
    else
        std::cout << decomposition_text(d);
    return 0;
}

int cmd_smallreps(const std::string& sys, const std::string& fmt) {
    const RootSystem& rs = get_system(parse_system(sys));
    const auto reps = enumerate_small_reps(rs);
    if (fmt == "json") {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& [f, d] : reps)
            js.push_back({{"weight_f", f}, {"dim", d.get_si()}});
        std::cout << js.dump(2) << '\n';
        return 0;
    }
    for (const auto& [f, d] : reps)
        std::cout << weight_str(f) << ' ' << d.get_str() << '\n';
    return 0;
}

int cmd_classify(const std::string& sys, const std::string& kind, const std::string& fmt) {
    const RootSystem& rs = get_system(parse_system(sys));
    const Classification cls = classify_squares(rs, parse_kind(kind));
    if (fmt == "json") {
        nlohmann::json js;
        js["system"] = system_name(rs.id);
        js["kind"] = kind_name(cls.kind);
        js["candidates"] = cls.candidates.size();
        js["hits"] = nlohmann::json::array();
        for (const auto& h : cls.hits)
            js["hits"].push_back({{"weight_f", h.f},
                                  {"status", status_name(h.status)},
                                  {"delta", delta_of(h.status)},
                                  {"decomposition", decomposition_json(h.dec)}});
        std::cout << js.dump(2) << '\n';
        return 0;
    }
    std::cout << system_name(rs.id) << ' ' << kind_name(cls.kind) << ": "
              << cls.candidates.size() << " candidates, " << cls.hits.size() << " hits\n";
    for (const auto& h : cls.hits) {
        std::cout << weight_str(h.f) << ' ' << status_name(h.status)
                  << " delta=" << delta_of(h.status) << '\n';
        std::istringstream lines(decomposition_text(h.dec));
        for (std::string line; std::getline(lines, line);) std::cout << "  " << line << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& corpus_path, int rank_bound, const std::string& fmt) {
    const Corpus corpus = load_corpus(corpus_path);
    VerifyOptions opt;
    opt.rank_bound = rank_bound > 0 ? rank_bound : corpus.rank_bound;
    Verifier v(corpus, opt);
    const auto results = v.run_all();
    bool ok = true;
    if (fmt == "json") {
        nlohmann::json js = nlohmann::json::array();
        for (const auto& r : results) {
            ok &= r.pass;
            js.push_back({{"id", r.id},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
        }
        std::cout << js.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            ok &= r.pass;
            std::cout << criterion_line(r) << '\n';
        }
        std::cout << (ok ? "all criteria pass" : "FAILURES present") << '\n';
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimensions, characters, and symmetric/alternating square"
                 " decompositions for simple root systems and their BC superanalogue"};
    app.require_subcommand(1);

    std::string sys, weight, kind, fmt_roots = "text", fmt_char = "text", fmt_square = "text",
                                  fmt_small = "text", fmt_classify = "text", fmt_verify = "text";
    bool force_char = false, force_square = false;
    std::string corpus_path = LIESQ_DEFAULT_CORPUS;
    int rank_bound = 0;

    auto* roots = app.add_subcommand("roots", "show root-system invariants");
    roots->add_option("system", sys, "system label, e.g. B3 or BC2")->required();
    add_format(roots, fmt_roots);

    auto* dim = app.add_subcommand("dim", "dimension of the irreducible representation");
    dim->add_option("system", sys)->required();
    dim->add_option("weight", weight, "highest weight (f:, e: or mu: form)")->required();

    auto* chr = app.add_subcommand("char", "dominant weight multiplicities");
    chr->add_option("system", sys)->required();
    chr->add_option("weight", weight)->required();
    chr->add_flag("--force", force_char, "ignore the dominant-weight budget");
    add_format(chr, fmt_char);

    auto* square = app.add_subcommand("square", "decompose a square of an irreducible");
    square->add_option("system", sys)->required();
    square->add_option("weight", weight)->required();
    square->add_option("--kind", kind, "sym or alt")->required();
    square->add_flag("--force", force_square, "ignore the dominant-weight budget");
    add_format(square, fmt_square);

    auto* small = app.add_subcommand("smallreps", "weights with dimension at most dim_g");
    small->add_option("system", sys)->required();
    add_format(small, fmt_small);

    auto* classify = app.add_subcommand("classify", "find irreducible-or-almost squares");
    classify->add_option("system", sys)->required();
    classify->add_option("--kind", kind, "sym or alt")->required();
    add_format(classify, fmt_classify);

    auto* verify = app.add_subcommand("verify", "run the release checks against the corpus");
    verify->add_option("--corpus", corpus_path, "corpus JSON path")->capture_default_str();
    verify->add_option("--rank-bound", rank_bound, "classical rank sweep bound");
    add_format(verify, fmt_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (roots->parsed()) return cmd_roots(sys, fmt_roots);
        if (dim->parsed()) return cmd_dim(sys, weight);
        if (chr->parsed()) return cmd_char(sys, weight, force_char, fmt_char);
        if (square->parsed()) return cmd_square(sys, weight, kind, force_square, fmt_square);
        if (small->parsed()) return cmd_smallreps(sys, fmt_small);
        if (classify->parsed()) return cmd_classify(sys, kind, fmt_classify);
        if (verify->parsed()) return cmd_verify(corpus_path, rank_bound, fmt_verify);
    } catch (const liesq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const bool usage = e.kind() == liesq::err::ParseError ||
                           e.kind() == liesq::err::InvalidRank ||
                           e.kind() == liesq::err::IndexOutOfRange;
        return usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
