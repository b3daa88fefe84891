#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rdp/errors.hpp"
#include "rdp/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw rdp::parse_error("cannot open file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

// stdin keeps the default name "G"; files are named by their stem.
rdp::DualGraph load_graph(const std::string& path) {
    std::string name = "G";
    if (path != "-") {
        const std::string stem = std::filesystem::path(path).stem().string();
        if (!stem.empty()) name = stem;
    }
    return rdp::parse_graph(read_input(path), name);
}

long long parse_int(std::string_view s, const std::string& what) {
    long long v = 0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end) throw std::invalid_argument("invalid " + what + ": " + std::string(s));
    return v;
}

// A<n>, D<n>, E<6|7|8>, or T<p>,<q>,<r>
rdp::DualGraph generate(const std::string& token) {
    if (!token.empty() && token[0] == 'T') {
        const std::string body = token.substr(1);
        std::array<long long, 3> v{};
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            const std::size_t comma = body.find(',', start);
            const bool last = (i == 2);
            if (last != (comma == std::string::npos))
                throw std::invalid_argument("expected T<p>,<q>,<r>: " + token);
            const std::string_view part = std::string_view(body).substr(
                start, last ? std::string::npos : comma - start);
            v[static_cast<std::size_t>(i)] = parse_int(part, "T-tree parameter");
            start = comma + 1;
        }
        return rdp::t_tree(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]));
    }
    if (auto t = rdp::AdeType::parse(token)) return rdp::standard_diagram(*t);
    throw std::invalid_argument("unrecognized type token: " + token +
                                " (expected A<n>, D<n>, E<6|7|8>, or T<p>,<q>,<r>)");
}

void emit(const std::string& s) { std::cout << s; }
void emit(const rdp::Json& j) { std::cout << j.dump() << '\n'; }

void emit_graph(const rdp::DualGraph& g, const std::string& format, const rdp::Json& j) {
    if (format == "dot")
        emit(rdp::to_dot(g));
    else if (format == "json")
        emit(j);
    else
        emit(rdp::render_graph(g));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice invariants of resolution dual graphs of normal surface singularities"};
    app.require_subcommand(1);

    const auto graph_formats = CLI::IsMember({"text", "json", "dot"});
    const auto data_formats = CLI::IsMember({"text", "json"});

    std::string check_file, check_fmt = "text";
    auto* cmd_check = app.add_subcommand("check", "full report: definiteness, type, Z_num, p_a, multiplicity");
    cmd_check->add_option("file", check_file, "graph file, or - for stdin")->required();
    cmd_check->add_option("--format", check_fmt, "text or json")->check(data_formats);

    std::string classify_file, classify_fmt = "text";
    auto* cmd_classify = app.add_subcommand("classify", "ADE type of the graph, or why it is not one");
    cmd_classify->add_option("file", classify_file, "graph file, or - for stdin")->required();
    cmd_classify->add_option("--format", classify_fmt, "text or json")->check(data_formats);

    std::string zn_file, zn_fmt = "text";
    auto* cmd_zn = app.add_subcommand("zn", "fundamental (numerical) cycle and its arithmetic genus");
    cmd_zn->add_option("file", zn_file, "graph file, or - for stdin")->required();
    cmd_zn->add_option("--format", zn_fmt, "text or json")->check(data_formats);

    std::string rational_file, rational_fmt = "text";
    auto* cmd_rational = app.add_subcommand("rational", "Artin rationality: p_a(Z_num) = 0");
    cmd_rational->add_option("file", rational_file, "graph file, or - for stdin")->required();
    cmd_rational->add_option("--format", rational_fmt, "text or json")->check(data_formats);

    std::string mult_file, mult_fmt = "text";
    auto* cmd_mult = app.add_subcommand("mult", "multiplicity -Z_num^2 of a rational singularity");
    cmd_mult->add_option("file", mult_file, "graph file, or - for stdin")->required();
    cmd_mult->add_option("--format", mult_fmt, "text or json")->check(data_formats);

    std::string gen_token, gen_fmt = "text";
    auto* cmd_gen = app.add_subcommand("gen", "emit a standard diagram: A<n>, D<n>, E<6|7|8>, T<p>,<q>,<r>");
    cmd_gen->add_option("type", gen_token, "diagram token")->required();
    cmd_gen->add_option("--format", gen_fmt, "text, json, or dot")->check(graph_formats);

    long long hj_n = 0, hj_q = 0;
    std::string hj_fmt = "text";
    auto* cmd_hj = app.add_subcommand("hj", "Hirzebruch-Jung resolution chain of the cyclic quotient (n,q)");
    cmd_hj->add_option("n", hj_n, "order of the cyclic group")->required();
    cmd_hj->add_option("q", hj_q, "weight of the second coordinate")->required();
    cmd_hj->add_option("--format", hj_fmt, "text, json, or dot")->check(graph_formats);

    std::string mckay_token, mckay_fmt = "text";
    auto* cmd_mckay = app.add_subcommand("mckay", "resolution data of C^2/G: C<n>, D~<n>, T~, O~, I~");
    cmd_mckay->add_option("group", mckay_token, "finite SL(2,C) subgroup token")->required();
    cmd_mckay->add_option("--format", mckay_fmt, "text, json, or dot")->check(graph_formats);

    std::string roots_token, roots_fmt = "text";
    auto* cmd_roots = app.add_subcommand("roots", "root system of the ADE type: count, highest root, census");
    cmd_roots->add_option("type", roots_token, "ADE token, e.g. E8")->required();
    cmd_roots->add_option("--format", roots_fmt, "text or json")->check(data_formats);

    try {
        app.parse(argc, argv);

        if (*cmd_check) {
            const rdp::DualGraph g = load_graph(check_file);
            const rdp::Report r = rdp::make_report(g);
            if (check_fmt == "json")
                emit(rdp::check_json(g, r));
            else
                emit(rdp::report_text(g, r));
        } else if (*cmd_classify) {
            const rdp::DualGraph g = load_graph(classify_file);
            const rdp::Classification c = rdp::classify(g);
            if (classify_fmt == "json")
                emit(rdp::classify_json(g, c));
            else
                emit(rdp::classification_text(c) + "\n");
        } else if (*cmd_zn) {
            const rdp::DualGraph g = load_graph(zn_file);
            const rdp::Cycle z = rdp::fundamental_cycle(g);
            const rdp::SymMatrix m = rdp::intersection_matrix(g);
            const rdp::Int self = rdp::pairing(z, z, m);
            const rdp::Int pa = rdp::arithmetic_genus(z, g);
            if (zn_fmt == "json")
                emit(rdp::zn_json(g, z, self, pa));
            else
                emit(rdp::zn_text(g, z, self, pa));
        } else if (*cmd_rational) {
            const rdp::DualGraph g = load_graph(rational_file);
            const rdp::Cycle z = rdp::fundamental_cycle(g);
            const rdp::Int pa = rdp::arithmetic_genus(z, g);
            if (rational_fmt == "json")
                emit(rdp::rational_json(g, pa));
            else
                emit(rdp::rational_text(pa));
        } else if (*cmd_mult) {
            const rdp::DualGraph g = load_graph(mult_file);
            const rdp::Int m = rdp::multiplicity(g);
            if (mult_fmt == "json")
                emit(rdp::mult_json(g, m));
            else
                emit(rdp::mult_text(m));
        } else if (*cmd_gen) {
            const rdp::DualGraph g = generate(gen_token);
            emit_graph(g, gen_fmt, rdp::gen_json(g));
        } else if (*cmd_hj) {
            const rdp::CyclicType t = rdp::CyclicType::make(hj_n, hj_q);
            const std::vector<long long> chain = rdp::hj_expand(t);
            const rdp::DualGraph g = rdp::chain_graph(chain);
            if (hj_fmt == "dot")
                emit(rdp::to_dot(g));
            else if (hj_fmt == "json")
                emit(rdp::hj_json(t, chain, g));
            else
                emit(rdp::hj_text(t, chain, g));
        } else if (*cmd_mckay) {
            const auto grp = rdp::FiniteSubgroup::parse(mckay_token);
            if (!grp)
                throw std::invalid_argument("unrecognized group token: " + mckay_token +
                                            " (expected C<n>, D~<n>, T~, O~, I~)");
            const rdp::AdeType t = rdp::mckay_type(*grp);
            const rdp::DualGraph g = rdp::standard_diagram(t);
            const rdp::Equation eq = rdp::invariant_equation(*grp);
            const long long order = rdp::group_order(*grp);
            if (mckay_fmt == "dot")
                emit(rdp::to_dot(g));
            else if (mckay_fmt == "json")
                emit(rdp::mckay_json(*grp, t, order, eq, g));
            else
                emit(rdp::mckay_text(*grp, t, order, eq, g));
        } else if (*cmd_roots) {
            const auto t = rdp::AdeType::parse(roots_token);
            if (!t) throw std::invalid_argument("unrecognized type token: " + roots_token + " (expected e.g. E8)");
            const rdp::CartanMatrix c = rdp::cartan_matrix(*t);
            const rdp::RootSystem rs = rdp::generate_roots(c);
            const rdp::PositiveSimple ps = rdp::positive_and_simple(rs, rdp::canonical_direction(rs.rank));
            const rdp::RootVector highest = rdp::highest_root(rs);
            const rdp::Int det = rdp::cartan_determinant(c);
            const auto census = rdp::angle_census(rs, c);
            if (roots_fmt == "json")
                emit(rdp::roots_json(*t, rs, ps.positive.size(), highest, det, census));
            else
                emit(rdp::roots_text(*t, rs, ps.positive.size(), highest, det, census));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const rdp::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const rdp::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
}
