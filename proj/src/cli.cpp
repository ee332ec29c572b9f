#include "sharp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "sharp/equations.hpp"
#include "sharp/hasse.hpp"
#include "sharp/inverses.hpp"
#include "sharp/json_io.hpp"
#include "sharp/lattice.hpp"
#include "sharp/oracle.hpp"
#include "sharp/order.hpp"

namespace sharp::cli {

namespace {

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

Matrix read_matrix(const std::string& path) { return matrix_from_json(read_json(path)); }
JordanSpec read_spec(const std::string& path) { return spec_from_json(read_json(path)); }

std::vector<Gaussian> parse_grid(const std::string& text) {
    std::vector<Gaussian> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) grid.emplace_back(Rational::parse(item));
    if (grid.empty()) throw Error(ErrorCode::ParseError, "empty grid");
    return grid;
}

Json matrix_list(const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

// A spec read from the command line carries the n×n similarity of B:
// B = P·diag(J, O)·P⁻¹.
const Matrix& b_level_p(const JordanSpec& spec, std::size_t n) {
    if (!spec.P) throw Error(ErrorCode::InvalidSpec, "spec.P (B = P·diag(J, O)·P⁻¹) is required");
    if (spec.P->rows() != n) throw Error(ErrorCode::InvalidSpec, "spec.P must be n × n");
    return *spec.P;
}

bool exact_route(const Matrix& b, const JordanSpec& spec) {
    return b.mode() == Mode::exact && spec.P && spec.P->mode() == Mode::exact;
}

void require_b_form(const Matrix& b, const JordanSpec& spec, const Tolerance& tol) {
    const std::size_t n = b.rows();
    const Matrix& p = b_level_p(spec, n);
    const Matrix full = jordan_predecessor(p, spec, Matrix::identity(spec.r(), Mode::exact), n);
    Matrix x = full, y = b;
    unify_modes(x, y);
    if (!approx_eq(x, y, tol)) throw Error(ErrorCode::PrecondViolated, "B differs from P·diag(J, O)·P⁻¹");
}

// Same Jordan data with P moved to the ΣK level of the decomposition.
JordanSpec sigma_k_spec(const HSDecomposition& hs, const JordanSpec& spec, const Tolerance& tol) {
    JordanSpec local = spec;
    local.P = sigma_k_similarity(hs, b_level_p(spec, hs.n()));
    if (spec.r() != hs.r) throw Error(ErrorCode::InvalidSpec, "Jordan size differs from rank(B)");
    if (!validate_similarity(*local.P, local, sigma_k(hs, tol).product, tol))
        throw Error(ErrorCode::PrecondViolated, "spec.P does not carry B to diag(J, O)");
    return local;
}

// Maps δ projectors of the spec to predecessors of B.
std::vector<Matrix> to_predecessors(const Matrix& b, const JordanSpec& spec, const std::vector<Matrix>& ts,
                                    const Tolerance& tol) {
    std::vector<Matrix> out;
    if (exact_route(b, spec)) {
        require_b_form(b, spec, tol);
        for (const auto& t : ts) out.push_back(jordan_predecessor(*spec.P, spec, t, b.rows()));
        return out;
    }
    const HSDecomposition hs = hs_decompose(b.to_float(), tol);
    const JordanSpec local = sigma_k_spec(hs, spec, tol);
    for (const auto& t : ts) out.push_back(phi_inv(psi(t, *local.P, tol), hs, tol));
    return out;
}

struct Settings {
    double rel = Tolerance{}.rel;
    double rank_factor = Tolerance{}.rank_threshold_factor;
    std::uint64_t seed = 0;
    unsigned jobs = 1;

    Tolerance tol() const {
        Tolerance t{rel, rank_factor};
        t.validate();
        return t;
    }
};

std::vector<Json> sample_projectors(const JordanSpec& spec, std::uint64_t seed, std::size_t count, unsigned jobs) {
    std::vector<Json> out(count);
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < count; i += step) {
            const CommutantProjector p = sample_delta_projector(spec, seed + i);
            Json j = to_json(p.element());
            j["matrix"] = to_json(p.matrix());
            j["rank"] = rank(p.matrix());
            out[i] = std::move(j);
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        work(0, 1);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                work(w, workers);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
    return out;
}

Json equations_solve(const Matrix& b_in, const std::optional<JordanSpec>& spec, std::size_t samples,
                     const Settings& cfg) {
    const Tolerance tol = cfg.tol();
    require_square(b_in, "equations solve");
    const std::size_t n = b_in.rows();
    if (spec && spec->r() == n && is_nonsingular(b_in, tol)) {
        const SolutionFamily fam = solve_jordan_commuting_projectors(b_in, b_level_p(*spec, n), *spec, tol);
        Json out{{"kind", std::string(to_string(fam.kind()))}, {"free_part_shape", {fam.free_part_size(), fam.free_part_size()}}};
        if (fam.members()) {
            out["finite_count"] = *fam.finite_count();
            out["members"] = matrix_list(*fam.members());
        } else {
            std::vector<Matrix> drawn;
            for (std::size_t i = 0; i < samples; ++i) drawn.push_back(fam.sample(cfg.seed + i));
            out["finite_count"] = nullptr;
            out["samples"] = matrix_list(drawn);
        }
        return out;
    }
    const Matrix b = b_in.to_float();
    const HSDecomposition hs = hs_decompose(b, tol);
    if (!sigma_k(hs, tol).nonsingular) throw Error(ErrorCode::IndexTooLarge, "B has index above 1");
    const bool ep = is_ep(b, tol);
    const std::size_t r = hs.r, m = n - r;
    Json out{{"kind", std::string(to_string(ep ? FamilyKind::EPCommuteIdempotent : FamilyKind::XBXFamily))}};
    if (ep)
        out["free_part_shape"] = {{"T", {r, r}}, {"W", {m, m}}};
    else
        out["free_part_shape"] = {{"T", {r, r}}};
    out["finite_count"] = nullptr;
    if (!spec) return out;

    const JordanSpec local = sigma_k_spec(hs, *spec, tol);
    bool finite = !ep || m <= 1;
    for (const auto& e : local.eigenvalues) finite = finite && e.count() == 1;
    std::vector<Matrix> ts;
    if (finite)
        for (const auto& c : boolean_center(local)) ts.push_back(psi(c.matrix(), *local.P, tol));
    else
        for (std::size_t i = 0; i < samples; ++i)
            ts.push_back(psi(sample_delta_projector(local, cfg.seed + i).matrix(), *local.P, tol));
    std::vector<Matrix> members;
    for (const auto& t : ts) {
        if (!ep) {
            members.push_back(solve_xbx_family(hs, t, tol));
        } else if (m == 0) {
            members.push_back(solve_ep_commute_idempotent(hs, t, Matrix::zero(0, 0, Mode::floating), tol));
        } else if (finite) {
            for (int w : {0, 1})
                members.push_back(solve_ep_commute_idempotent(hs, t, Complex(w) * Matrix::identity(1, Mode::floating), tol));
        } else {
            members.push_back(solve_ep_commute_idempotent(hs, t, Matrix::zero(m, m, Mode::floating), tol));
        }
    }
    if (finite) out["finite_count"] = members.size();
    out[finite ? "members" : "samples"] = matrix_list(members);
    return out;
}

int emit_error(std::ostream& err, const Error& e) {
    err << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations with the sharp partial order on index-1 matrices", "sharp"};
    app.require_subcommand(1);
    Settings cfg;
    app.add_option("--tol", cfg.rel, "relative tolerance for float comparisons");
    app.add_option("--rank-tol", cfg.rank_factor, "singular values at or below this fraction of σ₁ count as zero");
    app.add_option("--seed", cfg.seed, "seed for every random draw");
    app.add_option("--jobs", cfg.jobs, "worker threads for sampling")->check(CLI::PositiveNumber);

    std::string in, a_path, b_path, b1_path, b2_path, spec_path, out_path, grid_text = "-1,0,1";
    std::size_t count = 5, samples = 500, antichain = 3, order_n = 2;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::function<int()> action;

    auto* decompose = app.add_subcommand("decompose", "matrix decompositions")->require_subcommand(1);
    auto* hs_cmd = decompose->add_subcommand("hs", "B = U·[[ΣK, ΣL], [O, O]]·U* with U unitary");
    hs_cmd->add_option("--in", in, "matrix JSON")->required();
    hs_cmd->callback([&] {
        action = [&] {
            out << to_json(hs_decompose(read_matrix(in).to_float(), cfg.tol())).dump(2) << "\n";
            return 0;
        };
    });

    auto* inverse_cmd = app.add_subcommand("inverse", "generalized inverses")->require_subcommand(1);
    for (const char* kind : {"group", "mp"}) {
        auto* sub = inverse_cmd->add_subcommand(kind, kind == std::string("group") ? "group inverse" : "Moore-Penrose inverse");
        sub->add_option("--in", in, "matrix JSON")->required();
        const bool group = kind == std::string("group");
        sub->callback([&, group] {
            action = [&, group] {
                const Matrix a = read_matrix(in);
                out << to_json(group ? group_inverse(a, cfg.tol()) : moore_penrose(a, cfg.tol())).dump(2) << "\n";
                return 0;
            };
        });
    }

    auto* check = app.add_subcommand("check", "order predicates")->require_subcommand(1);
    auto* order_cmd = check->add_subcommand("order", "A ≤# B");
    order_cmd->add_option("--a", a_path, "matrix JSON")->required();
    order_cmd->add_option("--b", b_path, "matrix JSON")->required();
    order_cmd->callback([&] {
        action = [&] {
            const bool leq = sharp_leq(read_matrix(a_path), read_matrix(b_path), cfg.tol());
            out << Json{{"leq", leq}}.dump(2) << "\n";
            return leq ? 0 : 1;
        };
    });

    auto* downset = app.add_subcommand("downset", "structure of [O, B]")->require_subcommand(1);
    auto* classify = downset->add_subcommand("classify", "lattice / distributive / Boolean classification");
    classify->add_option("--spec", spec_path, "JordanSpec JSON")->required();
    classify->callback([&] {
        action = [&] {
            out << to_json(classify_downset(read_spec(spec_path))).dump(2) << "\n";
            return 0;
        };
    });
    auto* boolean = downset->add_subcommand("boolean", "predecessors forming the Boolean center");
    boolean->add_option("--b", b_path, "matrix JSON")->required();
    boolean->add_option("--spec", spec_path, "JordanSpec JSON with n×n P")->required();
    boolean->callback([&] {
        action = [&] {
            const Matrix b = read_matrix(b_path);
            const JordanSpec spec = read_spec(spec_path);
            std::vector<Matrix> ts;
            for (const auto& c : boolean_center(spec)) ts.push_back(c.matrix());
            out << matrix_list(to_predecessors(b, spec, ts, cfg.tol())).dump(2) << "\n";
            return 0;
        };
    });
    auto* sample = downset->add_subcommand("sample", "random projectors commuting with J");
    sample->add_option("--spec", spec_path, "JordanSpec JSON")->required();
    sample->add_option("--count", count, "number of samples");
    sample->callback([&] {
        action = [&] {
            Json list = Json::array();
            for (auto& j : sample_projectors(read_spec(spec_path), cfg.seed, count, cfg.jobs)) list.push_back(std::move(j));
            out << list.dump(2) << "\n";
            return 0;
        };
    });
    auto* chain = downset->add_subcommand("chain", "a maximal chain from O to B");
    chain->add_option("--b", b_path, "matrix JSON")->required();
    chain->add_option("--spec", spec_path, "JordanSpec JSON with n×n P")->required();
    chain->callback([&] {
        action = [&] {
            const Matrix b = read_matrix(b_path);
            const JordanSpec spec = read_spec(spec_path);
            std::vector<Matrix> ts;
            const std::size_t l = spec.block_count();
            for (std::size_t i = 0; i <= l; ++i) {
                std::vector<bool> mask(l, false);
                std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(i), true);
                ts.push_back(mask_idempotent(spec, mask));
            }
            out << matrix_list(to_predecessors(b, spec, ts, cfg.tol())).dump(2) << "\n";
            return 0;
        };
    });

    auto* witness = app.add_subcommand("witness", "constructive witnesses")->require_subcommand(1);
    auto* nonlattice = witness->add_subcommand("nonlattice", "four projectors without join or meet");
    nonlattice->add_option("--spec", spec_path, "JordanSpec JSON")->required();
    nonlattice->add_option("--samples", samples, "size of the intermediate-element screen");
    nonlattice->callback([&] {
        action = [&] {
            const JordanSpec spec = read_spec(spec_path);
            const NonLatticeWitness w = non_lattice_witness(spec);
            const WitnessCheck c = verify_witness(w, spec, samples, cfg.seed);
            Json rel = Json::object();
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k)
                    if (i != k) rel["T" + std::to_string(i + 1) + "<=T" + std::to_string(k + 1)] = c.leq[i][k];
            Json res{{"eigenvalue_index", w.eigenvalue},
                     {"T1", to_json(w.t1)},
                     {"T2", to_json(w.t2)},
                     {"T3", to_json(w.t3)},
                     {"T4", to_json(w.t4)},
                     {"membership", {c.membership[0], c.membership[1], c.membership[2], c.membership[3]}},
                     {"relations", rel},
                     {"t1_incomparable_t2", c.t1_incomparable_t2},
                     {"t3_incomparable_t4", c.t3_incomparable_t4},
                     {"screen", {{"samples", c.samples}, {"strict_intermediates", c.strict_intermediates}}},
                     {"passed", c.passed()}};
            out << res.dump(2) << "\n";
            return 0;
        };
    });

    auto* refute = app.add_subcommand("refute", "counterexamples")->require_subcommand(1);
    refute->add_subcommand("conjecture", "a predecessor of I₃ that is not of block-diagonal Jordan form")->callback([&] {
        action = [&] {
            const ConjectureReport rep = conjecture_refutation();
            out << Json{{"B", to_json(rep.b)},
                        {"A", to_json(rep.a)},
                        {"leq", rep.leq},
                        {"diagonal_form", rep.diagonal_form},
                        {"block_forms_checked", rep.block_forms.size()}}
                       .dump(2)
                << "\n";
            return 0;
        };
    });

    auto* meet2 = app.add_subcommand("meet2", "infimum of two 2×2 index-1 matrices");
    meet2->add_option("--b1", b1_path, "matrix JSON")->required();
    meet2->add_option("--b2", b2_path, "matrix JSON")->required();
    meet2->callback([&] {
        action = [&] {
            out << to_json(meet_in_c2(read_matrix(b1_path), read_matrix(b2_path))).dump(2) << "\n";
            return 0;
        };
    });

    auto* equations = app.add_subcommand("equations", "projector equations with B")->require_subcommand(1);
    auto* solve = equations->add_subcommand("solve", "solution family");
    solve->add_option("--b", b_path, "matrix JSON")->required();
    solve->add_option("--spec", spec_path, "JordanSpec JSON with n×n P");
    solve->add_option("--count", count, "samples drawn from infinite families");
    solve->callback([&] {
        action = [&] {
            std::optional<JordanSpec> spec;
            if (!spec_path.empty()) spec = read_spec(spec_path);
            out << equations_solve(read_matrix(b_path), spec, count, cfg).dump(2) << "\n";
            return 0;
        };
    });
    auto* count_cmd = equations->add_subcommand("count", "number of projectors commuting with B");
    count_cmd->add_option("--b", b_path, "matrix JSON")->required();
    count_cmd->add_option("--spec", spec_path, "JordanSpec JSON")->required();
    count_cmd->callback([&] {
        action = [&] {
            const HSDecomposition hs = hs_decompose(read_matrix(b_path).to_float(), cfg.tol());
            out << Json{{"count", count_solutions(hs, read_spec(spec_path), cfg.tol())}}.dump(2) << "\n";
            return 0;
        };
    });

    auto* hasse = app.add_subcommand("hasse", "DOT diagram of the finite skeleton of [O, B]");
    hasse->add_option("--spec", spec_path, "JordanSpec JSON")->required();
    hasse->add_option("--out", out_path, "output file (stdout when omitted)");
    hasse->add_option("--antichain-samples", antichain, "sampled elements per infinite antichain");
    hasse->callback([&] {
        action = [&] {
            const std::string dot = render_hasse(read_spec(spec_path), cfg.seed, antichain);
            if (out_path.empty()) {
                out << dot;
            } else {
                std::ofstream f(out_path);
                if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
                f << dot;
            }
            return 0;
        };
    });

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth")->require_subcommand(1);
    auto* index1 = oracle->add_subcommand("index1", "all grid matrices of index at most 1");
    index1->add_option("--n", order_n, "matrix order")->required();
    index1->add_option("--grid", grid_text, "comma-separated rational entries");
    index1->add_option("--cap", cap, "enumeration budget");
    index1->callback([&] {
        action = [&] {
            const auto list = enumerate_index1(order_n, parse_grid(grid_text), cap);
            out << Json{{"count", list.size()}, {"matrices", matrix_list(list)}}.dump(2) << "\n";
            return 0;
        };
    });
    auto* glb = oracle->add_subcommand("glb", "check the 2×2 meet against exhaustive search");
    glb->add_option("--b1", b1_path, "matrix JSON")->required();
    glb->add_option("--b2", b2_path, "matrix JSON")->required();
    glb->add_option("--grid", grid_text, "comma-separated rational entries");
    glb->add_option("--cap", cap, "enumeration budget");
    glb->callback([&] {
        action = [&] {
            const Matrix b1 = read_matrix(b1_path), b2 = read_matrix(b2_path);
            const auto universe = enumerate_index1(2, parse_grid(grid_text), cap);
            const Matrix meet = meet_in_c2(b1, b2);
            out << Json{{"meet", to_json(meet)},
                        {"universe_size", universe.size()},
                        {"lower_bounds", brute_common_lower_bounds(b1, b2, universe).size()},
                        {"verified", verify_glb(meet, b1, b2, universe)}}
                       .dump(2)
                << "\n";
            return 0;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    try {
        if (!action) throw Error(ErrorCode::ParseError, "no command given");
        cfg.tol();
        return action();
    } catch (const Error& e) {
        return emit_error(err, e);
    } catch (const Json::exception& e) {
        return emit_error(err, Error(ErrorCode::ParseError, e.what()));
    }
}

}  // namespace sharp::cli
