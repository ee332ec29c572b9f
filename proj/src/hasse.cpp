#include "sharp/hasse.hpp"

#include <sstream>

#include "sharp/lattice.hpp"
#include "sharp/order.hpp"

namespace sharp {

namespace {

struct Node {
    Matrix t;
    std::string label;
    bool ellipsis = false;
};

std::string lambda_text(const Gaussian& g) {
    std::string s = g.re.is_integer() ? g.re.str().substr(0, g.re.str().size() - 2) : g.re.str();
    if (!g.im.is_zero()) s += (g.im.sign() > 0 ? "+" : "") + g.im.str() + "i";
    return s;
}

}  // namespace

std::string render_hasse(const JordanSpec& spec, std::uint64_t seed, std::size_t antichain_samples) {
    spec.validate();
    std::size_t wanted = std::size_t{1} << std::min<std::size_t>(spec.s(), 7);
    for (const auto& e : spec.eigenvalues)
        if (e.count() >= 2) wanted += antichain_samples + 1;
    if (spec.s() > 6 || wanted > kMaxHasseNodes)
        throw Error(ErrorCode::PrecondViolated, "Hasse skeleton would exceed " + std::to_string(kMaxHasseNodes) + " nodes");

    std::vector<Node> nodes;
    const auto center = boolean_center(spec);
    const std::size_t top = center.size() - 1;
    for (std::size_t m = 0; m < center.size(); ++m) {
        const std::string role = m == 0 ? "bottom" : m == top ? "top" : "center";
        nodes.push_back({center[m].matrix(), "rank " + std::to_string(rank(center[m].matrix())) + "\\n" + role});
    }

    Rng rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> dashed;
    for (std::size_t j = 0; j < spec.s(); ++j) {
        const auto& e = spec.eigenvalues[j];
        if (e.count() < 2) continue;
        const JordanSpec local{{e}, std::nullopt};
        const std::size_t off = spec.offset(j), r = spec.r(), t = e.count();
        std::size_t added = 0;
        for (std::size_t attempt = 0; added < antichain_samples && attempt < 50 * (antichain_samples + 1); ++attempt) {
            std::vector<bool> mask(t);
            std::size_t ones = 0;
            for (std::size_t b = 0; b < t; ++b) ones += (mask[b] = coin(rng));
            if (ones == 0 || ones == t) continue;
            const Matrix d = sample_delta_projector(local, rng(), mask).matrix();
            Matrix full = Matrix::zero(r, r, Mode::exact);
            full.set_block(off, off, d);
            bool fresh = true;
            for (const auto& n : nodes) fresh = fresh && !(n.t == full);
            if (!fresh) continue;
            nodes.push_back({full, "rank " + std::to_string(rank(full)) + "\\nsample λ=" + lambda_text(e.lambda)});
            ++added;
        }
        nodes.push_back({Matrix(), "…\\nλ=" + lambda_text(e.lambda), true});
        dashed.emplace_back(0, nodes.size() - 1);
        dashed.emplace_back(nodes.size() - 1, std::size_t{1} << j);
    }

    const std::size_t count = nodes.size();
    std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b)
            if (a != b && !nodes[a].ellipsis && !nodes[b].ellipsis) below[a][b] = proj_leq(nodes[a].t, nodes[b].t);

    std::ostringstream dot;
    dot << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t a = 0; a < count; ++a)
        dot << "  n" << a << " [label=\"" << nodes[a].label << "\"" << (nodes[a].ellipsis ? ", shape=plaintext" : "")
            << "];\n";
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = 0; b < count; ++b) {
            if (!below[a][b]) continue;
            bool covers = true;
            for (std::size_t c = 0; c < count && covers; ++c) covers = !(below[a][c] && below[c][b]);
            if (covers) dot << "  n" << a << " -> n" << b << ";\n";
        }
    for (const auto& [a, b] : dashed) dot << "  n" << a << " -> n" << b << " [style=dashed];\n";
    dot << "}\n";
    return dot.str();
}

}  // namespace sharp
