#include "polyech/xaxis.hpp"

namespace polyech {

namespace {

ExtendedAngle slot_angle(i64 i, i64 n)
{
    if (i % 2 == 0) return {i / 2, {-1, 0}};
    return {((i + 1) / 2) % n, {1, 0}};
}

}  // namespace

GenericAngle slot_corner_cut(i64 i)
{
    i64 lap = floor_div(i, 2);
    return i % 2 == 0 ? GenericAngle{lap, {0, 1}} : GenericAngle{lap, {0, -1}};
}

std::pair<Generator, int> x_generator(const std::vector<i64>& seq, const std::vector<std::uint8_t>& slot_labels, i64 n)
{
    if ((i64)seq.size() != 2 * n || slot_labels.size() != seq.size())
        throw DomainError("x_generator: need 2n corners and 2n slot labels");
    AdmissiblePath p = x_axis_path(seq, n);
    std::vector<std::uint8_t> labels(p.edges.size(), 0);
    std::vector<int> order;
    for (i64 i = 0; i < 2 * n; ++i) {
        if (seq[i] == seq[(i + 1) % (2 * n)]) {
            if (slot_labels[i]) throw DomainError("x_generator: 'h' on an empty slot");
            continue;
        }
        int idx = p.find_edge(slot_angle(i, n));
        labels[idx] = slot_labels[i];
        if (slot_labels[i]) order.push_back(idx);
    }
    return make_generator(p, labels, order);
}

SlotForm slot_form(const Generator& g)
{
    const i64 n = g.path.kind.n;
    SlotForm f;
    f.seq = x_corner_sequence(g.path);
    f.labels.assign(2 * n, 0);
    std::vector<int> order;
    for (i64 i = 0; i < 2 * n; ++i) {
        int idx = g.path.find_edge(slot_angle(i, n));
        if (idx < 0) continue;
        f.labels[i] = g.labels[idx];
        if (f.labels[i]) order.push_back(idx);
    }
    f.sign = make_generator(g.path, g.labels, order).second;
    return f;
}

Chain splice(const Generator& g)
{
    if (!is_x_axis(g.path)) throw DomainError("splice: path is not on the x-axis");
    const i64 n = g.path.kind.n;
    SlotForm f = slot_form(g);
    const i64 a = f.seq[2 * n - 2], b = f.seq[2 * n - 1], c = f.seq[0];
    const std::uint8_t x = f.labels[2 * n - 2], y = f.labels[2 * n - 1];
    std::vector<i64> seq(f.seq.begin(), f.seq.end() - 1);
    std::vector<std::uint8_t> lab(f.labels.begin(), f.labels.end() - 2);
    seq.resize(2 * n + 2);
    lab.resize(2 * n + 2);
    lab[2 * n - 2] = x;
    lab[2 * n - 1] = 1;
    lab[2 * n] = 1;
    lab[2 * n + 1] = y;
    Chain out;
    for (i64 i = b; i <= a - (x ? 1 : 0); ++i)
        for (i64 j = b; j <= c - (y ? 1 : 0); ++j) {
            seq[2 * n - 1] = i;
            seq[2 * n] = i + j - b + 1;
            seq[2 * n + 1] = j;
            auto [h, s] = x_generator(seq, lab, n + 1);
            out.add(h, s * f.sign);
        }
    return out;
}

Chain splice(const Chain& x)
{
    return apply_linear(x, [](const Generator& g) { return splice(g); });
}

}  // namespace polyech
