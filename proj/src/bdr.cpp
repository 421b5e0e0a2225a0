#include <array>
#include <string>
#include <vector>

#include "netcube/analyze.hpp"

namespace netcube {

namespace {

// Labels of the events created at construction step s, read left to right, repeat with period five.
int step_label(int s, int pos) {
    static const std::array<std::array<int, 5>, 4> pattern{{
        {6, 7, 8, 9, 10},   // s = 0 mod 4
        {1, 5, 4, 3, 2},    // s = 1 mod 4
        {6, 10, 9, 8, 7},   // s = 2 mod 4
        {1, 2, 3, 4, 5},    // s = 3 mod 4
    }};
    return pattern[s % 4][pos % 5];
}

struct Valley {
    int v;
    int left_label, right_label;  // labels of the frontier arcs v->L and v->R
};

}  // namespace

// The frontier is a zigzag: valleys alternate with peaks, and peak i is the right target of valley i and the
// left target of valley i+1. The ends are the two axis rays. Every tile step puts a middle out-arc at each
// valley and closes the two new squares on either side.
DomainPrefix bdr_generate(int K) {
    DomainPrefix d;
    d.K = K;
    for (int l = 1; l <= 10; ++l) d.label_id(std::to_string(l));
    auto lab = [&](int l) { return d.find_label(std::to_string(l)); };

    std::vector<int> xs{0}, ys{0};
    d.add_vertex(0);
    auto axis_next = [&](std::vector<int>& axis) {
        int v = d.add_vertex(static_cast<int>(axis.size()));
        axis.push_back(v);
        return v;
    };
    // Step 1: the first arcs of both rays.
    if (K >= 1) {
        axis_next(xs);
        axis_next(ys);
        d.add_arc(0, xs[1], lab(step_label(1, 0)));
        d.add_arc(0, ys[1], lab(step_label(1, 1)));
    }
    std::vector<Valley> valleys{{0, step_label(1, 0), step_label(1, 1)}};
    std::vector<int> peaks;  // peaks[i] sits between valleys[i] and valleys[i+1]

    // Tile step t works on the valleys of depth t-1 and creates the events of construction step t+1.
    for (int t = 1; t <= K; ++t) {
        const int s = t + 1;
        const bool tips = t + 1 <= K;
        int pos = 0;
        int x_label = step_label(s, pos++);
        std::vector<int> mid_label(valleys.size());
        for (size_t i = 0; i < valleys.size(); ++i) mid_label[i] = step_label(s, pos++);
        int y_label = step_label(s, pos++);

        int xnext = -1, ynext = -1;
        if (tips) {
            xnext = axis_next(xs);
            d.add_arc(xs[t], xnext, lab(x_label));
            ynext = axis_next(ys);
            d.add_arc(ys[t], ynext, lab(y_label));
        }
        std::vector<Valley> nv;
        std::vector<int> np;
        const int r = static_cast<int>(valleys.size());
        for (int i = 0; i < r; ++i) {
            const Valley& V = valleys[i];
            int L = i == 0 ? xs[t] : peaks[i - 1];
            int R = i == r - 1 ? ys[t] : peaks[i];
            int M = d.add_vertex(t);
            d.add_arc(V.v, M, lab(mid_label[i]));
            if (i == 0) nv.push_back({L, x_label, mid_label[i]});
            if (tips) {
                int TL = d.add_vertex(t + 1), TR = d.add_vertex(t + 1);
                d.add_arc(L, TL, lab(mid_label[i]));
                d.add_arc(M, TL, lab(V.left_label));
                d.add_arc(M, TR, lab(V.right_label));
                d.add_arc(R, TR, lab(mid_label[i]));
                np.push_back(TL);
                np.push_back(TR);
            }
            nv.push_back({M, V.left_label, V.right_label});
            nv.push_back({R, mid_label[i], i == r - 1 ? y_label : mid_label[i + 1]});
        }
        if (!tips) break;
        valleys.swap(nv);
        peaks.swap(np);
    }
    d.finalize();
    return d;
}

}  // namespace netcube
