#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "netcube/net.hpp"
#include "netcube/trace.hpp"

namespace netcube::oracle {

// Random 1-safe net with the given bounds; presets are non-empty.
inline NetSystem random_net(std::mt19937_64& rng, int max_places = 5, int max_transitions = 5) {
    std::uniform_int_distribution<int> np(1, max_places), nt(1, max_transitions);
    int P = np(rng), T = nt(rng);
    std::vector<std::string> places;
    for (int i = 0; i < P; ++i) places.push_back("p" + std::to_string(i));
    auto subset = [&](bool nonempty) {
        std::vector<std::string> s;
        do {
            s.clear();
            for (int i = 0; i < P; ++i)
                if (rng() % 3 == 0) s.push_back(places[i]);
        } while (nonempty && s.empty());
        return s;
    };
    std::vector<std::tuple<std::string, std::vector<std::string>, std::vector<std::string>>> ts;
    for (int t = 0; t < T; ++t) ts.emplace_back("t" + std::to_string(t), subset(true), subset(false));
    std::vector<std::string> init;
    for (int i = 0; i < P; ++i)
        if (rng() % 2 == 0) init.push_back(places[i]);
    return make_net(places, ts, init);
}

// Random alphabet of 1..max_letters letters with a random symmetric irreflexive independence.
inline TraceAlphabet random_alphabet(std::mt19937_64& rng, int max_letters = 4) {
    int n = 1 + static_cast<int>(rng() % max_letters);
    std::vector<std::string> letters;
    for (int i = 0; i < n; ++i) letters.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng() % 2) pairs.emplace_back(a, b);
    return TraceAlphabet(letters, pairs);
}

// Every firing sequence of length <= k from the initial marking.
inline std::vector<Word> firing_sequences(const NetSystem& net, int k) {
    std::vector<Word> out;
    Word w;
    auto rec = [&](auto&& self, const Marking& m) -> void {
        out.push_back(w);
        if (static_cast<int>(w.size()) == k) return;
        for (int a = 0; a < static_cast<int>(net.transitions.size()); ++a) {
            auto m2 = try_fire(net, m, a);
            if (!m2) continue;
            w.push_back(a);
            self(self, *m2);
            w.pop_back();
        }
    };
    rec(rec, net.initial);
    return out;
}

}  // namespace netcube::oracle
