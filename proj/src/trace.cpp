#include "netcube/trace.hpp"

#include <algorithm>
#include <sstream>

#include "netcube/errors.hpp"
#include "netcube/net.hpp"

namespace netcube {

TraceAlphabet::TraceAlphabet(std::vector<std::string> letters, const std::vector<std::pair<int, int>>& independent_pairs)
    : letters_(std::move(letters)), indep_(letters_.size() * letters_.size(), 0) {
    for (auto [a, b] : independent_pairs) set_independent(a, b, true);
}

TraceAlphabet TraceAlphabet::from_net(const NetSystem& net) {
    return TraceAlphabet(net.transitions, independence(net));
}

int TraceAlphabet::index(const std::string& name) const {
    auto it = std::find(letters_.begin(), letters_.end(), name);
    if (it == letters_.end()) throw UnknownLetter("unknown letter '" + name + "'");
    return static_cast<int>(it - letters_.begin());
}

void TraceAlphabet::set_independent(int a, int b, bool value) {
    if (a == b) return;  // independence is irreflexive
    const size_t n = letters_.size();
    indep_[a * n + b] = value;
    indep_[b * n + a] = value;
}

Word TraceAlphabet::parse_word(const std::string& text) const {
    Word w;
    bool spaced = text.find_first_of(" \t") != std::string::npos;
    if (spaced) {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) w.push_back(index(tok));
    } else {
        for (char c : text) w.push_back(index(std::string(1, c)));
    }
    return w;
}

std::string TraceAlphabet::show(const Word& w) const {
    bool single = std::all_of(letters_.begin(), letters_.end(), [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i) out += ' ';
        out += letters_[w[i]];
    }
    return out;
}

namespace {

void check_letters(const Word& w, const TraceAlphabet& alpha) {
    for (int c : w)
        if (c < 0 || c >= alpha.size()) throw UnknownLetter("letter index " + std::to_string(c) + " out of range");
}

// Position of the first live occurrence of c whose live predecessors all commute with it, or -1.
int cancellable(const Word& w, const std::vector<char>& dead, int c, const TraceAlphabet& alpha) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (dead[i]) continue;
        if (w[i] == c) return static_cast<int>(i);
        if (!alpha.indep(w[i], c)) return -1;
    }
    return -1;
}

}  // namespace

Trace normalize(const Word& w, const TraceAlphabet& alpha) {
    check_letters(w, alpha);
    const size_t n = w.size();
    std::vector<char> dead(n, 0);
    Trace t;
    t.word.reserve(n);
    for (size_t step = 0; step < n; ++step) {
        int best = -1;
        for (size_t i = 0; i < n; ++i) {
            if (dead[i]) continue;
            if (best >= 0 && w[i] >= w[best]) continue;
            bool minimal = true;
            for (size_t j = 0; j < i && minimal; ++j)
                if (!dead[j] && !alpha.indep(w[j], w[i])) minimal = false;
            if (minimal) best = static_cast<int>(i);
        }
        dead[best] = 1;
        t.word.push_back(w[best]);
    }
    return t;
}

bool equivalent(const Word& w1, const Word& w2, const TraceAlphabet& alpha) {
    return normalize(w1, alpha) == normalize(w2, alpha);
}

bool is_prime(const Trace& t, const TraceAlphabet& alpha) {
    const auto& w = t.word;
    int maximal = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        bool is_max = true;
        for (size_t j = i + 1; j < w.size() && is_max; ++j)
            if (!alpha.indep(w[i], w[j])) is_max = false;
        maximal += is_max;
    }
    return maximal == 1;
}

std::optional<Trace> left_quotient(const Trace& t1, const Trace& t2, const TraceAlphabet& alpha) {
    std::vector<char> dead(t2.word.size(), 0);
    for (int c : t1.word) {
        int p = cancellable(t2.word, dead, c, alpha);
        if (p < 0) return std::nullopt;
        dead[p] = 1;
    }
    Word rest;
    for (size_t i = 0; i < t2.word.size(); ++i)
        if (!dead[i]) rest.push_back(t2.word[i]);
    return normalize(rest, alpha);
}

bool is_prefix(const Trace& t1, const Trace& t2, const TraceAlphabet& alpha) {
    if (t1.size() > t2.size()) return false;
    std::vector<char> dead(t2.word.size(), 0);
    for (int c : t1.word) {
        int p = cancellable(t2.word, dead, c, alpha);
        if (p < 0) return false;
        dead[p] = 1;
    }
    return true;
}

std::optional<Trace> join(const Trace& t1, const Trace& t2, const TraceAlphabet& alpha) {
    // Split t2 into a greedy common part with t1 and a remainder X; the only candidate is t1.X.
    std::vector<char> dead(t1.word.size(), 0);
    Word rest;
    for (int c : t2.word) {
        bool free = std::all_of(rest.begin(), rest.end(), [&](int x) { return alpha.indep(x, c); });
        int p = free ? cancellable(t1.word, dead, c, alpha) : -1;
        if (p >= 0) dead[p] = 1;
        else rest.push_back(c);
    }
    Word cand = t1.word;
    cand.insert(cand.end(), rest.begin(), rest.end());
    Trace j = normalize(cand, alpha);
    if (!is_prefix(t2, j, alpha)) return std::nullopt;
    return j;
}

std::vector<Trace> prime_prefixes(const Trace& t, const TraceAlphabet& alpha) {
    const auto& w = t.word;
    std::vector<Trace> out;
    for (size_t i = 0; i < w.size(); ++i) {
        std::vector<char> in(i + 1, 0);
        in[i] = 1;
        for (size_t j = i; j-- > 0;) {
            for (size_t k = j + 1; k <= i; ++k) {
                if (in[k] && !alpha.indep(w[j], w[k])) {
                    in[j] = 1;
                    break;
                }
            }
        }
        Word sub;
        for (size_t j = 0; j <= i; ++j)
            if (in[j]) sub.push_back(w[j]);
        out.push_back(normalize(sub, alpha));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace netcube
