#pragma once

// Brute-force trace oracle: a finite word set grouped into classes by closing under swaps of adjacent
// independent letters. Nothing here calls the trace engine.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "netcube/trace.hpp"

namespace netcube::oracle {

class TraceOracle {
public:
    // All words up to max_len.
    TraceOracle(const TraceAlphabet& alpha, int max_len) : alpha_(alpha), max_len_(max_len) {
        Word w;
        enumerate(w);
        build();
    }

    // A prefix-closed word set that is closed under swaps of adjacent independent letters, such as the
    // firing sequences of a net up to some length.
    TraceOracle(const TraceAlphabet& alpha, const std::vector<Word>& words) : alpha_(alpha) {
        for (const auto& w : words) {
            if (index_.count(w)) continue;
            index_[w] = static_cast<int>(words_.size());
            words_.push_back(w);
            class_of_.push_back(-1);
            max_len_ = std::max(max_len_, static_cast<int>(w.size()));
        }
        build();
    }

    const std::vector<Word>& words() const { return words_; }
    int classes() const { return static_cast<int>(reps_.size()); }
    bool contains(const Word& w) const { return index_.count(w) > 0; }
    int class_of(const Word& w) const { return class_of_[index_.at(w)]; }
    const Word& representative(int c) const { return reps_[c]; }  // lexicographically least member
    const std::vector<Word>& members(int c) const { return members_[c]; }
    int length(int c) const { return static_cast<int>(reps_[c].size()); }

private:
    void build() {
        for (size_t i = 0; i < words_.size(); ++i)
            if (class_of_[i] < 0) close_class(static_cast<int>(i));
        const size_t nc = reps_.size();
        words_per_block_ = (nc + 63) / 64;
        down_.assign(nc * words_per_block_, 0);
        up_.assign(nc * words_per_block_, 0);
        for (size_t i = 0; i < words_.size(); ++i) {
            int c = class_of_[i];
            const Word& word = words_[i];
            for (size_t l = 0; l <= word.size(); ++l) {
                int p = class_of_[index_.at(Word(word.begin(), word.begin() + l))];
                set_bit(down_, c, p);
                set_bit(up_, p, c);
            }
        }
    }

public:
    bool prime(int c) const {
        const auto& m = members_[c];
        if (reps_[c].empty()) return false;
        for (const auto& w : m)
            if (w.back() != m[0].back()) return false;
        return true;
    }

    // Some member of b starts with a member of a.
    bool prefix(int a, int b) const { return get_bit(down_, b, a); }

    // Least upper bound among the enumerated classes. Only conclusive when the word set holds every word of
    // length up to length(a) + length(b) that belongs to the closure.
    struct Join {
        std::optional<int> lub;
        bool bounded = false;
        bool least = true;
    };
    Join join(int a, int b) const {
        Join j;
        std::vector<std::uint64_t> ub(words_per_block_);
        for (size_t k = 0; k < words_per_block_; ++k) ub[k] = up_[a * words_per_block_ + k] & up_[b * words_per_block_ + k];
        int best = -1;
        for (size_t c = 0; c < reps_.size(); ++c)
            if (test(ub, c) && (best < 0 || reps_[c].size() < reps_[best].size())) best = static_cast<int>(c);
        if (best < 0) return j;
        j.bounded = true;
        for (size_t c = 0; c < reps_.size(); ++c)
            if (test(ub, c) && !prefix(best, static_cast<int>(c))) j.least = false;
        if (j.least) j.lub = best;
        return j;
    }

private:
    void enumerate(Word& w) {
        index_[w] = static_cast<int>(words_.size());
        words_.push_back(w);
        class_of_.push_back(-1);
        if (static_cast<int>(w.size()) == max_len_) return;
        for (int a = 0; a < alpha_.size(); ++a) {
            w.push_back(a);
            enumerate(w);
            w.pop_back();
        }
    }

    void close_class(int start) {
        int c = static_cast<int>(reps_.size());
        std::vector<Word> queue{words_[start]};
        class_of_[start] = c;
        for (size_t i = 0; i < queue.size(); ++i) {
            Word w = queue[i];
            for (size_t p = 0; p + 1 < w.size(); ++p) {
                if (w[p] == w[p + 1] || !alpha_.indep(w[p], w[p + 1])) continue;
                std::swap(w[p], w[p + 1]);
                auto it = index_.find(w);
                if (it == index_.end()) throw std::logic_error("word set is not closed under commutation");
                int id = it->second;
                if (class_of_[id] < 0) {
                    class_of_[id] = c;
                    queue.push_back(w);
                }
                std::swap(w[p], w[p + 1]);
            }
        }
        std::sort(queue.begin(), queue.end());
        reps_.push_back(queue.front());
        members_.push_back(std::move(queue));
    }

    void set_bit(std::vector<std::uint64_t>& bits, int row, int col) {
        bits[row * words_per_block_ + col / 64] |= std::uint64_t{1} << (col % 64);
    }
    bool get_bit(const std::vector<std::uint64_t>& bits, int row, int col) const {
        return (bits[row * words_per_block_ + col / 64] >> (col % 64)) & 1;
    }
    static bool test(const std::vector<std::uint64_t>& bits, size_t c) { return (bits[c / 64] >> (c % 64)) & 1; }

    TraceAlphabet alpha_;
    int max_len_ = 0;
    std::vector<Word> words_;
    std::map<Word, int> index_;
    std::vector<int> class_of_;
    std::vector<Word> reps_;
    std::vector<std::vector<Word>> members_;
    size_t words_per_block_ = 0;
    std::vector<std::uint64_t> down_, up_;
};

}  // namespace netcube::oracle
