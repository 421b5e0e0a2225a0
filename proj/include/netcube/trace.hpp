#pragma once

#include <optional>
#include <string>
#include <vector>

namespace netcube {

struct NetSystem;

using Word = std::vector<int>;

// Letters are indices into `letters`; their declared order drives the normal form.
class TraceAlphabet {
public:
    TraceAlphabet() = default;
    TraceAlphabet(std::vector<std::string> letters, const std::vector<std::pair<int, int>>& independent_pairs);

    static TraceAlphabet from_net(const NetSystem& net);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::vector<std::string>& letters() const { return letters_; }
    const std::string& name(int a) const { return letters_[a]; }
    int index(const std::string& name) const;  // throws UnknownLetter
    bool indep(int a, int b) const { return indep_[a * letters_.size() + b] != 0; }
    void set_independent(int a, int b, bool value);

    Word parse_word(const std::string& text) const;  // single-character letters or space separated
    std::string show(const Word& w) const;

private:
    std::vector<std::string> letters_;
    std::vector<char> indep_;
};

// A trace stored as its lexicographic normal form.
struct Trace {
    Word word;
    size_t size() const { return word.size(); }
    bool empty() const { return word.empty(); }
    friend bool operator==(const Trace&, const Trace&) = default;
    friend auto operator<=>(const Trace&, const Trace&) = default;
};

Trace normalize(const Word& w, const TraceAlphabet& alpha);
bool equivalent(const Word& w1, const Word& w2, const TraceAlphabet& alpha);
bool is_prime(const Trace& t, const TraceAlphabet& alpha);
bool is_prefix(const Trace& t1, const Trace& t2, const TraceAlphabet& alpha);
// Residual of t2 after left-cancelling t1; nullopt when t1 is not a prefix of t2.
std::optional<Trace> left_quotient(const Trace& t1, const Trace& t2, const TraceAlphabet& alpha);
std::optional<Trace> join(const Trace& t1, const Trace& t2, const TraceAlphabet& alpha);
std::vector<Trace> prime_prefixes(const Trace& t, const TraceAlphabet& alpha);

}  // namespace netcube
