#include "cpa/perm.hpp"

#include <algorithm>
#include <sstream>

namespace cpa {

// defined in json_io.cpp
PatternSet parse_pattern_set_json(const std::string& text);

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
    std::vector<char> seen(v_.size() + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
            throw ParseError("not a permutation of 1..n: " + str());
        seen[x] = 1;
    }
}

Permutation Permutation::reduce(std::span<const int> seq) {
    std::vector<int> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw DuplicateEntries("reduce: repeated value " + std::to_string(sorted[i]));
    Permutation p;
    p.v_.reserve(seq.size());
    for (int x : seq) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
        p.v_.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return p;
}

Permutation Permutation::parse(const std::string& one_line) {
    std::string s = one_line;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    std::vector<int> v;
    int x;
    while (is >> x) v.push_back(x);
    if (!is.eof()) throw ParseError("bad permutation: " + one_line);
    if (v.empty()) throw ParseError("empty permutation");
    return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
    Permutation p = *this;
    std::reverse(p.v_.begin(), p.v_.end());
    return p;
}

Permutation Permutation::complemented() const {
    Permutation p = *this;
    int n = size();
    for (auto& x : p.v_) x = n + 1 - x;
    return p;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ' ';
        os << v_[i];
    }
    return os.str();
}

std::vector<int> occurrences(const Permutation& host, const Permutation& pattern) {
    const int n = host.size(), m = pattern.size();
    std::vector<int> hits;
    if (m > n) return hits;
    for (int i = 1; i + m - 1 <= n; ++i) {
        // order-isomorphism check on the window, no relabeling needed
        bool ok = true;
        for (int a = 1; a < m && ok; ++a)
            for (int b = 0; b < a && ok; ++b)
                if ((host[i + a] < host[i + b]) != (pattern[a + 1] < pattern[b + 1]))
                    ok = false;
        if (ok) hits.push_back(i);
    }
    return hits;
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : pats_(std::move(patterns)) {
    if (pats_.empty()) throw PatternRedundancy("pattern set must be nonempty");
    std::sort(pats_.begin(), pats_.end());
    pats_.erase(std::unique(pats_.begin(), pats_.end()), pats_.end());
    for (const auto& p : pats_)
        if (p.size() < 2)
            throw PatternRedundancy("patterns must have length >= 2: " + p.str());
    for (const auto& shorter : pats_)
        for (const auto& longer : pats_) {
            if (shorter == longer || shorter.size() > longer.size()) continue;
            if (!occurrences(longer, shorter).empty())
                throw PatternRedundancy("pattern " + longer.str() +
                                        " consecutively contains " + shorter.str());
        }
}

PatternSet PatternSet::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return parse_pattern_set_json(text);
    return PatternSet({Permutation::parse(text)});
}

int PatternSet::min_len() const {
    int m = pats_.front().size();
    for (const auto& p : pats_) m = std::min(m, p.size());
    return m;
}

int PatternSet::max_len() const {
    int m = 0;
    for (const auto& p : pats_) m = std::max(m, p.size());
    return m;
}

std::string PatternSet::str() const {
    std::string s = "{";
    for (size_t i = 0; i < pats_.size(); ++i) {
        if (i) s += ", ";
        s += pats_[i].str();
    }
    return s + "}";
}

} // namespace cpa
