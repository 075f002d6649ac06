#pragma once

// Cycle-length families: which cycle lengths are forbidden.
// Spellings: "{4,5}" finite set, "[4,9]" finite range, "[5,inf)" ray,
// "2Z+2" arithmetic progression {2i+2 : i >= 1}.
// Finite ranges normalize to explicit sets; step-1 progressions normalize to
// rays, so equal families always share one canonical key.

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclesat {

class CycleFamily {
public:
    enum class Kind { finite, ray, progression };

    static CycleFamily finite_set(std::vector<int> lengths) {
        if (lengths.empty()) throw std::invalid_argument("family: empty length set");
        std::sort(lengths.begin(), lengths.end());
        lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
        if (lengths.front() < 3)
            throw std::invalid_argument("family: cycle length " +
                                        std::to_string(lengths.front()) + " below 3");
        CycleFamily f;
        f.kind_ = Kind::finite;
        f.lengths_ = std::move(lengths);
        return f;
    }

    static CycleFamily interval(int a, int b) {
        if (a < 3 || b < a)
            throw std::invalid_argument("family: bad interval [" + std::to_string(a) + "," +
                                        std::to_string(b) + "]");
        std::vector<int> ls;
        for (int l = a; l <= b; ++l) ls.push_back(l);
        return finite_set(std::move(ls));
    }

    static CycleFamily ray(int a) {
        if (a < 3) throw std::invalid_argument("family: ray start below 3");
        CycleFamily f;
        f.kind_ = Kind::ray;
        f.a_ = a;
        return f;
    }

    /// {a*i + b : i >= 1}; requires a >= 1 and a+b >= 3.
    static CycleFamily progression(int a, int b) {
        if (a < 1) throw std::invalid_argument("family: progression step below 1");
        if (a + b < 3)
            throw std::invalid_argument("family: progression starts below 3 (" +
                                        std::to_string(a + b) + ")");
        if (a == 1) return ray(1 + b);
        CycleFamily f;
        f.kind_ = Kind::progression;
        f.a_ = a;
        f.b_ = b;
        return f;
    }

    Kind kind() const { return kind_; }

    bool contains_length(int l) const {
        if (l < 3)
            throw std::invalid_argument("cycle length " + std::to_string(l) + " below 3");
        switch (kind_) {
            case Kind::finite:
                return std::binary_search(lengths_.begin(), lengths_.end(), l);
            case Kind::ray:
                return l >= a_;
            case Kind::progression:
                return l > b_ && (l - b_) % a_ == 0;
        }
        return false;
    }

    /// Members clipped to [3, n], ascending. Empty when nothing fits.
    std::vector<int> truncate(int n) const {
        std::vector<int> out;
        switch (kind_) {
            case Kind::finite:
                for (int l : lengths_)
                    if (l <= n) out.push_back(l);
                break;
            case Kind::ray:
                for (int l = a_; l <= n; ++l) out.push_back(l);
                break;
            case Kind::progression:
                for (int l = a_ + b_; l <= n; l += a_) out.push_back(l);
                break;
        }
        return out;
    }

    std::string canonical_key() const {
        switch (kind_) {
            case Kind::finite: {
                std::string s = "{";
                for (std::size_t i = 0; i < lengths_.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(lengths_[i]);
                }
                return s + "}";
            }
            case Kind::ray:
                return "[" + std::to_string(a_) + ",inf)";
            case Kind::progression:
                return std::to_string(a_) + "Z" + (b_ < 0 ? "" : "+") + std::to_string(b_);
        }
        return "";
    }

    bool operator==(const CycleFamily& o) const {
        return kind_ == o.kind_ && a_ == o.a_ && b_ == o.b_ && lengths_ == o.lengths_;
    }

    const std::vector<int>& finite_lengths() const {
        if (kind_ != Kind::finite)
            throw std::logic_error("finite_lengths on non-finite family");
        return lengths_;
    }
    int ray_start() const {
        if (kind_ != Kind::ray) throw std::logic_error("ray_start on non-ray family");
        return a_;
    }
    int progression_step() const { return a_; }
    int progression_offset() const { return b_; }

private:
    CycleFamily() = default;
    Kind kind_ = Kind::finite;
    std::vector<int> lengths_;
    int a_ = 0;
    int b_ = 0;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline int parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw std::runtime_error("family: expected integer at position " +
                                 std::to_string(start) + " in '" + s + "'");
    return std::stoi(s.substr(start, i - start));
}

inline void expect(const std::string& s, std::size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw std::runtime_error(std::string("family: expected '") + c + "' in '" + s + "'");
    ++i;
}

}  // namespace detail

inline CycleFamily parse_family(const std::string& spec) {
    using detail::expect;
    using detail::parse_int;
    using detail::skip_ws;
    std::size_t i = 0;
    skip_ws(spec, i);
    if (i >= spec.size()) throw std::runtime_error("family: empty spec");

    if (spec[i] == '{') {
        ++i;
        std::vector<int> ls;
        ls.push_back(parse_int(spec, i));
        skip_ws(spec, i);
        while (i < spec.size() && spec[i] == ',') {
            ++i;
            ls.push_back(parse_int(spec, i));
            skip_ws(spec, i);
        }
        expect(spec, i, '}');
        skip_ws(spec, i);
        if (i != spec.size()) throw std::runtime_error("family: trailing input in '" + spec + "'");
        return CycleFamily::finite_set(std::move(ls));
    }

    if (spec[i] == '[') {
        ++i;
        int a = parse_int(spec, i);
        expect(spec, i, ',');
        skip_ws(spec, i);
        if (spec.compare(i, 3, "inf") == 0) {
            i += 3;
            expect(spec, i, ')');
            skip_ws(spec, i);
            if (i != spec.size())
                throw std::runtime_error("family: trailing input in '" + spec + "'");
            return CycleFamily::ray(a);
        }
        int b = parse_int(spec, i);
        expect(spec, i, ']');
        skip_ws(spec, i);
        if (i != spec.size()) throw std::runtime_error("family: trailing input in '" + spec + "'");
        return CycleFamily::interval(a, b);
    }

    // aZ+b
    int a = parse_int(spec, i);
    skip_ws(spec, i);
    if (i >= spec.size() || (spec[i] != 'Z' && spec[i] != 'z'))
        throw std::runtime_error("family: unrecognized spec '" + spec + "'");
    ++i;
    int b = parse_int(spec, i);
    skip_ws(spec, i);
    if (i != spec.size()) throw std::runtime_error("family: trailing input in '" + spec + "'");
    return CycleFamily::progression(a, b);
}

}  // namespace cyclesat
