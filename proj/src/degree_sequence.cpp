#include "kpg/degree_sequence.hpp"

#include "kpg/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace kpg {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view whole)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("malformed degree sequence item '" + std::string(s) + "' in '" + std::string(whole) + "'");
    return value;
}

} // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms))
{
    if (terms_.empty())
        throw DomainError("degree sequence must have at least one term");
    if (std::any_of(terms_.begin(), terms_.end(), [](int d) { return d < 0; }))
        throw DomainError("degree sequence terms must be non-negative");
    std::sort(terms_.begin(), terms_.end(), std::greater<>());
}

DegreeSequence::DegreeSequence(std::initializer_list<int> terms) : DegreeSequence(std::vector<int>(terms)) {}

DegreeSequence DegreeSequence::parse(std::string_view text)
{
    std::vector<int> terms;
    std::string_view rest = trim(text);
    if (rest.empty())
        throw ParseError("empty degree sequence");
    while (true) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto caret = item.find('^');
        int base = parse_int(item.substr(0, caret), text);
        int exponent = 1;
        if (caret != std::string_view::npos)
            exponent = parse_int(item.substr(caret + 1), text);
        if (base < 0 || exponent < 1)
            throw ParseError("degree sequence item '" + std::string(trim(item)) + "' needs base >= 0 and exponent >= 1");
        terms.insert(terms.end(), static_cast<std::size_t>(exponent), base);
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return DegreeSequence(std::move(terms));
}

std::string DegreeSequence::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(terms_[i]) + '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::size_t DegreeSequence::count_at_least(int threshold) const
{
    return static_cast<std::size_t>(
        std::count_if(terms_.begin(), terms_.end(), [threshold](int d) { return d >= threshold; }));
}

long long sigma(const DegreeSequence& seq)
{
    return std::accumulate(seq.terms().begin(), seq.terms().end(), 0LL);
}

} // namespace kpg
