#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kpg {

/// A multiset of vertex degrees, stored non-increasing.
///
/// Construction sorts its input, so two sequences compare equal exactly when
/// they are equal as multisets. Zero terms (isolated vertices) are allowed.
class DegreeSequence {
public:
    /// Throws DomainError on an empty input or a negative term.
    explicit DegreeSequence(std::vector<int> terms);
    DegreeSequence(std::initializer_list<int> terms);

    /// Parses the exponent notation "5^1,4^5,1^1"; bare items ("3") mean
    /// exponent one. Throws ParseError on malformed text.
    static DegreeSequence parse(std::string_view text);

    /// Exponent form with descending bases, e.g. "5^1,4^5,1^1".
    std::string to_string() const;

    std::size_t size() const { return terms_.size(); }
    int operator[](std::size_t i) const { return terms_[i]; }
    std::span<const int> terms() const { return terms_; }
    int max() const { return terms_.front(); }
    int min() const { return terms_.back(); }

    /// Number of terms that are >= threshold.
    std::size_t count_at_least(int threshold) const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> terms_;
};

/// Degree sum.
long long sigma(const DegreeSequence& seq);

} // namespace kpg
