#ifndef CUBIC27_LABELS_HPP
#define CUBIC27_LABELS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubic27 {

inline constexpr std::size_t kLineCount = 27;
inline constexpr std::size_t kTritangentCount = 45;

/// One of the 27 lines of a blown-up plane: the exceptional fibre E_i, the
/// proper transform F_ij (i < j) of the line through p_i, p_j, or the proper
/// transform G_j of the conic through the five points other than p_j.
class LineLabel {
public:
    enum class Kind : unsigned char { E, F, G };

    static LineLabel E(int i);
    static LineLabel F(int i, int j); ///< order of i, j is irrelevant
    static LineLabel G(int j);
    static LineLabel from_index(std::size_t index);
    static LineLabel parse(std::string_view text);

    Kind kind() const { return kind_; }
    int i() const { return i_; }
    int j() const { return j_; }
    /// E1..E6, F12..F56, G1..G6 map to 0..26.
    std::size_t index() const;
    std::string str() const;

    /// Whether two distinct labelled lines intersect on the surface.
    bool meets(const LineLabel& o) const;

    friend bool operator==(const LineLabel&, const LineLabel&) = default;
    friend auto operator<=>(const LineLabel& a, const LineLabel& b) { return a.index() <=> b.index(); }

private:
    LineLabel(Kind k, int i, int j) : kind_(k), i_(i), j_(j) {}
    Kind kind_;
    int i_;
    int j_;
};

const std::array<LineLabel, kLineCount>& all_line_labels();

/// Tritangent plane label: Type I {E_i, G_j, F_ij} (i != j), written x_ij,
/// or Type II {F_ij, F_kl, F_mn} for a partition of {1..6} into pairs,
/// written y_ijklmn.
class TritangentLabel {
public:
    using Pair = std::pair<int, int>;

    static TritangentLabel type_one(int i, int j);
    static TritangentLabel type_two(Pair a, Pair b, Pair c);
    static TritangentLabel from_index(std::size_t index);
    static TritangentLabel parse(std::string_view text);

    bool is_type_one() const { return type_one_; }
    int i() const { return pairs_[0].first; }
    int j() const { return pairs_[0].second; }
    /// Sorted pairs of a Type II partition.
    const std::array<Pair, 3>& partition() const { return pairs_; }

    /// Coordinate order of the anticanonical embedding: x_ij in lex order
    /// of (i, j), then y partitions in lex order of their sorted pairs.
    std::size_t index() const;
    std::string str() const;
    std::array<LineLabel, 3> lines() const;
    bool contains(const LineLabel& l) const;
    bool shares_line_with(const TritangentLabel& o) const;

    friend bool operator==(const TritangentLabel&, const TritangentLabel&) = default;
    friend auto operator<=>(const TritangentLabel& a, const TritangentLabel& b) { return a.index() <=> b.index(); }

private:
    TritangentLabel(bool type_one, std::array<Pair, 3> pairs) : type_one_(type_one), pairs_(pairs) {}
    bool type_one_;
    std::array<Pair, 3> pairs_;
};

const std::array<TritangentLabel, kTritangentCount>& all_tritangent_labels();

/// The tritangent plane through two intersecting lines, if they meet.
std::optional<TritangentLabel> tritangent_through(const LineLabel& a, const LineLabel& b);

/// The five tritangent labels whose triple contains the line.
std::array<TritangentLabel, 5> tritangents_through(const LineLabel& line);

/// The tritangent label whose triple is exactly {a, b, c}, if any.
std::optional<TritangentLabel> tritangent_of_triple(const LineLabel& a, const LineLabel& b, const LineLabel& c);

} // namespace cubic27

#endif
