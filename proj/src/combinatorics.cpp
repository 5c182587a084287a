#include "hecke/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hecke {

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw Error("partition parts must be nonnegative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) throw Error("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
    for (int p : parts_) size_ += p;
}

bool Partition::contained_in(const Partition& other) const {
    if (length() > other.length()) return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > other.part(i)) return false;
    return true;
}

DoubleTableau::DoubleTableau(DoublePartition shape, std::vector<Box> placement)
    : shape_(std::move(shape)), placement_(std::move(placement)) {}

const Box& DoubleTableau::box(std::size_t entry) const {
    if (entry < 1 || entry > placement_.size())
        throw Error("tableau entry " + std::to_string(entry) + " out of range");
    return placement_[entry - 1];
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw Error("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<DoublePartition> double_partitions(int n) {
    std::vector<DoublePartition> out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : partitions(k))
            for (const auto& b : partitions(n - k)) out.push_back({a, b});
    return out;
}

namespace {

const Partition& component_of(const DoublePartition& shape, Component c) {
    return c == Component::first ? shape.first : shape.second;
}

// Rows (0-based) where a box can be added to p.
std::vector<std::size_t> addable_rows(const Partition& p) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i <= p.length(); ++i)
        if (i == 0 || p.part(i) < p.part(i - 1)) rows.push_back(i);
    return rows;
}

std::vector<std::size_t> removable_rows(const Partition& p) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) rows.push_back(i);
    return rows;
}

Partition with_delta(const Partition& p, std::size_t row, int delta) {
    std::vector<int> parts = p.parts();
    if (row == parts.size()) parts.push_back(0);
    parts[row] += delta;
    return Partition(parts);
}

}  // namespace

std::vector<DoubleTableau> standard_tableaux(const DoublePartition& shape) {
    const int n = shape.size();
    std::vector<DoubleTableau> out;
    std::vector<Box> placement;
    std::vector<int> filled[2];
    filled[0].assign(shape.first.length(), 0);
    filled[1].assign(shape.second.length(), 0);

    std::function<void()> rec = [&]() {
        if (static_cast<int>(placement.size()) == n) {
            out.emplace_back(shape, placement);
            return;
        }
        for (int c = 0; c < 2; ++c) {
            const Partition& p = component_of(shape, static_cast<Component>(c));
            auto& rows = filled[c];
            for (std::size_t r = 0; r < p.length(); ++r) {
                if (rows[r] >= p.part(r)) continue;
                if (r > 0 && rows[r - 1] <= rows[r]) continue;
                ++rows[r];
                placement.push_back({static_cast<Component>(c), static_cast<int>(r) + 1, rows[r]});
                rec();
                placement.pop_back();
                --rows[r];
            }
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DoubleTableau> standard_tableaux(const Partition& shape) {
    return standard_tableaux(DoublePartition{shape, Partition{}});
}

std::vector<DoublePartition> one_box_successors(const DoublePartition& shape) {
    std::vector<DoublePartition> out;
    for (auto r : addable_rows(shape.first)) out.push_back({with_delta(shape.first, r, 1), shape.second});
    for (auto r : addable_rows(shape.second)) out.push_back({shape.first, with_delta(shape.second, r, 1)});
    return out;
}

std::vector<DoublePartition> one_box_predecessors(const DoublePartition& shape) {
    std::vector<DoublePartition> out;
    for (auto r : removable_rows(shape.first)) out.push_back({with_delta(shape.first, r, -1), shape.second});
    for (auto r : removable_rows(shape.second)) out.push_back({shape.first, with_delta(shape.second, r, -1)});
    return out;
}

Partition embed_double(const DoublePartition& shape, int m, int r1) {
    if (m < 0 || r1 < 0) throw Error("rectangle dimensions must be nonnegative");
    if (static_cast<int>(shape.first.length()) > r1)
        throw Error("first component has more than r1 rows");
    if (r1 > 0 && shape.second.part(0) > m + shape.first.part(static_cast<std::size_t>(r1) - 1))
        throw Error("second component is wider than the rectangle's last row");
    if (r1 == 0 && !shape.first.empty()) throw Error("first component needs r1 >= 1");
    std::vector<int> parts;
    for (int i = 0; i < r1; ++i) parts.push_back(m + shape.first.part(static_cast<std::size_t>(i)));
    for (int b : shape.second.parts()) parts.push_back(b);
    return Partition(parts);
}

DoublePartition split_embedded(const Partition& mu, int m, int r1) {
    std::vector<int> a, b;
    for (int i = 0; i < r1; ++i) {
        int p = mu.part(static_cast<std::size_t>(i));
        if (p < m) throw Error("partition does not contain the rectangle");
        a.push_back(p - m);
    }
    for (std::size_t i = static_cast<std::size_t>(r1); i < mu.length(); ++i) b.push_back(mu.part(i));
    return {Partition(a), Partition(b)};
}

Box embed_box(const Box& box, int m, int r1) {
    if (box.component == Component::first) return {Component::first, box.row, box.col + m};
    return {Component::first, box.row + r1, box.col};
}

int n_stat(const Partition& alpha) {
    int s = 0;
    for (std::size_t i = 0; i < alpha.length(); ++i) s += static_cast<int>(i) * alpha.part(i);
    return s;
}

BoxStat box_stat(const DoubleTableau& t, std::size_t entry) {
    const Box& b = t.box(entry);
    return {b.component, b.content(), b.row};
}

std::optional<DoubleTableau> apply_transposition(const DoubleTableau& t, std::size_t i) {
    if (i < 1 || i >= t.size()) throw Error("transposition index out of range");
    const Box& a = t.box(i);
    const Box& b = t.box(i + 1);
    if (a.component == b.component) {
        // i and i+1 share a row or column exactly when they are adjacent there.
        if (a.row == b.row || a.col == b.col) return std::nullopt;
    }
    std::vector<Box> placement = t.placement();
    std::swap(placement[i - 1], placement[i]);
    return DoubleTableau(t.shape(), std::move(placement));
}

Scalar axial_parameter(const DoubleTableau& t, std::size_t i, const ParameterPoint& point) {
    const Box& a = t.box(i);
    const Box& b = t.box(i + 1);
    Scalar x = qpow(point, b.content() - a.content());
    if (a.component == b.component) return x;
    if (a.component == Component::first) return -x / point.Q();
    return -point.Q() * x;
}

long long count_standard(const Partition& shape) {
    // n! / prod(hooks), accumulated as a big integer.
    mpz_class num = 1;
    for (int k = 2; k <= shape.size(); ++k) num *= k;
    mpz_class den = 1;
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.part(r); ++c) {
            int arm = shape.part(r) - c - 1;
            int leg = 0;
            for (std::size_t rr = r + 1; rr < shape.length() && shape.part(rr) > c; ++rr) ++leg;
            den *= arm + leg + 1;
        }
    mpz_class f = num / den;
    return f.get_si();
}

std::string format_partition(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    return s + "]";
}

std::string format_double(const DoublePartition& d) {
    return format_partition(d.first) + "|" + format_partition(d.second);
}

Partition parse_partition(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw Error("malformed partition '" + std::string(text) + "'");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!body.empty()) {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw Error("malformed partition '" + std::string(text) + "'");
            parts.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return Partition(parts);
}

DoublePartition parse_double(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw Error("double partition needs '|': '" + std::string(text) + "'");
    return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

}  // namespace hecke
