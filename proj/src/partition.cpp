#include "asfc/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace asfc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0)
            throw std::invalid_argument("partition part is negative");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw std::invalid_argument("partition parts are not weakly decreasing");
    }
}

int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> conj(empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c)
            ++conj[c];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length())
        return false;
    for (int k = 0; k < inner.length(); ++k)
        if (inner.part(k) > part(k))
            return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < parts_.size(); ++k)
        out << (k ? "," : "") << parts_[k];
    out << ')';
    return out.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur(outer.length(), 0);
    std::function<void(int, int)> rec = [&](int row, int cap) {
        if (row == outer.length()) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(cap, outer.part(row)); p >= 0; --p) {
            cur[row] = p;
            rec(row + 1, p);
        }
        cur[row] = 0;
    };
    rec(0, outer.empty() ? 0 : outer.part(0));
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        return false;
    int sa = 0, sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int k = 0; k < len; ++k) {
        sa += a.part(k);
        sb += b.part(k);
        if (sa < sb)
            return false;
    }
    return true;
}

Partition sort_composition(std::vector<int> composition) {
    std::sort(composition.begin(), composition.end(), std::greater<>());
    return Partition(std::move(composition));
}

std::vector<std::vector<int>> weak_compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0)
        return n == 0 ? std::vector<std::vector<int>>{{}} : out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == parts - 1) {
            cur[k] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[k] = v;
            rec(k + 1, remaining - v);
        }
    };
    rec(0, n);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("not an integer: '" + token + "'");
        if (v < 0)
            throw std::invalid_argument("negative entry: '" + token + "'");
        out.push_back(v);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_list(text));
}

}  // namespace asfc
