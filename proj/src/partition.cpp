#include "unidescent/partition.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "unidescent/errors.hpp"

namespace unidescent {

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw constraint_error("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw constraint_error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    while (!values.empty() && values.back() == 0) values.pop_back();
    return Partition(std::move(values));
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "[]") return Partition();
    if (text.empty()) throw parse_error("empty partition string (use \"[]\")");
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
        if (tok.empty()) throw parse_error("malformed partition: empty part");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw parse_error("malformed partition part: " + std::string(tok));
            if (value > 100000000) throw parse_error("partition part out of range");
            value = value * 10 + (c - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const constraint_error& e) {
        throw parse_error(e.what());
    }
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::str() const {
    if (parts_.empty()) return "[]";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

Partition transpose(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<size_t>(p.part(0)));
    for (int j = 1; j <= p.part(0); ++j) {
        int count = 0;
        for (int row : p.parts())
            if (row >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

Partition remove_first_column(const Partition& p) {
    std::vector<int> parts;
    for (int row : p.parts())
        if (row > 1) parts.push_back(row - 1);
    return Partition(std::move(parts));
}

Partition remove_first_row(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> parts(p.parts().begin() + 1, p.parts().end());
    return Partition(std::move(parts));
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

bool is_submultiset(const Partition& sub, const Partition& sup) {
    // Both are sorted decreasing, so a single sweep suffices.
    size_t i = 0;
    for (int part : sub.parts()) {
        while (i < sup.parts().size() && sup.parts()[i] > part) ++i;
        if (i == sup.parts().size() || sup.parts()[i] != part) return false;
        ++i;
    }
    return true;
}

std::vector<Partition> sub_multisets(const Partition& p) {
    // Distinct part values with multiplicities, in decreasing value order.
    std::vector<std::pair<int, int>> groups;
    for (int part : p.parts()) {
        if (!groups.empty() && groups.back().first == part)
            ++groups.back().second;
        else
            groups.emplace_back(part, 1);
    }
    std::vector<Partition> out;
    std::vector<int> chosen;
    std::function<void(size_t)> rec = [&](size_t g) {
        if (g == groups.size()) {
            out.push_back(Partition(chosen));
            return;
        }
        // Taking more copies of a larger value first keeps each grade's
        // lexicographic-descending order after the stable sort below.
        for (int take = groups[g].second; take >= 0; --take) {
            for (int t = 0; t < take; ++t) chosen.push_back(groups[g].first);
            rec(g + 1);
            for (int t = 0; t < take; ++t) chosen.pop_back();
        }
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;  // lexicographically descending within a grade
    });
    return out;
}

Int binom_embeddings(const Partition& lam, const Partition& sub) {
    if (!is_submultiset(sub, lam))
        throw constraint_error("binom_embeddings: " + sub.str() + " is not a sub-multiset of " +
                               lam.str());
    auto binom = [](int n, int k) {
        Int r = 1;
        for (int i = 1; i <= k; ++i) {
            r *= (n - k + i);
            r /= i;
        }
        return r;
    };
    Int result = 1;
    int i = 0;
    const auto& parts = lam.parts();
    while (i < lam.rows()) {
        int value = parts[static_cast<size_t>(i)];
        int j = i;
        while (j < lam.rows() && parts[static_cast<size_t>(j)] == value) ++j;
        result *= binom(j - i, sub.multiplicity(value));
        i = j;
    }
    return result;
}

Int centralizer_order(const Partition& mu) {
    Int z = 1;
    int i = 0;
    const auto& parts = mu.parts();
    while (i < mu.rows()) {
        int value = parts[static_cast<size_t>(i)];
        int j = i;
        while (j < mu.rows() && parts[static_cast<size_t>(j)] == value) ++j;
        int mult = j - i;
        for (int t = 0; t < mult; ++t) z *= value;
        z *= factorial(mult);
        i = j;
    }
    return z;
}

Int conjugacy_class_size(const Partition& mu) {
    return exact_div(factorial(mu.size()), centralizer_order(mu));
}

int perm_sign(const Partition& mu) {
    return ((mu.size() - mu.rows()) % 2 == 0) ? 1 : -1;
}

bool is_close(const Partition& a, const Partition& b) {
    int len = std::max(a.rows(), b.rows());
    for (int i = 0; i < len; ++i) {
        int d = a.part(i) - b.part(i);
        if (d > 1 || d < -1) return false;
    }
    return true;
}

bool is_even(const Partition& p) {
    int i = 0;
    const auto& parts = p.parts();
    while (i < p.rows()) {
        int j = i;
        while (j < p.rows() && parts[static_cast<size_t>(j)] == parts[static_cast<size_t>(i)]) ++j;
        if ((j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

Partition meet(const Partition& a, const Partition& b) {
    std::vector<int> common;
    int len = std::max(a.rows(), b.rows());
    for (int i = 0; i < len; ++i)
        if (a.part(i) == b.part(i) && a.part(i) > 0) common.push_back(a.part(i));
    return Partition(std::move(common));
}

bool is_2transverse(const Partition& a, const Partition& b) {
    return is_close(a, b) && is_even(meet(a, b));
}

bool is_transverse(const Partition& a, const Partition& b) {
    return is_close(a, b) && meet(a, b).empty();
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw constraint_error("partitions_of: negative n");
    std::vector<int> parts;
    // Descending-first-part recursion yields reverse-lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            fn(Partition(parts));
            return;
        }
        for (int next = std::min(remaining, max_part); next >= 1; --next) {
            parts.push_back(next);
            rec(remaining - next, next);
            parts.pop_back();
        }
    };
    rec(n, n);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace unidescent
