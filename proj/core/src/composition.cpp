#include "hopfmzv/composition.hpp"

#include "hopfmzv/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hopfmzv {

namespace {

unsigned sum_parts(const std::vector<Part>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

void append_compositions(unsigned n, std::vector<Part>& prefix, std::vector<Composition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    // Ascending order means lexicographically descending parts.
    for (Part first = n; first >= 1; --first) {
        prefix.push_back(first);
        append_compositions(n - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Composition::Composition(std::initializer_list<Part> parts)
    : Composition(std::vector<Part>(parts)) {}

Composition::Composition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (Part p : parts_)
        if (p == 0)
            throw DomainError("composition parts must be >= 1");
    weight_ = sum_parts(parts_);
}

Composition Composition::ones(std::size_t k) { return Composition(std::vector<Part>(k, 1)); }

Composition Composition::concat(const Composition& other) const {
    Composition out = *this;
    out.parts_.insert(out.parts_.end(), other.parts_.begin(), other.parts_.end());
    out.weight_ += other.weight_;
    return out;
}

Composition Composition::reversed() const {
    Composition out = *this;
    std::reverse(out.parts_.begin(), out.parts_.end());
    return out;
}

Composition Composition::tail(std::size_t n) const {
    n = std::min(n, parts_.size());
    return Composition(std::vector<Part>(parts_.begin() + static_cast<std::ptrdiff_t>(n), parts_.end()));
}

Composition Composition::prepend(Part first) const {
    std::vector<Part> parts;
    parts.reserve(parts_.size() + 1);
    parts.push_back(first);
    parts.insert(parts.end(), parts_.begin(), parts_.end());
    return Composition(std::move(parts));
}

Composition Composition::incremented(std::size_t index, Part by) const {
    Composition out = *this;
    out.parts_.at(index) += by;
    out.weight_ += by;
    return out;
}

std::string Composition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Composition::to_literal() const {
    if (is_unit())
        return "1";
    return "[" + to_string() + "]";
}

Composition Composition::parse_canonical(const std::string& text) {
    std::vector<Part> parts;
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (true) {
        Part value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first)
            throw ParseError(pos, "expected a positive integer in composition \"" + text + "\"");
        if (value == 0)
            throw ParseError(pos, "composition parts must be >= 1 in \"" + text + "\"");
        parts.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw ParseError(pos, "expected ',' in composition \"" + text + "\"");
        ++pos;
    }
    return Composition(std::move(parts));
}

std::strong_ordering order_cmp(const Composition& a, const Composition& b) {
    if (a.weight() != b.weight())
        throw ComparisonError("cannot compare compositions of different weight: " + a.to_literal() +
                              " and " + b.to_literal());
    const std::size_t n = std::min(a.depth(), b.depth());
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j] != b[j])
            return a[j] < b[j] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    // Equal weight and a common prefix force equal length.
    return std::strong_ordering::equal;
}

bool BasisLess::operator()(const Composition& a, const Composition& b) const noexcept {
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool TensorKeyLess::operator()(const std::vector<Composition>& a,
                               const std::vector<Composition>& b) const noexcept {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), BasisLess{});
}

std::size_t CompositionHash::operator()(const Composition& c) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Part p : c)
        h ^= std::hash<Part>{}(p) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::vector<Composition> enumerate_basis(unsigned n) {
    std::vector<Composition> out;
    if (n > 0)
        out.reserve(std::size_t{1} << (n - 1));
    std::vector<Part> prefix;
    append_compositions(n, prefix, out);
    return out;
}

std::vector<Composition> compositions_up_to(unsigned max_weight) {
    std::vector<Composition> out;
    for (unsigned n = 0; n <= max_weight; ++n) {
        auto level = enumerate_basis(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Composition concat_all(std::span<const Composition> factors) {
    std::vector<Part> parts;
    for (const auto& f : factors)
        parts.insert(parts.end(), f.begin(), f.end());
    return Composition(std::move(parts));
}

bool tensor_le(std::span<const Composition> u, std::span<const Composition> v) {
    return order_cmp(concat_all(u), concat_all(v)) != std::strong_ordering::greater;
}

std::vector<Composition> coarsenings(const Composition& c) {
    if (c.depth() <= 1)
        return {c};
    const std::size_t gaps = c.depth() - 1;
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << gaps);
    // Bit g set: the part boundary after position g is kept.
    for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
        std::vector<Part> parts{c[0]};
        for (std::size_t g = 0; g < gaps; ++g) {
            if (mask & (std::size_t{1} << g))
                parts.push_back(c[g + 1]);
            else
                parts.back() += c[g + 1];
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end(), BasisLess{});
    return out;
}

bool is_admissible(const Composition& c) noexcept { return c.depth() >= 1 && c.front() >= 2; }

Word encode_word(const Composition& c) {
    Word w;
    w.reserve(c.weight());
    for (Part s : c) {
        w.insert(w.end(), s - 1, Letter::x0);
        w.push_back(Letter::x1);
    }
    return w;
}

Composition decode_word(const Word& w) {
    if (!w.empty() && w.back() != Letter::x1)
        throw DomainError("word \"" + to_string(w) + "\" does not end in x1");
    std::vector<Part> parts;
    Part run = 0;
    for (Letter l : w) {
        ++run;
        if (l == Letter::x1) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Composition(std::move(parts));
}

std::string to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += w[i] == Letter::x0 ? "x0" : "x1";
    }
    return s;
}

} // namespace hopfmzv
