#include "rwit/graph6.hpp"

#include "rwit/errors.hpp"

namespace rwit {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
constexpr long long kMaxOrder = 258047;  // largest order of the 4-byte header
}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (line.empty()) throw ParseError("empty graph6 line", base);

    auto sextet = [&](std::size_t i) -> int {
        unsigned char ch = static_cast<unsigned char>(line[i]);
        if (ch < 63 || ch > 126)
            throw ParseError("character outside graph6 range 63..126", base + i);
        return ch - 63;
    };

    long long n;
    std::size_t pos;
    if (sextet(0) == 63) {  // '~': extended order header
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError("orders above 258047 are not supported", base + 1);
        if (line.size() < 4) throw ParseError("truncated graph6 order header", base + line.size());
        n = (static_cast<long long>(sextet(1)) << 12) |
            (static_cast<long long>(sextet(2)) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < need)
        throw ParseError("graph6 body shorter than the order requires", base + line.size());
    if (line.size() - pos > need)
        throw ParseError("trailing characters after graph6 body", base + pos + need);

    EdgeSet edges;
    long long bit_index = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < need; ++k) {
        int v = sextet(pos + k);
        for (int s = 5; s >= 0; --s, ++bit_index) {
            if (bit_index >= bits) {
                if ((v >> s) & 1) throw ParseError("nonzero padding bits", base + pos + k);
                continue;
            }
            if ((v >> s) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    long long n = g.order();
    if (n > kMaxOrder) throw PreconditionError("graph6 orders above 258047 are not supported");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }

    // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace rwit
