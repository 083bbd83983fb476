#include <rdom/graph6.hh>

using std::string;
using std::string_view;
using std::to_string;

namespace rdom
{
    namespace
    {
        constexpr string_view header = ">>graph6<<";
        constexpr int bias = 63;

        auto sextet(char c) -> int
        {
            auto u = static_cast<unsigned char>(c);
            if (u < 63 || u > 126)
                throw Graph6Error{"character code " + to_string(u) + " outside graph6 range 63..126"};
            return u - bias;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        if (text.empty())
            throw Graph6Error{"empty graph6 record"};

        long n = 0;
        std::size_t pos = 0;
        if (text[0] != '~') {
            n = sextet(text[0]);
            pos = 1;
        }
        else if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error{"graph6 order field given in 36-bit form; orders above 64 are not supported"};
        else {
            if (text.size() < 4)
                throw Graph6Error{"truncated graph6 order field"};
            n = (long{sextet(text[1])} << 12) | (long{sextet(text[2])} << 6) | long{sextet(text[3])};
            pos = 4;
            if (n < 63)
                throw Graph6Error{"non-canonical graph6 order field for n = " + to_string(n)};
        }
        if (n > max_order)
            throw Graph6Error{"graph6 order " + to_string(n) + " exceeds the " + to_string(max_order) + "-vertex cap"};

        long bits = n * (n - 1) / 2;
        auto body_length = static_cast<std::size_t>((bits + 5) / 6);
        if (text.size() - pos != body_length)
            throw Graph6Error{"graph6 body has " + to_string(text.size() - pos) + " characters, expected " + to_string(body_length)};

        Graph g(static_cast<int>(n));
        long k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k) {
                int c = sextet(text[pos + k / 6]);
                if ((c >> (5 - k % 6)) & 1)
                    g.add_edge(i, j);
            }
        for (; k < static_cast<long>(body_length) * 6; ++k)
            if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1)
                throw Graph6Error{"graph6 padding bits are not zero"};
        for (auto c : text.substr(pos))
            sextet(c);
        return g;
    }

    auto write_graph6(const Graph & g) -> string
    {
        int n = g.order();
        string out;
        if (n < 63)
            out.push_back(static_cast<char>(n + bias));
        else {
            out.push_back('~');
            out.push_back(static_cast<char>(((n >> 12) & 63) + bias));
            out.push_back(static_cast<char>(((n >> 6) & 63) + bias));
            out.push_back(static_cast<char>((n & 63) + bias));
        }
        int acc = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(acc + bias));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((acc << (6 - filled)) + bias));
        return out;
    }

    auto read_graph6_stream(std::istream & in) -> Graph6Stream
    {
        Graph6Stream result;
        string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line == header)
                continue;
            try {
                result.graphs.push_back(Graph6Line{number, parse_graph6(line)});
            }
            catch (const Graph6Error & e) {
                result.failures.push_back(Graph6ParseFailure{number, e.what()});
            }
            catch (const GraphError & e) {
                result.failures.push_back(Graph6ParseFailure{number, e.what()});
            }
        }
        return result;
    }
}
