#include "diversol/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace diversol {

namespace {

// Line/column-tracking tokenizer over a whole stream.
class Tokens {
public:
    explicit Tokens(std::istream& in) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
                if (pos >= line.size()) break;
                std::size_t start = pos;
                while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
                tokens_.push_back({line.substr(start, pos - start), lineno, static_cast<int>(start) + 1});
            }
        }
        last_line_ = lineno;
    }

    bool done() const { return next_ >= tokens_.size(); }

    std::string expect_word(const std::string& what) {
        if (done()) throw ParseError(last_line_, 1, "unexpected end of input, expected " + what);
        return tokens_[next_++].text;
    }

    long long expect_int(const std::string& what) {
        if (done()) throw ParseError(last_line_, 1, "unexpected end of input, expected " + what);
        const Token& t = tokens_[next_];
        try {
            std::size_t used = 0;
            long long v = std::stoll(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("");
            ++next_;
            return v;
        } catch (const std::exception&) {
            throw ParseError(t.line, t.column, "expected " + what + ", got '" + t.text + "'");
        }
    }

    void expect_keyword(const std::string& word) {
        if (done()) throw ParseError(last_line_, 1, "unexpected end of input, expected '" + word + "'");
        const Token& t = tokens_[next_];
        if (t.text != word)
            throw ParseError(t.line, t.column, "expected '" + word + "', got '" + t.text + "'");
        ++next_;
    }

    bool peek_is(const std::string& word) const {
        return !done() && tokens_[next_].text == word;
    }

    void expect_end() {
        if (!done()) {
            const Token& t = tokens_[next_];
            throw ParseError(t.line, t.column, "unexpected trailing token '" + t.text + "'");
        }
    }

    std::pair<int, int> position() const {
        if (done()) return {last_line_, 1};
        return {tokens_[next_].line, tokens_[next_].column};
    }

private:
    struct Token {
        std::string text;
        int line;
        int column;
    };
    std::vector<Token> tokens_;
    std::size_t next_ = 0;
    int last_line_ = 1;
};

WeightFunction read_optional_weights(Tokens& tokens, int n) {
    if (tokens.peek_is("weights")) {
        tokens.expect_keyword("weights");
        std::vector<Weight> w(static_cast<std::size_t>(n));
        auto pos = tokens.position();
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = tokens.expect_int("weight");
        try {
            return WeightFunction(std::move(w));
        } catch (const InputError& err) {
            throw ParseError(pos.first, pos.second, err.what());
        }
    }
    return WeightFunction::ones(n);
}

int expect_count(Tokens& tokens, const std::string& what) {
    auto pos = tokens.position();
    long long v = tokens.expect_int(what);
    if (v < 0 || v > 1000000) throw ParseError(pos.first, pos.second, what + " out of range");
    return static_cast<int>(v);
}

}  // namespace

ParsedMatroid parse_matroid(std::istream& in) {
    Tokens tokens(in);
    tokens.expect_keyword("matroid");
    auto kind_pos = tokens.position();
    std::string kind = tokens.expect_word("matroid kind");
    ParsedMatroid out;
    try {
        if (kind == "uniform") {
            out.kind = MatroidKind::Uniform;
            int n = expect_count(tokens, "ground size");
            int r = expect_count(tokens, "rank");
            out.matroid = make_uniform(n, r);
            out.weights_given = tokens.peek_is("weights");
            out.weights = read_optional_weights(tokens, n);
        } else if (kind == "graphic") {
            out.kind = MatroidKind::Graphic;
            int vertices = expect_count(tokens, "vertex count");
            int m = expect_count(tokens, "edge count");
            std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(m));
            for (auto& [u, v] : edges) {
                u = expect_count(tokens, "edge endpoint");
                v = expect_count(tokens, "edge endpoint");
            }
            out.matroid = make_graphic(vertices, std::move(edges));
            out.weights_given = tokens.peek_is("weights");
            out.weights = read_optional_weights(tokens, m);
        } else if (kind == "linear") {
            out.kind = MatroidKind::Linear;
            tokens.expect_keyword("field");
            auto p_pos = tokens.position();
            long long p = tokens.expect_int("field modulus");
            if (!is_prime(p)) throw ParseError(p_pos.first, p_pos.second, "field modulus must be prime");
            tokens.expect_keyword("rows");
            int rows = expect_count(tokens, "row count");
            tokens.expect_keyword("cols");
            int cols = expect_count(tokens, "column count");
            ModMatrix matrix(rows, cols, p);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) matrix.set(r, c, tokens.expect_int("matrix entry"));
            out.matroid = make_linear(std::move(matrix));
            out.weights_given = tokens.peek_is("weights");
            out.weights = read_optional_weights(tokens, cols);
        } else {
            throw ParseError(kind_pos.first, kind_pos.second,
                             "unknown matroid kind '" + kind + "'");
        }
    } catch (const InputError& err) {
        throw ParseError(kind_pos.first, kind_pos.second, err.what());
    }
    tokens.expect_end();
    return out;
}

ParsedMatroid parse_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_matroid(in);
}

std::string print_matroid(const ParsedMatroid& m) {
    std::ostringstream out;
    if (m.kind == MatroidKind::Uniform) {
        auto* u = dynamic_cast<const UniformMatroid*>(m.matroid.get());
        out << "matroid uniform\n" << u->ground_size() << " " << u->r() << "\n";
    } else if (m.kind == MatroidKind::Graphic) {
        auto* g = dynamic_cast<const GraphicMatroid*>(m.matroid.get());
        out << "matroid graphic\n" << g->num_vertices() << " " << g->edges().size() << "\n";
        for (auto [u, v] : g->edges()) out << u << " " << v << "\n";
    } else {
        auto* l = dynamic_cast<const LinearMatroid*>(m.matroid.get());
        const ModMatrix& mat = l->matrix();
        out << "matroid linear\nfield " << mat.modulus() << "\nrows " << mat.rows() << " cols "
            << mat.cols() << "\n";
        for (int r = 0; r < mat.rows(); ++r) {
            for (int c = 0; c < mat.cols(); ++c) out << (c ? " " : "") << mat.at(r, c);
            out << "\n";
        }
    }
    if (m.weights_given) {
        out << "weights";
        for (Weight w : m.weights.values()) out << " " << w;
        out << "\n";
    }
    return out.str();
}

Graph parse_graph(std::istream& in) {
    Tokens tokens(in);
    tokens.expect_keyword("graph");
    auto pos = tokens.position();
    int n = expect_count(tokens, "vertex count");
    int m = expect_count(tokens, "edge count");
    std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(m));
    for (auto& [u, v] : edges) {
        u = expect_count(tokens, "edge endpoint");
        v = expect_count(tokens, "edge endpoint");
    }
    tokens.expect_end();
    try {
        return Graph(n, std::move(edges));
    } catch (const InputError& err) {
        throw ParseError(pos.first, pos.second, err.what());
    }
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_graph(in);
}

std::string print_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::vector<ElemSet> parse_witness(std::istream& in) {
    std::vector<ElemSet> sets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::vector<int> ids;
        std::string token;
        while (row >> token) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(token, &used);
                if (used != token.size() || v < 0 || v > 1000000) throw std::invalid_argument("");
                ids.push_back(static_cast<int>(v));
            } catch (const std::exception&) {
                throw ParseError(lineno, 1, "expected element id, got '" + token + "'");
            }
        }
        sets.push_back(make_set(std::move(ids)));
    }
    return sets;
}

std::vector<ElemSet> parse_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_witness(in);
}

std::string print_witness(const std::vector<ElemSet>& sets) {
    std::ostringstream out;
    for (const ElemSet& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << "\n";
    }
    return out.str();
}

std::string print_kernel(const WdbKernel& kernel) {
    std::ostringstream out;
    out << "matroid linear\nfield " << kernel.matrix.modulus() << "\nrows " << kernel.matrix.rows()
        << " cols " << kernel.matrix.cols() << "\n";
    for (int r = 0; r < kernel.matrix.rows(); ++r) {
        for (int c = 0; c < kernel.matrix.cols(); ++c) out << (c ? " " : "") << kernel.matrix.at(r, c);
        out << "\n";
    }
    out << "weights";
    for (Weight w : kernel.weights) out << " " << w;
    out << "\n";
    return out.str();
}

}  // namespace diversol
