#pragma once

#include "qtexp/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtexp::cli {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One n x n matrix, n in {2, 3, 4}, row-major.
struct MatrixDocument {
    int n = 0;
    bool complex = false;
    std::vector<cplx> entries;
    std::string label;
    /// Present on documents written by `expm --json`.
    std::optional<std::string> route;
};

/// Plain text (whitespace-separated row-major scalars, `#` comments, optional
/// leading token `complex` followed by interleaved re,im pairs) or JSON with
/// the MatrixDocument field names. n is inferred for plain text.
MatrixDocument parse_document(std::string_view text);

/// JSON with 17 significant digits per entry.
std::string to_json(const MatrixDocument& doc);

template <std::size_t N>
SquareMatrix<double, N> real_matrix(const MatrixDocument& doc)
{
    SquareMatrix<double, N> m;
    for (std::size_t k = 0; k < N * N; ++k) {
        m(k / N, k % N) = doc.entries[k].real();
    }
    return m;
}

template <std::size_t N>
SquareMatrix<cplx, N> complex_matrix(const MatrixDocument& doc)
{
    SquareMatrix<cplx, N> m;
    for (std::size_t k = 0; k < N * N; ++k) {
        m(k / N, k % N) = doc.entries[k];
    }
    return m;
}

template <typename T, std::size_t N>
MatrixDocument make_document(const SquareMatrix<T, N>& m, std::string label)
{
    MatrixDocument doc;
    doc.n = static_cast<int>(N);
    doc.complex = is_complex_v<T>;
    doc.label = std::move(label);
    for (const auto& v : m.data()) {
        doc.entries.emplace_back(v);
    }
    return doc;
}

} // namespace qtexp::cli
