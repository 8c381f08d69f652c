#include "pauliflow/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pauliflow {

Labels::Labels(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    data->index.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!data->index.emplace(names[i], i).second) {
            throw std::invalid_argument("duplicate label '" + names[i] + "'");
        }
    }
    data->names = std::move(names);
    data_ = std::move(data);
}

Labels Labels::synthetic(std::string_view prefix, std::size_t count, std::size_t first) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back(std::string(prefix) + std::to_string(first + i));
    }
    return Labels(std::move(names));
}

std::optional<std::size_t> Labels::find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t Labels::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw std::out_of_range("unknown label '" + std::string(name) + "'");
}

Labels Labels::concat(const Labels& other) const {
    std::vector<std::string> names = data_->names;
    names.insert(names.end(), other.names().begin(), other.names().end());
    return Labels(std::move(names));
}

bool operator==(const Labels& a, const Labels& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

BitMatrix::BitMatrix(Labels rows, Labels cols)
    : rows_(std::move(rows)), cols_(std::move(cols)), stride_(words_for(cols_.size())),
      data_(rows_.size() * stride_, 0) {}

BitMatrix BitMatrix::identity(const Labels& labels) {
    BitMatrix m(labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(Labels rows, Labels cols, const std::vector<std::string>& bits) {
    BitMatrix m(std::move(rows), std::move(cols));
    if (bits.size() != m.rows()) throw std::invalid_argument("from_rows: row count mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (bits[r].size() != m.cols()) throw std::invalid_argument("from_rows: column count mismatch");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (bits[r][c] == '1') {
                m.set(r, c);
            } else if (bits[r][c] != '0') {
                throw std::invalid_argument("from_rows: expected '0' or '1'");
            }
        }
    }
    return m;
}

void BitMatrix::check(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols()) {
        throw std::out_of_range("BitMatrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows()) + "x" + std::to_string(cols()));
    }
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::add_row_from(std::size_t dst, const BitMatrix& src, std::size_t src_row) {
    if (src.cols() != cols()) throw std::invalid_argument("add_row_from: column count mismatch");
    auto d = row(dst);
    auto s = src.row(src_row);
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    auto s = row(r);
    return std::all_of(s.begin(), s.end(), [](Word w) { return w == 0; });
}

std::optional<std::size_t> BitMatrix::leading_column(std::size_t r, std::size_t limit) const {
    auto s = row(r);
    limit = std::min(limit, cols());
    for (std::size_t w = 0; w * kWordBits < limit; ++w) {
        if (s[w] != 0) {
            const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(s[w]));
            if (c < limit) return c;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
    std::size_t total = 0;
    for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows(); ++r) {
        auto s = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word bits = s[w];
            while (bits != 0) {
                const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                t.row(c)[r / kWordBits] |= Word{1} << (r % kWordBits);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::column_block(std::size_t first, std::size_t count) const {
    if (first + count > cols()) throw std::out_of_range("column_block outside matrix");
    std::vector<std::string> names(cols_.names().begin() + static_cast<std::ptrdiff_t>(first),
                                   cols_.names().begin() + static_cast<std::ptrdiff_t>(first + count));
    BitMatrix out(rows_, Labels(std::move(names)));
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < count; ++c) {
            if (get(r, first + c)) out.set(r, c);
        }
    }
    return out;
}

BitMatrix BitMatrix::with_labels(Labels rows, Labels cols) const {
    if (rows.size() != this->rows() || cols.size() != this->cols()) {
        throw std::invalid_argument("with_labels: shape mismatch");
    }
    BitMatrix out = *this;
    out.rows_ = std::move(rows);
    out.cols_ = std::move(cols);
    return out;
}

std::vector<std::string> BitMatrix::bit_strings() const {
    std::vector<std::string> out(rows(), std::string(cols(), '0'));
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            if (get(r, c)) out[r][c] = '1';
        }
    }
    return out;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (!(a.row_labels() == b.row_labels())) throw std::invalid_argument("hconcat: row labels differ");
    BitMatrix out(a.row_labels(), a.col_labels().concat(b.col_labels()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (b.get(r, c)) out.set(r, a.cols() + c);
        }
    }
    return out;
}

BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b) {
    if (!(a.col_labels() == b.col_labels())) throw std::invalid_argument("vconcat: column labels differ");
    BitMatrix out(a.row_labels().concat(b.row_labels()), a.col_labels());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::copy(b.row(r).begin(), b.row(r).end(), out.row(a.rows() + r).begin());
    }
    return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (!(a.row_labels() == b.row_labels()) || !(a.col_labels() == b.col_labels())) {
        throw std::invalid_argument("matrix sum: label mismatch");
    }
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out.add_row_from(r, b, r);
    return out;
}

}  // namespace pauliflow
