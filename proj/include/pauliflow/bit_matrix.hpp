#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pauliflow {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Ordered list of distinct labels with O(1) lookup. Shared between copies.
class Labels {
public:
    Labels() : Labels(std::vector<std::string>{}) {}
    explicit Labels(std::vector<std::string> names);
    Labels(std::initializer_list<std::string> names) : Labels(std::vector<std::string>(names)) {}

    /// "prefix0", "prefix1", ... (or starting from `first`).
    static Labels synthetic(std::string_view prefix, std::size_t count, std::size_t first = 0);

    [[nodiscard]] std::size_t size() const { return data_->names.size(); }
    [[nodiscard]] bool empty() const { return size() == 0; }
    [[nodiscard]] const std::string& operator[](std::size_t i) const { return data_->names[i]; }
    [[nodiscard]] const std::vector<std::string>& names() const { return data_->names; }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    /// Throws std::out_of_range for unknown labels.
    [[nodiscard]] std::size_t index_of(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const { return find(name).has_value(); }

    [[nodiscard]] Labels concat(const Labels& other) const;

    friend bool operator==(const Labels& a, const Labels& b);

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Dense matrix over GF(2) with labelled rows and columns. Rows are packed into
/// 64-bit words; every row starts on a word boundary and unused tail bits stay zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(Labels rows, Labels cols);

    static BitMatrix identity(const Labels& labels);
    /// Test/fixture helper: one string of '0'/'1' per row.
    static BitMatrix from_rows(Labels rows, Labels cols, const std::vector<std::string>& bits);

    [[nodiscard]] const Labels& row_labels() const { return rows_; }
    [[nodiscard]] const Labels& col_labels() const { return cols_; }
    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_.size(); }
    [[nodiscard]] std::size_t row_words() const { return stride_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
        check(r, c);
        return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true) {
        check(r, c);
        const Word mask = Word{1} << (c % kWordBits);
        Word& w = row(r)[c / kWordBits];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) {
        check(r, c);
        row(r)[c / kWordBits] ^= Word{1} << (c % kWordBits);
    }
    [[nodiscard]] bool at(std::string_view r, std::string_view c) const {
        return get(rows_.index_of(r), cols_.index_of(c));
    }

    [[nodiscard]] std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    [[nodiscard]] std::span<const Word> row(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }

    /// row dst ^= row src
    void add_row(std::size_t dst, std::size_t src);
    /// row dst ^= row src_row of `src` (same column count required).
    void add_row_from(std::size_t dst, const BitMatrix& src, std::size_t src_row);
    void swap_rows(std::size_t a, std::size_t b);

    [[nodiscard]] bool row_is_zero(std::size_t r) const;
    /// Lowest set column in row r among columns [0, limit); nullopt if none.
    [[nodiscard]] std::optional<std::size_t> leading_column(std::size_t r, std::size_t limit) const;
    [[nodiscard]] std::optional<std::size_t> leading_column(std::size_t r) const {
        return leading_column(r, cols());
    }
    [[nodiscard]] std::size_t row_popcount(std::size_t r) const;
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] BitMatrix transpose() const;
    /// Columns [first, first + count) as a new matrix.
    [[nodiscard]] BitMatrix column_block(std::size_t first, std::size_t count) const;
    [[nodiscard]] BitMatrix with_labels(Labels rows, Labels cols) const;

    /// One string of 0/1 characters per row.
    [[nodiscard]] std::vector<std::string> bit_strings() const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b);

private:
    void check(std::size_t r, std::size_t c) const;

    Labels rows_;
    Labels cols_;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// [a | b]; row labels must agree, column labels must be disjoint.
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
/// a stacked over b; column labels must agree, row labels must be disjoint.
BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b);

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);

}  // namespace pauliflow
