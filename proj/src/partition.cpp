#include "klr/partition.hpp"

#include <algorithm>
#include <numeric>

namespace klr {

void Partition::normalize() {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
    if (cols == 0) return Partition{};
    return Partition(std::vector<int>(rows, cols));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
    for (int i = 0; i < other.numParts(); ++i)
        if (other.parts_[i] > part(i)) return false;
    return true;
}

bool Partition::fitsIn(int rows, int cols) const {
    return numParts() <= rows && part(0) <= cols;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(parts_[0], 0);
    for (int j = 0; j < parts_[0]; ++j)
        for (int p : parts_) out[j] += (p >= j + 1) ? 1 : 0;
    return Partition(std::move(out));
}

Partition Partition::rectComplement(int rows, int cols) const {
    if (!fitsIn(rows, cols))
        throw std::invalid_argument("partition does not fit in the rectangle");
    std::vector<int> out(rows);
    for (int i = 0; i < rows; ++i) out[i] = cols - part(rows - 1 - i);
    return Partition(std::move(out));
}

Partition Partition::hat(int rows, int cols) const {
    return rectComplement(rows, cols).conjugate();
}

Partition Partition::plusRectangle(int rows, int cols) const {
    if (numParts() > rows)
        throw std::invalid_argument("partition has more parts than the rectangle has rows");
    std::vector<int> out(rows);
    for (int i = 0; i < rows; ++i) out[i] = part(i) + cols;
    return Partition(std::move(out));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = weight() <=> o.weight(); c != 0) return c;
    return o.parts_ <=> parts_;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> enumeratePartitions(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    // depth-first over weakly decreasing part choices, then sort graded-lex
    auto gen = [&](auto&& self, int remainingRows, int maxPart) -> void {
        out.emplace_back(stack);
        if (remainingRows == 0) return;
        for (int p = 1; p <= maxPart; ++p) {
            stack.push_back(p);
            self(self, remainingRows - 1, p);
            stack.pop_back();
        }
    };
    gen(gen, rows, cols);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace klr
