#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace klr {

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros
/// stripped at construction. Equality and ordering act on the stripped form.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    static Partition rectangle(int rows, int cols);  // K_{a,b}

    const std::vector<int>& parts() const { return parts_; }
    int numParts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const;            // |alpha|
    int part(int i) const { return i < numParts() ? parts_[i] : 0; }  // 0-based, 0 beyond end

    bool contains(const Partition& other) const;        // other ⊂ this
    bool fitsIn(int rows, int cols) const;              // member of P(rows, cols)
    Partition conjugate() const;
    Partition hat(int rows, int cols) const;            // conjugate of the rectangle complement
    Partition rectComplement(int rows, int cols) const; // K_{rows,cols} − this
    Partition plusRectangle(int rows, int cols) const;  // this + K_{rows,cols} (pads to `rows` parts)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Graded lexicographic: by weight, then lexicographically dominant parts
    // first, so (2) precedes (1,1).
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string str() const;  // "(2,1)" with "0" for the empty partition

private:
    void normalize();
    std::vector<int> parts_;
};

/// All partitions fitting in an a×b rectangle, in graded lexicographic order.
/// The count is binomial(a+b, a).
std::vector<Partition> enumeratePartitions(int rows, int cols);

}  // namespace klr
