#pragma once

#include <initializer_list>
#include <vector>

namespace ringlab {

// A subset of the elements of one ring (or group), kept as a dense
// membership mask over element indices.
struct ElementSet {
    std::vector<bool> bits;

    ElementSet() = default;
    explicit ElementSet(int universe) : bits(universe, false) {}

    static ElementSet of(int universe, std::initializer_list<int> xs) {
        ElementSet s(universe);
        for (int x : xs) s.insert(x);
        return s;
    }

    int universe() const { return static_cast<int>(bits.size()); }

    bool contains(int x) const {
        return x >= 0 && x < universe() && bits[static_cast<std::size_t>(x)];
    }

    void insert(int x) { bits.at(static_cast<std::size_t>(x)) = true; }

    int count() const {
        int n = 0;
        for (bool b : bits) n += b ? 1 : 0;
        return n;
    }

    // Members in ascending index order.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < universe(); ++i)
            if (bits[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }

    bool subset_of(const ElementSet& other) const {
        if (other.universe() != universe()) return false;
        for (int i = 0; i < universe(); ++i)
            if (bits[static_cast<std::size_t>(i)] && !other.bits[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

}  // namespace ringlab
