#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gaussalg {

/// An ordered list of variable names. The position of a name is its index in
/// every exponent vector; the order is fixed at creation. Two rings are the
/// same ring iff their name lists are equal.
class Ring {
public:
    explicit Ring(std::vector<std::string> names);

    static std::shared_ptr<const Ring> make(std::vector<std::string> names) {
        return std::make_shared<const Ring>(std::move(names));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Ring& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace gaussalg
