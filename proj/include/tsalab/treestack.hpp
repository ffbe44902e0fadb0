// Copyright 2026 The tsalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSALAB_TREESTACK_HPP
#define TSALAB_TREESTACK_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsalab/expected.hpp"

namespace tsalab {

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

/// A vertex address: a path of positive child indices from the root.
/// The empty path is the root.
class Address {
public:
    Address() = default;
    explicit Address(std::vector<std::uint32_t> path) : path_(std::move(path)) {
        for (auto n : path_) {
            if (n == 0) throw std::invalid_argument("address entries must be >= 1");
        }
    }
    Address(std::initializer_list<std::uint32_t> path) : Address(std::vector<std::uint32_t>(path)) {}

    static Address root() { return Address(); }

    bool is_root() const { return path_.empty(); }
    std::size_t depth() const { return path_.size(); }
    const std::vector<std::uint32_t>& path() const { return path_; }

    Address child(std::uint32_t n) const {
        Address a = *this;
        if (n == 0) throw std::invalid_argument("child index must be >= 1");
        a.path_.push_back(n);
        return a;
    }
    Address parent() const {
        if (is_root()) throw std::logic_error("root has no parent");
        Address a = *this;
        a.path_.pop_back();
        return a;
    }
    std::uint32_t last() const {
        if (is_root()) throw std::logic_error("root has no child index");
        return path_.back();
    }

    /// True when this address is a (not necessarily proper) prefix of `other`.
    bool is_prefix_of(const Address& other) const {
        if (path_.size() > other.path_.size()) return false;
        for (std::size_t i = 0; i < path_.size(); ++i) {
            if (path_[i] != other.path_[i]) return false;
        }
        return true;
    }

    /// Replaces the prefix `from` by `to`. Precondition: from.is_prefix_of(*this).
    Address rebase(const Address& from, const Address& to) const {
        std::vector<std::uint32_t> p = to.path_;
        p.insert(p.end(), path_.begin() + static_cast<std::ptrdiff_t>(from.path_.size()), path_.end());
        return Address(std::move(p));
    }

    std::string to_string() const {
        if (path_.empty()) return "eps";
        std::string s;
        for (std::size_t i = 0; i < path_.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(path_[i]);
        }
        return s;
    }

    /// Parses `eps` or dot-separated positive integers.
    static std::optional<Address> parse(std::string_view text) {
        if (text == "eps" || text == "e" || text.empty()) return Address();
        std::vector<std::uint32_t> p;
        std::size_t i = 0;
        while (i <= text.size()) {
            std::size_t j = text.find('.', i);
            if (j == std::string_view::npos) j = text.size();
            auto part = text.substr(i, j - i);
            if (part.empty() || part.size() > 9) return std::nullopt;
            std::uint32_t v = 0;
            for (char c : part) {
                if (c < '0' || c > '9') return std::nullopt;
                v = v * 10 + static_cast<std::uint32_t>(c - '0');
            }
            if (v == 0) return std::nullopt;
            p.push_back(v);
            i = j + 1;
        }
        return Address(std::move(p));
    }

    auto operator<=>(const Address&) const = default;
    bool operator==(const Address&) const = default;

private:
    std::vector<std::uint32_t> path_;
};

struct AddressHash {
    std::size_t operator()(const Address& a) const {
        std::size_t h = a.depth();
        for (auto n : a.path()) hash_combine(h, n);
        return h;
    }
};

/// A tree label: either the root marker `@` or an index into a label alphabet.
struct Label {
    std::int32_t id = -1;

    static constexpr Label root() { return Label{-1}; }
    static constexpr Label of(std::int32_t i) { return Label{i}; }
    constexpr bool is_root() const { return id < 0; }

    auto operator<=>(const Label&) const = default;
    bool operator==(const Label&) const = default;
};

struct Predicate {
    enum class Kind { True, Eq };
    Kind kind = Kind::True;
    Label label;

    static Predicate always() { return Predicate{Kind::True, Label::root()}; }
    static Predicate eq(Label l) { return Predicate{Kind::Eq, l}; }

    bool operator==(const Predicate& o) const {
        return kind == o.kind && (kind == Kind::True || label == o.label);
    }
};

struct Instruction {
    enum class Kind { Id, Push, Up, Down, Set };
    Kind kind = Kind::Id;
    std::uint32_t n = 0;  // child index for push/up
    Label label;          // for push/set

    static Instruction id() { return {Kind::Id, 0, Label::root()}; }
    static Instruction push(std::uint32_t n, Label c) { return {Kind::Push, n, c}; }
    static Instruction up(std::uint32_t n) { return {Kind::Up, n, Label::root()}; }
    static Instruction down() { return {Kind::Down, 0, Label::root()}; }
    static Instruction set(Label c) { return {Kind::Set, 0, c}; }

    /// id and set leave the pointer where it is.
    bool is_stationary() const { return kind == Kind::Id || kind == Kind::Set; }
    /// push and up move the pointer to a child ("visit from below").
    bool moves_up() const { return kind == Kind::Push || kind == Kind::Up; }

    bool operator==(const Instruction& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case Kind::Id:
            case Kind::Down: return true;
            case Kind::Up: return n == o.n;
            case Kind::Set: return label == o.label;
            case Kind::Push: return n == o.n && label == o.label;
        }
        return false;
    }
};

enum class TsError { PushTargetExists, UpTargetMissing, PointerAtRoot, AddressMissing };

inline const char* to_string(TsError e) {
    switch (e) {
        case TsError::PushTargetExists: return "PushTargetExists";
        case TsError::UpTargetMissing: return "UpTargetMissing";
        case TsError::PointerAtRoot: return "PointerAtRoot";
        case TsError::AddressMissing: return "AddressMissing";
    }
    return "?";
}

/// A finite prefix-closed labelled tree together with a pointer into it.
/// Values are immutable in practice: every instruction returns a new tree stack.
class TreeStack {
public:
    TreeStack() { nodes_.emplace(Address::root(), Label::root()); }

    const Address& pointer() const { return pointer_; }
    Label pointer_label() const { return nodes_.at(pointer_); }
    std::size_t size() const { return nodes_.size(); }
    const std::map<Address, Label>& nodes() const { return nodes_; }

    bool contains(const Address& a) const { return nodes_.count(a) != 0; }
    std::optional<Label> label(const Address& a) const {
        auto it = nodes_.find(a);
        if (it == nodes_.end()) return std::nullopt;
        return it->second;
    }

    Expected<TreeStack, TsError> apply(const Instruction& instr) const {
        using K = Instruction::Kind;
        switch (instr.kind) {
            case K::Id: return *this;
            case K::Push: {
                Address target = pointer_.child(instr.n);
                if (contains(target)) return unexpected(TsError::PushTargetExists);
                TreeStack out = *this;
                out.nodes_.emplace(target, instr.label);
                out.pointer_ = std::move(target);
                return out;
            }
            case K::Up: {
                Address target = pointer_.child(instr.n);
                if (!contains(target)) return unexpected(TsError::UpTargetMissing);
                TreeStack out = *this;
                out.pointer_ = std::move(target);
                return out;
            }
            case K::Down: {
                if (pointer_.is_root()) return unexpected(TsError::PointerAtRoot);
                TreeStack out = *this;
                out.pointer_ = pointer_.parent();
                return out;
            }
            case K::Set: {
                if (pointer_.is_root()) return unexpected(TsError::PointerAtRoot);
                TreeStack out = *this;
                out.nodes_[pointer_] = instr.label;
                return out;
            }
        }
        return *this;
    }

    bool holds(const Predicate& p) const {
        return p.kind == Predicate::Kind::True || pointer_label() == p.label;
    }

    /// Checks prefix-closure, the root marker and pointer membership.
    bool well_formed() const {
        auto it = nodes_.find(Address::root());
        if (it == nodes_.end() || !it->second.is_root()) return false;
        for (const auto& [addr, lab] : nodes_) {
            if (addr.is_root()) continue;
            if (lab.is_root()) return false;
            if (!contains(addr.parent())) return false;
        }
        return contains(pointer_);
    }

    /// Builds a tree stack from explicit contents; throws if malformed.
    static TreeStack from_nodes(std::map<Address, Label> nodes, Address pointer) {
        TreeStack ts;
        ts.nodes_ = std::move(nodes);
        ts.pointer_ = std::move(pointer);
        if (!ts.well_formed()) throw std::invalid_argument("malformed tree stack");
        return ts;
    }

    std::size_t hash() const {
        std::size_t h = AddressHash{}(pointer_);
        for (const auto& [addr, lab] : nodes_) {
            hash_combine(h, AddressHash{}(addr));
            hash_combine(h, static_cast<std::size_t>(lab.id + 1));
        }
        return h;
    }

    bool operator==(const TreeStack&) const = default;

private:
    std::map<Address, Label> nodes_;
    Address pointer_;
};

inline TreeStack ts_init() { return TreeStack(); }

inline Expected<TreeStack, TsError> ts_apply(const TreeStack& ts, const Instruction& instr) {
    return ts.apply(instr);
}

inline bool pred_eval(const TreeStack& ts, const Predicate& p) { return ts.holds(p); }

struct AboveBelow {
    std::vector<Address> above;  // addresses having nu as prefix, nu included
    std::vector<Address> below;
};

inline Expected<AboveBelow, TsError> above_below(const TreeStack& ts, const Address& nu) {
    if (!ts.contains(nu)) return unexpected(TsError::AddressMissing);
    AboveBelow out;
    for (const auto& [addr, lab] : ts.nodes()) {
        (nu.is_prefix_of(addr) ? out.above : out.below).push_back(addr);
    }
    return out;
}

/// Canonical rendering `(eps=@, 1=STAR; ptr=1)`; entries are in path order.
inline std::string render(const TreeStack& ts, const std::function<std::string(Label)>& name) {
    std::string s = "(";
    bool first = true;
    for (const auto& [addr, lab] : ts.nodes()) {
        if (!first) s += ", ";
        first = false;
        s += addr.to_string();
        s += '=';
        s += lab.is_root() ? std::string("@") : name(lab);
    }
    s += "; ptr=";
    s += ts.pointer().to_string();
    s += ')';
    return s;
}

inline std::string render(const TreeStack& ts, std::span<const std::string> label_names) {
    return render(ts, [&](Label l) { return label_names[static_cast<std::size_t>(l.id)]; });
}

}  // namespace tsalab

#endif  // TSALAB_TREESTACK_HPP
