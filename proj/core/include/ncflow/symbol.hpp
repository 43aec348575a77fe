#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncflow/word.hpp"

namespace ncflow {

using SymbolId = std::uint32_t;

// Process-wide intern table for commuting indeterminates. Ids are dense
// and stable; lookups after creation are lock-guarded but cheap, and all
// symbol data is immutable once created, so Scalars can be shared across
// threads freely.
class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable t;
    return t;
  }

  SymbolId intern(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    SymbolId id = SymbolId(names_.size());
    names_.push_back(name);
    trace_words_.emplace_back();
    is_trace_.push_back(false);
    by_name_.emplace(name, id);
    return id;
  }

  // Formal trace symbol of a (canonical) word. The caller is responsible
  // for canonicalization; this just keys the symbol by the word.
  SymbolId intern_trace(const Word& w) {
    std::string name = "Tr(" + w.str() + ")";
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    SymbolId id = SymbolId(names_.size());
    names_.push_back(name);
    trace_words_.push_back(w);
    is_trace_.push_back(true);
    by_name_.emplace(name, id);
    return id;
  }

  const std::string& name(SymbolId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_[id];
  }
  bool is_trace(SymbolId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return is_trace_[id];
  }
  Word trace_word(SymbolId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return trace_words_[id];
  }

 private:
  SymbolTable() = default;
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::vector<Word> trace_words_;
  std::vector<bool> is_trace_;
  std::unordered_map<std::string, SymbolId> by_name_;
};

inline SymbolId sym(const std::string& name) {
  return SymbolTable::instance().intern(name);
}

// Well-known symbols.
inline SymbolId sym_N() { static SymbolId id = sym("N"); return id; }
inline SymbolId sym_Z() { static SymbolId id = sym("Z"); return id; }
inline SymbolId sym_eta() { static SymbolId id = sym("eta"); return id; }
inline SymbolId sym_h(int k) {
  switch (k) {
    case 1: { static SymbolId id = sym("h1"); return id; }
    case 2: { static SymbolId id = sym("h2"); return id; }
    case 3: { static SymbolId id = sym("h3"); return id; }
    default: throw std::invalid_argument("sym_h: k must be 1, 2 or 3");
  }
}

}  // namespace ncflow
