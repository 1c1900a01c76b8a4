#pragma once

#include <memory>
#include <span>
#include <string>

#include "posslog/c1.hpp"
#include "posslog/classical.hpp"
#include "posslog/formula.hpp"

namespace posslog {

enum class LogicKind { Classical, C1 };

std::string to_string(LogicKind kind);

// Consequence-relation interface shared by the graded layers.
class LogicBackend {
 public:
  virtual ~LogicBackend() = default;
  virtual bool entails(std::span<const Formula> premises, Formula goal) const = 0;
  virtual LogicKind kind() const = 0;
  bool valid(Formula goal) const { return entails({}, goal); }
};

class ClassicalBackend final : public LogicBackend {
 public:
  explicit ClassicalBackend(ClassicalOptions opts = {}) : opts_(opts) {}
  bool entails(std::span<const Formula> premises, Formula goal) const override {
    return classical_entails(premises, goal, opts_);
  }
  LogicKind kind() const override { return LogicKind::Classical; }
  const ClassicalOptions& options() const { return opts_; }

 private:
  ClassicalOptions opts_;
};

class C1Backend final : public LogicBackend {
 public:
  explicit C1Backend(C1Options opts = {}) : opts_(opts) {}
  bool entails(std::span<const Formula> premises, Formula goal) const override {
    return c1_entails(premises, goal, opts_);
  }
  LogicKind kind() const override { return LogicKind::C1; }
  const C1Options& options() const { return opts_; }

 private:
  C1Options opts_;
};

struct BackendOptions {
  ClassicalOptions classical;
  C1Options c1;
};

std::unique_ptr<LogicBackend> make_backend(LogicKind kind, const BackendOptions& opts = {});

}  // namespace posslog
