#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "plogic/admissible.hpp"
#include "plogic/connectives.hpp"
#include "plogic/errors.hpp"
#include "plogic/formula.hpp"
#include "plogic/likelihood.hpp"
#include "plogic/lindblad.hpp"

// JSON wire formats:
//   Likelihood      -> [0.25, 0.75]
//   AdmissibleMap   -> {"inputDim": 4, "outputDim": 2, "columns": [0,1,1,1]}
//   ClassFunction   -> {"inputDims": [2,2], "outputDim": 2,
//                       "table": {"0,0": 0, "0,1": 1, ...}}
//   JumpOperator    -> {"rate": 1.0, "create": [1], "annihilate": [0],
//                       "control": []}   (array keys optional)
//   RateModelSpec   -> {"n": 2, "ops": [...]}
//   Environment     -> {"A": [0.5, 0.5], "B": [0.3, 0.7]}

namespace plogic {

/// Wire form of a rate model: mode count plus jump operators.
struct RateModelSpec {
  std::size_t modes = 0;
  std::vector<JumpOperator> ops;

  RateModel build() const { return RateModel(modes, ops); }
};

namespace detail {

template <typename BasicJsonType>
std::vector<std::size_t> sites_or_empty(const BasicJsonType& j,
                                        const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).template get<std::vector<std::size_t>>();
}

inline std::string tuple_key(std::span<const std::size_t> classes) {
  std::string key;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(classes[i]);
  }
  return key;
}

}  // namespace detail

template <typename BasicJsonType>
void to_json(BasicJsonType& j, const JumpOperator& op) {
  j = BasicJsonType{{"rate", op.rate},
                    {"create", op.create},
                    {"annihilate", op.annihilate},
                    {"control", op.control}};
}

template <typename BasicJsonType>
void from_json(const BasicJsonType& j, JumpOperator& op) {
  op.rate = j.at("rate").template get<double>();
  op.create = detail::sites_or_empty(j, "create");
  op.annihilate = detail::sites_or_empty(j, "annihilate");
  op.control = detail::sites_or_empty(j, "control");
}

template <typename BasicJsonType>
void to_json(BasicJsonType& j, const RateModelSpec& spec) {
  j = BasicJsonType{{"n", spec.modes}, {"ops", spec.ops}};
}

template <typename BasicJsonType>
void from_json(const BasicJsonType& j, RateModelSpec& spec) {
  spec.modes = j.at("n").template get<std::size_t>();
  spec.ops = j.at("ops").template get<std::vector<JumpOperator>>();
}

}  // namespace plogic

namespace nlohmann {

template <>
struct adl_serializer<plogic::Likelihood> {
  template <typename BasicJsonType>
  static plogic::Likelihood from_json(const BasicJsonType& j) {
    return plogic::Likelihood(j.template get<std::vector<double>>());
  }
  template <typename BasicJsonType>
  static void to_json(BasicJsonType& j, const plogic::Likelihood& rho) {
    j = rho.probs();
  }
};

template <>
struct adl_serializer<plogic::AdmissibleMap> {
  template <typename BasicJsonType>
  static plogic::AdmissibleMap from_json(const BasicJsonType& j) {
    return plogic::AdmissibleMap(
        j.at("inputDim").template get<std::size_t>(),
        j.at("outputDim").template get<std::size_t>(),
        j.at("columns").template get<std::vector<std::size_t>>());
  }
  template <typename BasicJsonType>
  static void to_json(BasicJsonType& j, const plogic::AdmissibleMap& g) {
    j = BasicJsonType{{"inputDim", g.input_dim()},
                      {"outputDim", g.output_dim()},
                      {"columns", g.column_targets()}};
  }
};

template <>
struct adl_serializer<plogic::ClassFunction> {
  template <typename BasicJsonType>
  static plogic::ClassFunction from_json(const BasicJsonType& j) {
    auto dims = j.at("inputDims").template get<std::vector<std::size_t>>();
    auto output_dim = j.at("outputDim").template get<std::size_t>();
    const auto& table = j.at("table");

    // Walk all tuples in flat order; every one must be present.
    std::size_t count = 1;
    for (std::size_t d : dims) count *= d;
    std::vector<std::size_t> flat;
    flat.reserve(count);
    std::vector<std::size_t> tuple(dims.size(), 0);
    for (std::size_t i = 0; i < count; ++i) {
      const std::string key = plogic::detail::tuple_key(tuple);
      if (!table.contains(key))
        throw plogic::DomainError("class function table is missing tuple (" +
                                  key + ")");
      flat.push_back(table.at(key).template get<std::size_t>());
      for (std::size_t pos = dims.size(); pos-- > 0;) {
        if (++tuple[pos] < dims[pos]) break;
        tuple[pos] = 0;
      }
    }
    return plogic::ClassFunction(std::move(dims), output_dim, std::move(flat));
  }

  template <typename BasicJsonType>
  static void to_json(BasicJsonType& j, const plogic::ClassFunction& f) {
    BasicJsonType table = BasicJsonType::object();
    std::vector<std::size_t> tuple(f.arity(), 0);
    for (std::size_t i = 0; i < f.table().size(); ++i) {
      table[plogic::detail::tuple_key(tuple)] = f.table()[i];
      for (std::size_t pos = f.arity(); pos-- > 0;) {
        if (++tuple[pos] < f.input_dims()[pos]) break;
        tuple[pos] = 0;
      }
    }
    j = BasicJsonType{{"inputDims", f.input_dims()},
                      {"outputDim", f.output_dim()},
                      {"table", std::move(table)}};
  }
};

}  // namespace nlohmann
