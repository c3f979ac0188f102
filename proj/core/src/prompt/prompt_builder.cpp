// Copyright 2026 The plan-x Authors
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

#include "planx/prompt/prompt_builder.hpp"

#include <sstream>

#include "planx/pddl/printer.hpp"

namespace planx::prompt {
namespace {

const char kDefaultTaskDefinition[] =
    "You are working in an office environment. You have to provide responses "
    "to queries from employees or clients related to sales.";

}  // namespace

std::string build_prompt(const PromptInputs& inputs) {
  const pddl::Domain& domain = *inputs.domain;
  std::ostringstream os;

  os << (inputs.task_definition.empty() ? kDefaultTaskDefinition
                                        : inputs.task_definition.c_str())
     << '\n';

  if (!inputs.schemas.empty()) {
    os << "Information is present on several systems of records (SOR). The "
          "schemas (columns) of those systems and their values are the "
          "following:\n";
    for (size_t i = 0; i < inputs.schemas.size(); ++i) {
      os << "Schema for SOR " << (i + 1) << " (" << inputs.schemas[i].name
         << "): [";
      for (size_t c = 0; c < inputs.schemas[i].columns.size(); ++c)
        os << (c ? ", " : "") << inputs.schemas[i].columns[c];
      os << "]\n";
    }
    os << "Pay attention to the upper or lower case of the fields in the "
          "provided schema when creating queries to the databases. Given a "
          "request, choose the appropriate SOR, and identify a set of intents "
          "on that request.\n";
  } else {
    os << "Given a request, identify a set of intents on that request.\n";
  }

  os << "Then, return a Python dictionary that contains information on all "
        "intents. You should not define a function or provide python code, "
        "but return the dictionary as your output. Do not use external "
        "tools. The keys of the dictionary are the elements of the task "
        "(entities), the 'init_state' and the 'goals'. All keys have to be "
        "in lower case. 'init_state' and 'goals' are mandatory. The values "
        "of the dictionary keys are definition dictionaries. A definition "
        "dictionary is a python dictionary, where the keys are 'type', "
        "'value', and some other element specific keys, such as 'to', "
        "'body', or 'subject' for emails.\n";

  os << "The types of the task are: ";
  for (size_t i = 0; i < domain.types.size(); ++i)
    os << (i ? ", " : "") << domain.types[i].name;
  os << (domain.types.empty() ? "object" : ", object") << ".\n";
  os << "The entities' values should be extracted from the intents on the "
        "request. You cannot use as keys of dictionary the names of types "
        "and you cannot use repeated keys.\n";

  os << "The value of 'init_state' is a string whose contents is a state, "
        "where a state is a sequence of literals separated by spaces. The "
        "init_state represents what is known to be true at the beginning. "
        "Each literal is a tuple whose elements are separated by spaces. The "
        "first element of the literals is a predicate from the following "
        "list where each element is of the form "
        "(<predicate-name> <parameters>):\n";
  for (const pddl::Predicate& pred : domain.predicates)
    os << '\t' << pddl::render_predicate(pred) << '\n';
  os << "The parameters are defined as: <variable> - <type>.\n";

  os << "The actions that can be planned over these predicates are: ";
  for (size_t i = 0; i < domain.actions.size(); ++i)
    os << (i ? ", " : "") << domain.actions[i].name;
  os << ".\n";

  os << "The value of 'goals' is the list of intents, also represented as a "
        "state (list of literals). Take the types into account when defining "
        "the literals in the states (init_state and goals). For example, if "
        "you want to express that a file F contains a dataframe D, add to "
        "the init_state the literal '(in D F)'. You cannot use elements of "
        "other types as arguments of the corresponding predicate. Make sure "
        "all parameters of all literals that appear in the 'init_state' and "
        "'goals' have an entry in the output dictionary. Everything that is "
        "true at start should be in the 'init_state'. Everything that you "
        "would like to be true at the end should be specified in the "
        "'goals'. Do not include literals from the goals in the initial "
        "state.\n";

  os << "If you find more than one intent in the request, merge the "
        "dictionaries into a single dictionary. In order to merge the "
        "dictionaries, add all entities found. Also, the merged "
        "'init_state' will be the list of all literals in all the intents' "
        "'init_state'. Likewise, the merged 'goals' will be the list of all "
        "literals on all intents' 'goals'.\n";

  os << "This is important: only use one chat response. Make sure you format "
        "the output properly and take into account all the previous "
        "constraints. When creating queries to databases please take into "
        "account semantics. As an example, if the request asks about not "
        "matched transactions, check for all semantically equivalent values, "
        "as unmatched. Do not return Output: in the output.\n";

  if (inputs.catalog != nullptr && !inputs.catalog->intents().empty()) {
    os << "I will give you now several examples with their corresponding "
          "output as 'Intent: <intent> Output: <dictionary>'.\nExamples:\n\n";
    for (const intent::Intent& intent : inputs.catalog->intents()) {
      os << "Intent: " << intent.name << '\n'
         << "Output:\n"
         << intent.example.dump() << "\n\n";
    }
  }

  if (!inputs.entities.empty()) {
    os << "Entities detected:\n";
    for (const auto& [type, matches] : inputs.entities.groups) {
      os << type << ": [";
      for (size_t i = 0; i < matches.size(); ++i)
        os << (i ? ", " : "") << matches[i].text;
      os << "]\n";
    }
  }

  os << "Request: " << inputs.request << '\n';
  return os.str();
}

}  // namespace planx::prompt
