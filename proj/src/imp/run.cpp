#include "fixhorn/imp/run.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fixhorn {

Element eval_term(const FiniteStructure& m, const std::vector<std::string>& vars, const Term& t,
                  const State& s) {
    if (t.is_var()) {
        auto it = std::find(vars.begin(), vars.end(), t.name());
        if (it == vars.end()) {
            throw EvalError("unknown program variable " + t.name());
        }
        return s[static_cast<std::size_t>(it - vars.begin())];
    }
    std::vector<Element> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) {
        args.push_back(eval_term(m, vars, a, s));
    }
    return m.apply(t.name(), args);
}

bool eval_guard(Evaluator& ev, const std::vector<std::string>& vars, const Formula& guard,
                const State& s) {
    Valuation val;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        val.emplace(vars[i], s[i]);
    }
    return ev.eval(guard, val);
}

namespace {

class Runner {
public:
    Runner(const FiniteStructure& m, const Program& p, std::size_t fuel)
        : m_(m), ev_(m), vars_(p.vars), fuel_(fuel) {}

    RunStatus exec(const Command& c, State& s) {
        switch (c.kind) {
        case CommandKind::Skip:
            return RunStatus::Terminated;
        case CommandKind::Assign: {
            auto it = std::find(vars_.begin(), vars_.end(), c.var);
            if (it == vars_.end()) {
                throw EvalError("assignment to unknown variable " + c.var);
            }
            s[static_cast<std::size_t>(it - vars_.begin())] = eval_term(m_, vars_, c.value, s);
            return RunStatus::Terminated;
        }
        case CommandKind::Seq: {
            RunStatus r = exec(*c.parts[0], s);
            return r == RunStatus::Terminated ? exec(*c.parts[1], s) : r;
        }
        case CommandKind::If:
            return exec(*c.parts[eval_guard(ev_, vars_, c.guard, s) ? 0 : 1], s);
        case CommandKind::While: {
            // States seen at this loop head during this execution of the loop.
            std::set<State> seen;
            while (true) {
                if (!seen.insert(s).second) {
                    return RunStatus::Diverges;
                }
                if (!eval_guard(ev_, vars_, c.guard, s)) {
                    return RunStatus::Terminated;
                }
                if (iterations_ == fuel_) {
                    return RunStatus::OutOfFuel;
                }
                ++iterations_;
                RunStatus r = exec(*c.parts[0], s);
                if (r != RunStatus::Terminated) {
                    return r;
                }
            }
        }
        }
        throw std::logic_error("unknown command");
    }

    std::size_t iterations() const { return iterations_; }

private:
    const FiniteStructure& m_;
    Evaluator ev_;
    const std::vector<std::string>& vars_;
    std::size_t fuel_;
    std::size_t iterations_ = 0;
};

} // namespace

RunOutcome run(const FiniteStructure& m, const Program& p, State start, std::size_t fuel) {
    if (start.size() != p.vars.size()) {
        throw std::invalid_argument("state does not assign every program variable");
    }
    Runner r(m, p, fuel);
    RunOutcome out;
    out.state = std::move(start);
    out.status = r.exec(*p.body, out.state);
    out.iterations = r.iterations();
    return out;
}

} // namespace fixhorn
