#include "msg/report.hpp"

#include <json.hpp>

namespace msg
{

void Report::pass(std::string id, std::string detail, int sign,
                  std::string witness)
{
	checks.push_back({std::move(id), CheckRecord::Status::Pass,
	                  std::move(detail), sign, std::move(witness)});
}

void Report::fail(std::string id, std::string detail, int sign)
{
	checks.push_back(
	    {std::move(id), CheckRecord::Status::Fail, std::move(detail), sign, ""});
}

void Report::info(std::string id, std::string detail)
{
	checks.push_back(
	    {std::move(id), CheckRecord::Status::Info, std::move(detail), 0, ""});
}

void Report::check(std::string id, bool ok, std::string detail, int sign)
{
	if (ok)
		pass(std::move(id), std::move(detail), sign);
	else
		fail(std::move(id), std::move(detail), sign);
}

int Report::passed() const
{
	int n = 0;
	for (auto const &c : checks)
		n += c.status == CheckRecord::Status::Pass;
	return n;
}

int Report::failed() const
{
	int n = 0;
	for (auto const &c : checks)
		n += c.status == CheckRecord::Status::Fail;
	return n;
}

static char const *status_name(CheckRecord::Status s)
{
	switch (s)
	{
	case CheckRecord::Status::Pass:
		return "pass";
	case CheckRecord::Status::Fail:
		return "fail";
	default:
		return "info";
	}
}

std::string Report::text() const
{
	std::string out = "== " + command + " ==\n";
	for (auto const &c : checks)
	{
		out += status_name(c.status);
		out += "  " + c.id + "  " + c.detail;
		if (c.matched_sign != 0)
			out += std::string("  sign=") +
			       (c.matched_sign > 0 ? "+1" : "-1");
		if (!c.witness.empty())
			out += "  witness=" + c.witness;
		out += "\n";
	}
	out += "summary: " + std::to_string(passed()) + " passed, " +
	       std::to_string(failed()) + " failed, " +
	       std::to_string((int)checks.size() - passed() - failed()) +
	       " info\n";
	return out;
}

std::string Report::json() const
{
	nlohmann::ordered_json j;
	j["command"] = command;
	j["checks"] = nlohmann::ordered_json::array();
	for (auto const &c : checks)
	{
		nlohmann::ordered_json e;
		e["id"] = c.id;
		e["status"] = status_name(c.status);
		e["residual"] = c.detail;
		if (c.matched_sign != 0)
			e["matched_sign"] = c.matched_sign;
		if (!c.witness.empty())
			e["witness"] = c.witness;
		j["checks"].push_back(e);
	}
	j["summary"] = {{"passed", passed()},
	                {"failed", failed()},
	                {"info", (int)checks.size() - passed() - failed()}};
	return j.dump(2) + "\n";
}

} // namespace msg
