#pragma once

#include <string>
#include <vector>

namespace msg
{

struct CheckRecord
{
	enum class Status
	{
		Pass,
		Fail,
		Info
	};

	std::string id;
	Status status = Status::Info;
	std::string detail;   // residual or value, canonical print
	int matched_sign = 0; // 0 when not applicable
	std::string witness;
};

struct Report
{
	std::string command;
	std::vector<CheckRecord> checks;

	void pass(std::string id, std::string detail = "0", int sign = 0,
	          std::string witness = "");
	void fail(std::string id, std::string detail, int sign = 0);
	void info(std::string id, std::string detail);
	void check(std::string id, bool ok, std::string detail = "0",
	           int sign = 0);

	int passed() const;
	int failed() const;
	bool ok() const { return failed() == 0; }

	std::string text() const;
	std::string json() const;
};

} // namespace msg
