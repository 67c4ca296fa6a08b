import re

_AC_PATTERN = re.compile(r"test_acceptance\.py::test_ac(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    results = {}
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            m = _AC_PATTERN.search(getattr(rep, "nodeid", ""))
            if m is None:
                continue
            if getattr(rep, "when", "call") not in ("call", "setup"):
                continue
            num = int(m.group(1))
            topic = m.group(2).replace("_", " ")
            # A failed setup and a failed call both count as FAIL.
            if results.get(num, (None, "PASS"))[1] != "FAIL":
                results[num] = (topic, label)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        topic, label = results[num]
        terminalreporter.write_line(f"AC{num} {label}: {topic}")
